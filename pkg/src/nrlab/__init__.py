"""nrlab: desk-scale lab for quadratic nonresidues, character sums, and prime sums."""

from .arith import PrimeModulus, chi_table, is_prime, legendre, legendre_euler, pow_mod, primes_in
from .charsums import (
    SumParams,
    SumReport,
    burgess_delta,
    char_sum,
    equivalent_sum_difference,
    frac_fourier_error,
    geometric_sum,
    weighted_sum,
)
from .nonresidue import (
    ExponentThresholds,
    NonresidueRecord,
    gauss_bound_check,
    least_nonresidue,
    least_nonresidue_in_ap,
    scan,
)
from .primesums import (
    AsymptoticReport,
    PrimeSumParams,
    floor_weight_prime_sum,
    frac_part_prime_sum,
    mertens_slice,
    prime_char_sum,
    prime_indicator,
    twisted_floor_prime_sum,
    von_mangoldt,
)
from .shrinking import (
    DecompositionReport,
    ShrinkingVerdict,
    contradiction_audit,
    decompose,
    shrinking_test,
    vinogradov_test,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticReport",
    "DecompositionReport",
    "ExponentThresholds",
    "NonresidueRecord",
    "PrimeModulus",
    "PrimeSumParams",
    "ShrinkingVerdict",
    "SumParams",
    "SumReport",
    "burgess_delta",
    "char_sum",
    "chi_table",
    "contradiction_audit",
    "decompose",
    "equivalent_sum_difference",
    "floor_weight_prime_sum",
    "frac_fourier_error",
    "frac_part_prime_sum",
    "gauss_bound_check",
    "geometric_sum",
    "is_prime",
    "least_nonresidue",
    "least_nonresidue_in_ap",
    "legendre",
    "legendre_euler",
    "mertens_slice",
    "pow_mod",
    "prime_char_sum",
    "prime_indicator",
    "primes_in",
    "scan",
    "shrinking_test",
    "twisted_floor_prime_sum",
    "vinogradov_test",
    "von_mangoldt",
    "weighted_sum",
]
