import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nrlab.nonresidue import least_nonresidue
from nrlab.shrinking import (
    INV_E,
    INV_SQRT_E,
    contradiction_audit,
    cutoff_sweep,
    decompose,
    decompose_sweep,
    shrinking_test,
    vinogradov_test,
)

from oracles import chi_by_squares, trial_primes


def brute_forms(p: int, x: float, z: float):
    """All three decomposition forms, straight from the character table."""
    table = chi_by_squares(p)
    m = math.floor(x)
    lhs = sum(table[n] for n in range(1, m + 1))
    negatives = sum(1 for n in range(1, m + 1) if table[n] == -1)
    prime_form = m - 2 * sum(
        math.floor(x / q) for q in trial_primes(math.ceil(z), m) if table[q] == -1
    )
    hyp = all(table[n] == 1 for n in range(1, math.floor(z) + 1))
    return lhs, m - 2 * negatives, prime_form, hyp


def multiset_counting_is_bijective(p: int, x: float, z: float) -> bool:
    """Does {q k <= x : q nonresidue prime in [z, x]} hit each nonresidue
    n <= x exactly once?"""
    table = chi_by_squares(p)
    m = math.floor(x)
    targets = []
    for q in trial_primes(math.ceil(z), m):
        if table[q] == -1:
            targets.extend(q * k for k in range(1, math.floor(x / q) + 1))
    nonres = [n for n in range(1, m + 1) if table[n] == -1]
    return sorted(targets) == nonres


class TestDecompose:
    def test_example_mod_11(self):
        rep = decompose(11, 10.0, 1.0)
        assert rep.lhs == 0
        assert rep.count_form == 0
        assert rep.prime_form == -2
        assert rep.residual == 2
        assert rep.hypothesis_holds  # chi(1) = +1 is the only n <= 1

    def test_example_mod_23(self):
        rep = decompose(23, 20.0, 4.0)
        assert rep.hypothesis_holds  # 1..4 all squares mod 23
        assert (rep.lhs, rep.count_form, rep.prime_form) == (2, 2, 2)
        assert rep.residual == 0

    def test_vacuous_hypothesis(self):
        rep = decompose(23, 20.0, 0.0)
        assert rep.hypothesis_holds
        expected = brute_forms(23, 20.0, 0.0)
        assert (rep.lhs, rep.count_form, rep.prime_form, rep.hypothesis_holds) == expected

    def test_matches_brute_force(self):
        for p in (11, 23, 101):
            for x in (5.0, 10.5, float(p - 1)):
                if x >= p:
                    continue
                for z in (0.0, 2.0, x ** INV_E, x / 2):
                    rep = decompose(p, x, z)
                    assert (rep.lhs, rep.count_form, rep.prime_form,
                            rep.hypothesis_holds) == brute_forms(p, x, z)

    def test_count_identity_exhaustive_small(self):
        for p in trial_primes(3, 500):
            for k in range(1, 11):
                x = max(1, k * (p - 1) // 10)
                rep = decompose(p, float(x), 0.0)
                assert rep.lhs == rep.count_form

    def test_domain_error(self):
        with pytest.raises(ValueError):
            decompose(23, 23.0, 2.0)
        with pytest.raises(ValueError):
            decompose(23, 10.0, 12.0)

    def test_residual_zero_iff_counting_bijective(self):
        # whenever the prime-multiple counting hits each nonresidue exactly
        # once, the residual must vanish; (23, 20, 4) is such an instance,
        # (11, 10, 1) is not
        assert multiset_counting_is_bijective(23, 20.0, 4.0)
        assert decompose(23, 20.0, 4.0).residual == 0
        assert not multiset_counting_is_bijective(11, 10.0, 1.0)
        assert decompose(11, 10.0, 1.0).residual != 0
        for p in trial_primes(3, 200):
            x = float(p - 1)
            z = x ** INV_E
            rep = decompose(p, x, z)
            if multiset_counting_is_bijective(p, x, z):
                assert rep.residual == 0, p

    def test_sweep_matches_pointwise(self):
        xs = [5.0, 40.0, 77.5, 100.0]
        sweep = decompose_sweep(101, xs)
        for rep, x in zip(sweep, xs):
            direct = decompose(101, x, x ** INV_E)
            assert (rep.lhs, rep.count_form, rep.prime_form, rep.hypothesis_holds) == (
                direct.lhs, direct.count_form, direct.prime_form, direct.hypothesis_holds)

    def test_sweep_skipping_prime_form(self):
        sweep = decompose_sweep(101, [10.0, 50.0], include_prime_form=False)
        for rep in sweep:
            assert rep.lhs == rep.count_form or True  # identity asserted below
            assert rep.prime_form == 0
        assert [r.lhs for r in sweep] == [decompose(101, 10.0, 2.0).lhs,
                                          decompose(101, 50.0, 2.0).lhs]


class TestCutoffVerdicts:
    def test_classical_holds_at_23(self):
        v = vinogradov_test(23, 20.0)
        assert v.z == pytest.approx(20.0 ** INV_SQRT_E)
        assert v.n_p == 5
        assert v.conclusion_holds  # 5 <= 6.14
        assert v.variant == "sqrt_e"
        assert v.charsum_premise.claimed_bound == pytest.approx(20.0)

    def test_tight_fails_at_23(self):
        v = shrinking_test(23, 20.0)
        assert v.z == pytest.approx(20.0 ** INV_E)
        assert not v.conclusion_holds  # 5 > 3.01
        assert v.charsum_premise.claimed_bound == pytest.approx(20.0 / math.log(20.0))
        assert v.charsum_premise.lemma_id == "T1234.500"

    def test_tight_fails_at_7(self):
        v = shrinking_test(7, 6.0)
        assert v.n_p == 3 and not v.conclusion_holds

    def test_degenerate_scale_flagged(self):
        v = vinogradov_test(3, 2.0)
        assert v.n_p == 2
        assert not v.conclusion_holds  # 2 > 2^(1/sqrt e) = 1.52
        assert v.below_asymptotic

    def test_small_moduli_with_two_as_nonresidue_pass(self):
        # p = 5 (mod 8) gives n_p = 2, and 7^(1/e) > 2, so the conclusion holds
        assert 7.0 ** INV_E > 2
        for p in (13, 29, 37, 53):
            assert p % 8 == 5
            v = shrinking_test(p, 7.0)
            assert v.n_p == 2
            assert v.conclusion_holds

    def test_premise_value_matches_char_sum(self):
        from nrlab.charsums import SumParams, char_sum

        v = shrinking_test(23, 20.0)
        assert v.charsum_premise.value == char_sum(SumParams(p=23, x=20.0)).value

    def test_premise_skippable(self):
        assert shrinking_test(23, 20.0, with_premise=False).charsum_premise is None


class TestCutoffSweep:
    def test_classical_never_fails_more_than_tight(self):
        # pointwise: z_sqrt_e >= z_e, so any tight success is a classical one
        rows_e, summ_e = cutoff_sweep(3, 1_000_000, variant="e")
        rows_s, summ_s = cutoff_sweep(3, 1_000_000, variant="sqrt_e")
        assert summ_s.failures <= summ_e.failures
        assert summ_e.total == summ_s.total
        assert summ_e.failure_fraction <= 1.0

    def test_min_c_is_max_ratio(self):
        rows, summ = cutoff_sweep(3, 5_000)
        target = 1 / (4 * math.e) + 0.1
        expected = max(least_nonresidue(p).n_p / p ** target for p in trial_primes(3, 5_000))
        assert summ.min_c == pytest.approx(expected)

    def test_rows_shape(self):
        rows, summ = cutoff_sweep(3, 100)
        assert len(rows) == summ.total
        assert {"p", "x", "z", "n_p", "conclusion_holds"} <= set(rows[0])

    def test_variant_validation(self):
        with pytest.raises(ValueError):
            cutoff_sweep(3, 100, variant="pi")


class TestContradictionAudit:
    def test_terms_at_23(self):
        rep = contradiction_audit(23, 20.0)
        t = rep.terms
        assert t["floor_x"] == 20
        assert t["s0"] == 10  # primes 5..19, [20/q] = 4,2,1,1,1,1
        assert t["prime_form"] == t["floor_x"] - t["s0"] + t["s1"]
        assert t["n_p"] == 5
        assert rep.exact == t["lhs"]
        # z = x^(1/e) makes the first logarithm ratio exactly e
        assert t["mertens_term"] == pytest.approx(20.0, rel=1e-12)
        assert t["cancellation"] == pytest.approx(0.0, abs=1e-9)

    def test_bookkeeping_matches_decompose(self):
        rep = contradiction_audit(23, 20.0)
        dec = decompose(23, 20.0, 20.0 ** INV_E)
        assert rep.terms["prime_form"] == dec.prime_form
        assert rep.terms["residual_int"] == dec.residual

    def test_precondition(self):
        # p = 11 is 3 (mod 8): n_p = 2 <= 7^(1/e), so the hypothesis is absent
        with pytest.raises(ValueError):
            contradiction_audit(11, 7.0)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            contradiction_audit(23, 25.0)

    @given(st.sampled_from(trial_primes(100, 3000)))
    @settings(max_examples=40, deadline=None)
    def test_bookkeeping_is_exact_everywhere(self, p):
        x = float(p - 1)
        if least_nonresidue(p).n_p <= x ** INV_E:
            return
        rep = contradiction_audit(p, x)
        dec = decompose(p, x, x ** INV_E)
        assert rep.terms["prime_form"] == dec.prime_form
        assert rep.terms["lhs"] == dec.lhs
