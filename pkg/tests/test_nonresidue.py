import math
from collections import defaultdict

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nrlab.arith import is_prime, legendre
from nrlab.nonresidue import (
    DEFAULT_THRESHOLDS,
    ExponentThresholds,
    SearchExhausted,
    gauss_bound_check,
    least_nonresidue,
    least_nonresidue_in_ap,
    scan,
    structure_check,
)

from oracles import linear_least_nonresidue, trial_primes


class TestThresholds:
    def test_pinned_values(self):
        t = DEFAULT_THRESHOLDS
        assert t.burgess == pytest.approx(0.151632664928158, abs=1e-12)
        assert t.claimed == pytest.approx(0.091969860293, abs=1e-10)
        assert t.gap == pytest.approx(0.0596628046352978, abs=1e-13)

    def test_frozen(self):
        with pytest.raises(AttributeError):
            DEFAULT_THRESHOLDS.burgess = 0.2


class TestLeastNonresidue:
    def test_examples(self):
        assert least_nonresidue(3).n_p == 2
        assert least_nonresidue(7).n_p == 3
        assert least_nonresidue(17).n_p == 3

    def test_exponent_definition(self):
        rec = least_nonresidue(71)
        assert rec.n_p == 7
        assert rec.exponent == math.log(7) / math.log(71)
        assert 0 < rec.exponent < 1

    def test_prime_skip_matches_full_linear_search(self):
        # skipping composite candidates is only valid because the character
        # is completely multiplicative; confirm against a full search
        for p in trial_primes(3, 2_000):
            assert least_nonresidue(p).n_p == linear_least_nonresidue(p)

    def test_result_is_prime(self):
        for p in trial_primes(3, 2_000):
            assert is_prime(least_nonresidue(p).n_p)

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            least_nonresidue(2)
        with pytest.raises(ValueError):
            least_nonresidue(10)


class TestLeastNonresidueInAP:
    def test_examples(self):
        assert least_nonresidue_in_ap(7, 1, 2).n_p == 3
        assert least_nonresidue_in_ap(17, 1, 1).n_p == 3
        assert least_nonresidue_in_ap(23, 2, 3).n_p == 5

    def test_progression_recorded(self):
        rec = least_nonresidue_in_ap(23, 2, 3)
        assert rec.progression == (2, 3)
        assert rec.exponent == math.log(5) / math.log(23)

    def test_unit_progression_reduces_to_plain(self):
        for p in trial_primes(3, 500):
            assert least_nonresidue_in_ap(p, 1, 1).n_p == least_nonresidue(p).n_p

    def test_candidate_need_not_be_prime(self):
        # squares mod 17 are {1,2,4,8,9,13,15,16}; the walk 4, 9, 14 stops at
        # the composite 14
        rec = least_nonresidue_in_ap(17, 4, 5)
        assert rec.n_p == 14

    def test_validation(self):
        with pytest.raises(ValueError):
            least_nonresidue_in_ap(23, 3, 6)  # gcd != 1
        with pytest.raises(ValueError):
            least_nonresidue_in_ap(23, 5, 3)  # a >= q
        with pytest.raises(ValueError):
            least_nonresidue_in_ap(23, 0, 3)
        with pytest.raises(ValueError):
            least_nonresidue_in_ap(23, 2, 1)  # q = 1 forces a = 1

    def test_exhaustion(self):
        # only n = 1 lies below p = 7 in the progression 1 mod 11
        with pytest.raises(SearchExhausted):
            least_nonresidue_in_ap(7, 1, 11)

    def test_soft_warning(self):
        with pytest.warns(UserWarning):
            least_nonresidue_in_ap(23, 2, 3, warn_exponent=0.1)

    @given(st.sampled_from(trial_primes(5, 400)), st.integers(min_value=2, max_value=12))
    @settings(max_examples=80)
    def test_hit_is_least_in_progression(self, p, q):
        for a in range(1, q):
            if math.gcd(a, q) != 1:
                continue
            try:
                rec = least_nonresidue_in_ap(p, a, q)
            except SearchExhausted:
                continue
            n = rec.n_p
            assert n % q == a % q and n >= 2
            assert legendre(n, p) == -1
            for m in range(a if a >= 2 else a + q, n, q):
                assert legendre(m, p) != -1


class TestScan:
    def test_single_prime(self):
        result = scan(3, 3)
        assert len(result.records) == 1
        rec = result.records[0]
        assert (rec.p, rec.n_p) == (3, 2)
        assert rec.exponent == pytest.approx(0.6309297535714574, abs=1e-15)

    def test_empty_range(self):
        result = scan(24, 28)
        assert result.records == []
        assert result.summary.scanned == 0
        assert result.summary.record_breakers == []

    def test_range_to_100_against_brute_force(self):
        # brute-force truth: the record n_p values are 2, 3, 5, 7 and the
        # largest exponent over [3, 100] sits at p = 3
        result = scan(3, 100)
        s = result.summary
        assert s.scanned == 24
        assert s.record_breakers == [(3, 2), (7, 3), (23, 5), (71, 7)]
        assert s.max_n_p == 7 and s.max_n_p_at == 71
        assert s.max_exponent == pytest.approx(math.log(2) / math.log(3), abs=1e-15)
        assert s.max_exponent_p == 3
        expected = {p: linear_least_nonresidue(p) for p in trial_primes(3, 100)}
        assert {r.p: r.n_p for r in result.records} == expected

    def test_records_only_keeps_breakers(self):
        result = scan(3, 100, records_only=True)
        assert [(r.p, r.n_p) for r in result.records] == [(3, 2), (7, 3), (23, 5), (71, 7)]

    def test_rows_flag_records(self):
        rows = list(scan(3, 30).rows())
        flagged = [(r["p"], r["n_p"]) for r in rows if r["is_record"]]
        assert flagged == [(3, 2), (7, 3), (23, 5)]

    def test_threshold_counters(self):
        ts = ExponentThresholds()
        result = scan(3, 1000, thresholds=ts)
        over_b = sum(1 for r in result.records if r.exponent > ts.burgess)
        over_c = sum(1 for r in result.records if r.exponent > ts.claimed)
        assert result.summary.over_burgess == over_b
        assert result.summary.over_claimed == over_c

    def test_parallel_scan_identical(self):
        seq = scan(3, 20_000, workers=1)
        par = scan(3, 20_000, workers=2)
        assert [(r.p, r.n_p) for r in seq.records] == [(r.p, r.n_p) for r in par.records]
        assert seq.summary.one_line() == par.summary.one_line()
        assert seq.summary.record_breakers == par.summary.record_breakers

    def test_exponent_monotone_within_fixed_n_p(self):
        # for fixed n, log n / log p strictly decreases in p
        by_n = defaultdict(list)
        for rec in scan(3, 2000).records:
            by_n[rec.n_p].append(rec.exponent)
        for n_p, exps in by_n.items():
            assert exps == sorted(exps, reverse=True), n_p

    def test_validation(self):
        with pytest.raises(ValueError):
            scan(10, 5)


class TestGaussBound:
    def test_trivial_case(self):
        v = gauss_bound_check(3, 3)
        assert v.passed and v.checked == 1
        assert v.worst_ratio == pytest.approx(2 / (2 * math.sqrt(3) + 1))

    def test_range_100(self):
        # worst ratio over [3, 100] is at p = 7 (3 against 2 sqrt 7 + 1);
        # the largest n_p is 7 at p = 71, well under its bound 17.85
        v = gauss_bound_check(3, 100)
        assert v.passed
        assert v.worst_case == {"p": 7, "n_p": 3}
        assert v.worst_ratio == pytest.approx(3 / (2 * math.sqrt(7) + 1))

    def test_structure_check_includes_everything(self):
        v = structure_check(3, 2000)
        assert v.passed
        assert v.failures == []
        assert "max n_p=17 at p=1559" in v.notes

    def test_mod8_rule(self):
        for p in trial_primes(3, 2000):
            n = least_nonresidue(p).n_p
            assert (n == 2) == (p % 8 in (3, 5))
