import math

import numpy as np
import pytest
import sympy

from core.errors import DomainError
from core.goldbach import (bertrand_check, bertrand_sweep, count_prime_pairs, first_unpaired,
                           goldbach_pairs, line_points, pair_count_table, phi_primality_crosscheck,
                           symmetric_pairs, totient_pair_search)
from core.sieve import prime_mask_upto


class TestGoldbachPairs:
    def test_thirty_six(self):
        report = goldbach_pairs(36)
        assert report.prime_pairs == ((5, 31), (7, 29), (13, 23), (17, 19))
        assert report.candidate_pairs == ((1, 35), (5, 31), (7, 29), (11, 25), (13, 23), (17, 19))
        assert report.failing_candidates() == [(1, 35), (11, 25)]
        assert report.pair_count == 4

    def test_smallest_targets(self):
        assert goldbach_pairs(4).prime_pairs == ((2, 2),)
        assert goldbach_pairs(4).candidate_pairs == ((1, 3),)
        assert goldbach_pairs(6).prime_pairs == ((3, 3),)

    @pytest.mark.parametrize("bad", [3, 2, 0, -4, 37])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            goldbach_pairs(bad)

    def test_hundred_matches_double_loop(self):
        primes = list(sympy.primerange(2, 101))
        brute = tuple(sorted((p, q) for p in primes for q in primes if p <= q and p + q == 100))
        assert goldbach_pairs(100).prime_pairs == brute

    def test_report_invariants(self):
        for two_m in range(4, 502, 2):
            report = goldbach_pairs(two_m)
            assert report.prime_pairs
            for p, q in report.prime_pairs:
                assert p + q == two_m and p <= q
                assert sympy.isprime(p) and sympy.isprime(q)
                if two_m > 4:
                    assert p % 2 == 1 and q % 2 == 1
            for x, y in report.candidate_pairs:
                assert x + y == two_m and math.gcd(x, two_m) == 1 and x <= two_m // 2

    def test_coprime_prime_pairs_are_candidates(self):
        for two_m in range(6, 2002, 2):
            report = goldbach_pairs(two_m)
            candidates = set(report.candidate_pairs)
            for p, q in report.prime_pairs:
                if math.gcd(p, two_m) == 1:
                    assert (p, q) in candidates


class TestTotientSearch:
    def test_symmetric_pairs_is_symmetric(self):
        assert symmetric_pairs(goldbach_pairs(36)) == {
            (5, 31), (31, 5), (7, 29), (29, 7), (13, 23), (23, 13), (17, 19), (19, 17)
        }

    def test_diagonal_pairs(self):
        assert totient_pair_search(4) == {(2, 2)}
        assert totient_pair_search(6) == {(3, 3)}

    def test_agrees_with_sieve_up_to_2000(self):
        for two_m in range(4, 2002, 2):
            assert phi_primality_crosscheck(two_m), two_m

    def test_literal_second_branch_admits_composites(self):
        assert (7, 9) in totient_pair_search(16, literal=True)
        assert (7, 9) not in totient_pair_search(16)
        assert totient_pair_search(16) == symmetric_pairs(goldbach_pairs(16))


class TestLinePoints:
    def test_classification(self):
        points = line_points(36)
        assert [pt.x for pt in points] == list(range(1, 36))
        assert all(pt.x + pt.y == 36 for pt in points)
        assert [pt.x for pt in points if pt.coprime] == [1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35]
        assert [pt.x for pt in points if pt.prime_pair] == [5, 7, 13, 17, 19, 23, 29, 31]

    def test_prime_pairs_on_four(self):
        assert [(pt.x, pt.prime_pair, pt.coprime) for pt in line_points(4)] == [
            (1, False, True), (2, True, False), (3, False, True)
        ]


class TestPairCounts:
    def test_matches_enumeration(self):
        mask = prime_mask_upto(2000)
        counts = count_prime_pairs(mask, 4, 2000)
        expected = [goldbach_pairs(n).pair_count for n in range(4, 2001, 2)]
        assert counts.tolist() == expected

    def test_every_even_up_to_hundred_thousand_has_a_pair(self):
        counts = count_prime_pairs(prime_mask_upto(10**5), 4, 10**5)
        assert counts.size == (10**5 - 4) // 2 + 1
        assert counts.min() >= 1
        assert counts[0] == 1

    def test_sub_block(self):
        mask = prime_mask_upto(1000)
        whole = count_prime_pairs(mask, 0, 1000)
        assert np.array_equal(count_prime_pairs(mask, 500, 700), whole[250:351])
        assert whole[:2].tolist() == [0, 0]

    def test_bad_bounds(self):
        mask = prime_mask_upto(100)
        with pytest.raises(DomainError):
            count_prime_pairs(mask, 5, 100)
        with pytest.raises(DomainError):
            count_prime_pairs(mask, 100, 4)
        with pytest.raises(DomainError):
            count_prime_pairs(mask, 4, 102)

    def test_table_indexed_by_target(self):
        mask = prime_mask_upto(500)
        table = pair_count_table(mask, 500)
        assert table.size == 501
        assert np.array_equal(table[4::2], count_prime_pairs(mask, 4, 500))
        # odd targets pair only with 2
        assert table[9] == 1 and table[11] == 0
        assert not table.flags.writeable

    def test_first_unpaired(self):
        assert first_unpaired(np.array([1, 0, 2]), 4) == 6
        assert first_unpaired(np.array([0, 0, 1, 1]), 0) is None
        assert first_unpaired(np.array([], dtype=np.int64), 4) is None


class TestBertrand:
    def test_examples(self):
        assert bertrand_check(18) == 19
        assert bertrand_check(3) == 5
        assert bertrand_check(10**6) == 1000003

    def test_large_m_searches_only_near_m(self):
        assert bertrand_check(10**12) == 1000000000039
        assert bertrand_check(2**61) == sympy.nextprime(2**61)

    @pytest.mark.parametrize("bad", [2, 1, 0, -7])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            bertrand_check(bad)

    def test_sweep_matches_single_checks(self):
        report = bertrand_sweep(3, 500)
        assert report.checked == 498
        assert (report.tightest_m, report.tightest_witness) == (3, 5)
        for m in range(3, 501):
            assert m < bertrand_check(m) < 2 * m

    def test_sweep_to_a_million(self):
        report = bertrand_sweep(3, 10**6)
        assert report.checked == 10**6 - 2
        assert (report.tightest_m, report.tightest_witness) == (3, 5)

    def test_sweep_domain(self):
        with pytest.raises(DomainError):
            bertrand_sweep(2, 10)
        with pytest.raises(DomainError):
            bertrand_sweep(20, 10)
