import bisect
import math

import pytest
import sympy

from core.errors import DomainError
from core.twins import TwinPair, near_miss_pairs, twin_count_upto, twin_pairs_upto
from core.unit_group import UnitClass, build_group, co_opposite

from conftest import trial_division


def as_tuples(pairs):
    return [(pair.p, pair.q) for pair in pairs]


class TestTwinPairs:
    def test_up_to_26(self):
        pairs = as_tuples(twin_pairs_upto(26))
        assert pairs == [(3, 5), (5, 7), (11, 13), (17, 19)]
        assert (2, 3) not in pairs

    def test_nothing_fits_below_five(self):
        assert twin_pairs_upto(4) == []
        assert twin_pairs_upto(3) == []
        assert as_tuples(twin_pairs_upto(5)) == [(3, 5)]

    @pytest.mark.parametrize("n", [2, 0, -10])
    def test_domain(self, n):
        with pytest.raises(DomainError):
            twin_pairs_upto(n)

    def test_matches_brute_force_scan(self):
        limit = 10**5
        primes = set(sympy.primerange(2, limit + 1))
        brute = sorted((p, p + 2) for p in primes if p + 2 in primes)
        assert as_tuples(twin_pairs_upto(limit)) == brute
        assert twin_count_upto(limit) == len(brute) == 1224

    @pytest.mark.parametrize("n,count", [(10**3, 35), (10**4, 205)])
    def test_known_counts(self, n, count):
        assert twin_count_upto(n) == count

    def test_members_are_prime(self):
        for pair in twin_pairs_upto(5000):
            assert trial_division(pair.p) and trial_division(pair.q)
            assert pair.q - pair.p == 2

    def test_monotone_in_bound(self):
        previous = []
        for n in range(3, 3000, 97):
            current = as_tuples(twin_pairs_upto(n))
            assert current[: len(previous)] == previous
            previous = current

    def test_distance_checked(self):
        with pytest.raises(DomainError):
            TwinPair(2, 3)

    @pytest.mark.parametrize("p", [7, 1, 25, 9])
    def test_members_must_be_prime(self, p):
        with pytest.raises(DomainError):
            TwinPair(p, p + 2)


class TestNearMisses:
    def test_twenty_six(self):
        misses = near_miss_pairs(26)
        assert (7, 9) in misses and (15, 17) in misses
        assert (3, 5) not in misses
        assert misses == [(7, 9), (9, 11), (15, 17), (19, 21), (21, 23), (23, 25)]

    def test_unit_is_not_composite(self):
        assert (1, 3) not in near_miss_pairs(26)

    @pytest.mark.parametrize("two_m", [36, 100, 296, 1000])
    def test_matches_scan_of_coprimes(self, two_m):
        coprimes = [s for s in range(1, two_m) if math.gcd(s, two_m) == 1]
        brute = [
            (a, b) for a, b in zip(coprimes, coprimes[1:])
            if b - a == 2 and ((a > 1 and not trial_division(a)) or (b > 1 and not trial_division(b)))
        ]
        assert near_miss_pairs(two_m) == brute

    def test_thirty_six(self):
        assert near_miss_pairs(36) == [(23, 25)]

    @pytest.mark.parametrize("bad", [4, 7, 0])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            near_miss_pairs(bad)


@pytest.mark.slow
def test_reflection_keeps_twin_distance():
    twins = as_tuples(twin_pairs_upto(2 * 10**4))
    starts = [p for p, _ in twins]
    for m in range(2, 10**4 + 1):
        two_m = 2 * m
        group = build_group(two_m) if m <= 50 else None
        for p, q in twins[bisect.bisect_right(starts, m): bisect.bisect_left(starts, two_m - 2)]:
            if group is not None:
                assert p in group and q in group
            a, b = co_opposite(UnitClass(two_m, p)), co_opposite(UnitClass(two_m, q))
            assert abs(a.rep - b.rep) == 2
            assert 0 < b.rep < a.rep < m
