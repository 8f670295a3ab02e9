"""
Segmented sieve of Eratosthenes.
A PrimeSet is an immutable primality bitmask over an inclusive window [lo, hi].
"""

import math

import numpy as np

from core.errors import DomainError

DEFAULT_SEGMENT = 2 ** 18


def simple_sieve(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p*p : limit+1 : p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


class PrimeSet:
    """Primality membership for every integer in [lo, hi]"""

    __slots__ = ("lo", "hi", "_mask")

    def __init__(self, lo: int, hi: int, mask: np.ndarray):
        if mask.shape != (hi - lo + 1,):
            raise DomainError(f"mask of length {mask.shape} does not cover [{lo}, {hi}]")
        mask = np.array(mask, dtype=bool, copy=True)
        mask.flags.writeable = False
        self.lo = lo
        self.hi = hi
        self._mask = mask

    @property
    def mask(self) -> np.ndarray:
        """Read-only boolean array; index i stands for lo + i"""
        return self._mask

    def __contains__(self, n) -> bool:
        if not self.lo <= n <= self.hi:
            raise DomainError(f"{n} lies outside the sieved window [{self.lo}, {self.hi}]")
        return bool(self._mask[n - self.lo])

    def __len__(self):
        return self.count()

    def __eq__(self, other):
        if not isinstance(other, PrimeSet):
            return NotImplemented
        return (self.lo, self.hi) == (other.lo, other.hi) and np.array_equal(self._mask, other._mask)

    def __repr__(self):
        return f"PrimeSet(lo={self.lo}, hi={self.hi}, count={self.count()})"

    def count(self) -> int:
        return int(np.count_nonzero(self._mask))

    def primes(self) -> list:
        return (np.flatnonzero(self._mask) + self.lo).tolist()

    def concat(self, other: "PrimeSet") -> "PrimeSet":
        """Join with the window that starts right after this one"""
        if other.lo != self.hi + 1:
            raise DomainError(
                f"windows [{self.lo}, {self.hi}] and [{other.lo}, {other.hi}] are not adjacent"
            )
        return PrimeSet(self.lo, other.hi, np.concatenate([self._mask, other._mask]))


def prime_set_union(first: PrimeSet, second: PrimeSet) -> PrimeSet:
    """Compose two adjacent windows into one"""
    return first.concat(second)


def sieve_range(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT) -> PrimeSet:
    """Exact primality for [lo, hi], sieved in segments of segment_size numbers.

    Memory stays within the window plus the base primes up to sqrt(hi).
    """
    if lo < 0 or hi < 0:
        raise DomainError(f"sieve bounds must be non-negative, got [{lo}, {hi}]")
    if lo > hi:
        raise DomainError(f"sieve window [{lo}, {hi}] has lo > hi")
    if segment_size < 1:
        raise DomainError(f"segment size must be positive, got {segment_size}")

    base = simple_sieve(math.isqrt(hi))
    mask = np.empty(hi - lo + 1, dtype=bool)

    low = lo
    while low <= hi:
        high = min(low + segment_size - 1, hi)
        segment = np.ones(high - low + 1, dtype=bool)
        for p in base.tolist():
            p2 = p * p
            if p2 > high:
                break
            start = max(p2, -(-low // p) * p)
            segment[start - low :: p] = False
        # 0 and 1 are not prime
        if low <= 1:
            segment[: 2 - low] = False
        mask[low - lo : high - lo + 1] = segment
        low = high + 1

    return PrimeSet(lo, hi, mask)


def prime_mask_upto(n: int, segment_size: int = DEFAULT_SEGMENT) -> np.ndarray:
    """Boolean array of length n + 1 with True at the primes"""
    return sieve_range(0, n, segment_size).mask
