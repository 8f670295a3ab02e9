"""
Twin primes and distance-2 coprime pairs that fail to be twins.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from core.arith import is_prime
from core.errors import DomainError
from core.sieve import sieve_range
from core.unit_group import build_group


@dataclass(frozen=True)
class TwinPair:
    p: int
    q: int

    def __post_init__(self):
        if self.q - self.p != 2:
            raise DomainError(f"({self.p}, {self.q}) are not at distance 2")
        if not (is_prime(self.p) and is_prime(self.q)):
            raise DomainError(f"({self.p}, {self.q}) are not both prime")


def _twin_starts(n: int) -> np.ndarray:
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"expected an integer n >= 3, got {n}")
    mask = sieve_range(0, n).mask
    return np.flatnonzero(mask[:-2] & mask[2:])


def twin_pairs_upto(n: int) -> List[TwinPair]:
    """All (p, p + 2) with both prime and p + 2 <= n, ascending"""
    return [TwinPair(p, p + 2) for p in _twin_starts(n).tolist()]


def twin_count_upto(n: int) -> int:
    return int(_twin_starts(n).size)


def _is_composite(n: int, primes) -> bool:
    return n > 1 and n not in primes


def near_miss_pairs(two_m: int) -> List[Tuple[int, int]]:
    """Consecutive coprimes below 2m at distance 2 with a composite member"""
    if not isinstance(two_m, int) or two_m < 6 or two_m % 2 != 0:
        raise DomainError(f"expected an even integer >= 6, got {two_m}")

    elements = build_group(two_m).elements
    primes = sieve_range(0, two_m)
    return [
        (a, b) for a, b in zip(elements, elements[1:])
        if b - a == 2 and (_is_composite(a, primes) or _is_composite(b, primes))
    ]
