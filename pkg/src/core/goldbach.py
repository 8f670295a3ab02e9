"""
Goldbach pairs on the line x + y = 2m.

Prime pairs come from the sieve; the totient-based search is kept beside it as
an independent cross-check, and the Bertrand-type witness search lives here too.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

import numpy as np

from core.arith import is_prime, totient
from core.errors import CounterexampleError, DomainError
from core.sieve import sieve_range
from core.unit_group import build_group, split_at_half

Pair = Tuple[int, int]

# FFT pair counts are rounded only when every value sits this close to an integer
_ROUNDING_TOLERANCE = 0.25


@dataclass(frozen=True)
class GoldbachReport:
    """Coprime candidates and prime pairs on x + y = even_target"""
    even_target: int
    candidate_pairs: Tuple[Pair, ...]
    prime_pairs: Tuple[Pair, ...]

    @property
    def pair_count(self) -> int:
        return len(self.prime_pairs)

    def failing_candidates(self) -> List[Pair]:
        prime = set(self.prime_pairs)
        return [pair for pair in self.candidate_pairs if pair not in prime]


@dataclass(frozen=True)
class LinePoint:
    """One point (x, 2m - x) of the line, classified"""
    x: int
    y: int
    coprime: bool
    prime_pair: bool


@dataclass(frozen=True)
class BertrandReport:
    """Outcome of a witness sweep over m in [lo, hi]"""
    lo: int
    hi: int
    checked: int
    tightest_m: int
    tightest_witness: int


def _check_even_target(two_m):
    if not isinstance(two_m, int) or two_m < 4 or two_m % 2 != 0:
        raise DomainError(f"expected an even integer >= 4, got {two_m}")


def goldbach_pairs(two_m: int) -> GoldbachReport:
    """All prime pairs p <= q with p + q = 2m, plus the coprime candidates"""
    _check_even_target(two_m)
    primes = sieve_range(0, two_m)
    half = two_m // 2

    prime_pairs = tuple(
        (p, two_m - p) for p in range(2, half + 1)
        if p in primes and (two_m - p) in primes
    )
    lower, _ = split_at_half(build_group(two_m))
    candidate_pairs = tuple((x, two_m - x) for x in lower)

    return GoldbachReport(two_m, candidate_pairs, prime_pairs)


def symmetric_pairs(report: GoldbachReport) -> Set[Pair]:
    """The symmetric pair set, holding (p, q) and (q, p) for every prime pair"""
    return {pair for p, q in report.prime_pairs for pair in ((p, q), (q, p))}


def totient_pair_search(two_m: int, literal: bool = False) -> Set[Pair]:
    """Totient-based prime pair search with set semantics.

    A prime p is paired with q = 2m - p when gcd(p, q) = 1 and phi(q) = q - 1.
    The second test, p - 1 == phi(q), only matters on the diagonal p = q, where
    the coprimality test cannot pass; literal=True applies it everywhere, which
    also accepts pairs such as (7, 9) for 2m = 16.
    """
    _check_even_target(two_m)
    meet: Set[Pair] = set()
    for p in sieve_range(0, two_m).primes():
        q = two_m - p
        if q < 1:
            continue
        if math.gcd(p, q) == 1 and totient(q) == q - 1:
            meet.update({(p, q), (q, p)})
        if p - 1 == totient(q) and (literal or p == q):
            meet.update({(p, q), (q, p)})
    return meet


def phi_primality_crosscheck(two_m: int) -> bool:
    """True when the totient-based search finds exactly the sieve's pairs"""
    return totient_pair_search(two_m) == symmetric_pairs(goldbach_pairs(two_m))


def line_points(two_m: int) -> List[LinePoint]:
    """Every x in [1, 2m - 1] on x + y = 2m with its classification"""
    _check_even_target(two_m)
    primes = sieve_range(0, two_m)
    return [
        LinePoint(
            x=x,
            y=two_m - x,
            coprime=math.gcd(x, two_m) == 1,
            prime_pair=x in primes and (two_m - x) in primes,
        )
        for x in range(1, two_m)
    ]


def bertrand_check(m: int) -> int:
    """Least prime p with m < p < 2m, found by testing upward from m + 1"""
    if not isinstance(m, int) or m <= 2:
        raise DomainError(f"expected an integer m > 2, got {m}")
    for candidate in range(m + 1, 2 * m):
        if is_prime(candidate):
            return candidate
    raise CounterexampleError(f"no prime strictly between {m} and {2 * m}", report={"m": m})


def bertrand_sweep(lo: int, hi: int) -> BertrandReport:
    """Check every m in [lo, hi] for a prime in (m, 2m) with one sieve pass"""
    if lo < 3 or lo > hi:
        raise DomainError(f"expected 3 <= lo <= hi, got [{lo}, {hi}]")

    primes = np.array(sieve_range(0, 2 * hi).primes(), dtype=np.int64)
    ms = np.arange(lo, hi + 1, dtype=np.int64)
    # next prime above each m; a sentinel past the sieve marks a missing witness
    padded = np.append(primes, np.int64(4 * hi + 4))
    witnesses = padded[np.searchsorted(primes, ms, side='right')]

    failing = np.flatnonzero(witnesses >= 2 * ms)
    if failing.size:
        m = int(ms[failing[0]])
        raise CounterexampleError(f"no prime strictly between {m} and {2 * m}", report={"m": m})

    # argmax keeps the first, i.e. smallest, m on ties
    best = int(np.argmax(witnesses / ms))
    return BertrandReport(lo, hi, int(ms.size), int(ms[best]), int(witnesses[best]))


def pair_count_table(prime_mask: np.ndarray, hi: int) -> np.ndarray:
    """Number of prime pairs p <= q, p + q = n, indexed by n for every n in [0, hi].

    prime_mask must cover [0, hi]. Ordered counts come from one FFT
    self-convolution of the indicator; values that do not round cleanly raise.
    """
    if hi < 0:
        raise DomainError(f"expected hi >= 0, got {hi}")
    if prime_mask.shape[0] < hi + 1:
        raise DomainError(f"prime mask of length {prime_mask.shape[0]} does not reach {hi}")

    indicator = prime_mask[: hi + 1].astype(np.float64)
    size = 1 << (2 * (hi + 1) - 1).bit_length()
    spectrum = np.fft.rfft(indicator, size)
    ordered = np.fft.irfft(spectrum * spectrum, size)[: hi + 1]
    del spectrum

    rounded = np.rint(ordered)
    residual = float(np.max(np.abs(ordered - rounded)))
    if residual >= _ROUNDING_TOLERANCE:
        raise ArithmeticError(f"pair counts up to {hi} are not integral (residual {residual})")

    counts = rounded.astype(np.int64)
    # p = q = n / 2 is counted once in the ordered sum
    counts[0::2] += prime_mask[: hi // 2 + 1]
    counts //= 2
    counts.flags.writeable = False
    return counts


def count_prime_pairs(prime_mask: np.ndarray, lo: int, hi: int) -> np.ndarray:
    """Number of prime pairs p <= q, p + q = n, for every even n in [lo, hi]"""
    if lo % 2 or hi % 2 or lo < 0 or lo > hi:
        raise DomainError(f"expected even bounds 0 <= lo <= hi, got [{lo}, {hi}]")
    return pair_count_table(prime_mask, hi)[lo : hi + 1 : 2]


def first_unpaired(counts: np.ndarray, lo: int) -> Optional[int]:
    """Smallest even n >= 4 in the counted block without a prime pair"""
    evens = np.arange(lo, lo + 2 * counts.size, 2)
    missing = np.flatnonzero((counts == 0) & (evens >= 4))
    return int(evens[missing[0]]) if missing.size else None
