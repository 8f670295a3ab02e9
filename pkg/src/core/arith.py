"""
Integer arithmetic primitives.
gcd and Bezout certificates, deterministic primality, trial-division
factorization, Euler's totient and the coprime / non-coprime split.
"""

import math
from dataclasses import dataclass
from typing import List, Tuple

from core.errors import DomainError

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3 * 10**24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# 2-3-5 wheel: gaps between successive candidates coprime to 30, starting at 7
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)


@dataclass(frozen=True)
class BezoutCertificate:
    """x*s + y*t = d with d = gcd(x, y)"""
    x: int
    y: int
    s: int
    t: int
    d: int

    def holds(self) -> bool:
        return (self.x * self.s + self.y * self.t == self.d
                and self.d > 0 and self.x % self.d == 0 and self.y % self.d == 0)


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition of a positive integer"""
    value: int
    factors: Tuple[Tuple[int, int], ...]

    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def product(self) -> int:
        return math.prod(p ** e for p, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def gcd(x: int, y: int) -> int:
    """Greatest common divisor, always positive; gcd(0, 0) is rejected"""
    if x == 0 and y == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(x, y)


def ext_gcd(x: int, y: int) -> BezoutCertificate:
    """Extended Euclid: coefficients s, t with x*s + y*t = gcd(x, y)"""
    if x == 0 and y == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")

    a, b = abs(x), abs(y)
    prev_s, s = 1, 0
    prev_t, t = 0, 1
    while b != 0:
        q = a // b
        a, b = b, a % b
        prev_s, s = s, prev_s - q * s
        prev_t, t = t, prev_t - q * t

    # fold the input signs back into the coefficients
    if x < 0:
        prev_s = -prev_s
    if y < 0:
        prev_t = -prev_t
    return BezoutCertificate(x=x, y=y, s=prev_s, t=prev_t, d=a)


def mod_inverse(x: int, m: int) -> int:
    """Inverse of x modulo m in [0, m-1]; x must be coprime to m"""
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    cert = ext_gcd(x, m)
    if cert.d != 1:
        raise DomainError(f"{x} is not invertible modulo {m}")
    return cert.s % m


def _miller_rabin(n: int) -> bool:
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _wheel_candidates():
    """Trial divisors 2, 3, 5 and then every integer coprime to 30"""
    yield 2
    yield 3
    yield 5
    k = 7
    while True:
        for gap in _WHEEL_GAPS:
            yield k
            k += gap


def is_prime(n: int) -> bool:
    """Deterministic primality test"""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _SMALL_PRIMES[-1] ** 2:
        return True
    if n < _MR_LIMIT:
        return _miller_rabin(n)

    limit = math.isqrt(n)
    for k in _wheel_candidates():
        if k > limit:
            return True
        if n % k == 0:
            return False


def factorize(n: int) -> Factorization:
    """Factor n by trial division over a 2-3-5 wheel"""
    if n < 1:
        raise DomainError(f"factorize expects n >= 1, got {n}")

    factors = []
    rest = n
    for k in _wheel_candidates():
        if k * k > rest:
            break
        if rest % k == 0:
            exponent = 0
            while rest % k == 0:
                rest //= k
                exponent += 1
            factors.append((k, exponent))
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(value=n, factors=tuple(factors))


def totient(n: int) -> int:
    """Euler's phi from the prime factorization: prod p^(e-1) * (p - 1)"""
    if n < 1:
        raise DomainError(f"totient expects n >= 1, got {n}")
    return math.prod(p ** (e - 1) * (p - 1) for p, e in factorize(n).factors)


def coprime_partition(m: int, lo: int, hi: int) -> Tuple[List[int], List[int]]:
    """Split [lo, hi] into the coprimes to m and the non-coprimes to m"""
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")

    coprimes, others = [], []
    for n in range(lo, hi + 1):
        (coprimes if math.gcd(n, m) == 1 else others).append(n)
    return coprimes, others


def least_coprime_prime(m: int) -> int:
    """Least prime p < m with gcd(p, m) = 1, which exists for every m > 2"""
    if m <= 2:
        raise DomainError(f"a prime coprime to m below m needs m > 2, got {m}")
    for p in range(2, m):
        if m % p != 0 and is_prime(p):
            return p
    # unreachable for m > 2: m - 1 is coprime to m and has a prime factor
    raise AssertionError(f"no prime below {m} is coprime to it")
