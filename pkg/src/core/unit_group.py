"""
The group of coprime residue classes modulo m.

Classes are held by their least positive representative in [1, m-1], so the
total order on classes is integer order on representatives and the map
s -> class(s) from the sorted coprimes below m is the identity on integers.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from core.arith import mod_inverse
from core.errors import DomainError


@dataclass(frozen=True)
class UnitClass:
    """A coprime residue class modulo m, stored by its canonical representative"""
    modulus: int
    rep: int

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {self.modulus}")
        if not 1 <= self.rep <= self.modulus - 1:
            raise DomainError(f"{self.rep} is not a canonical representative modulo {self.modulus}")
        if math.gcd(self.rep, self.modulus) != 1:
            raise DomainError(f"{self.rep} is not coprime to {self.modulus}")

    @classmethod
    def of(cls, value: int, modulus: int) -> "UnitClass":
        """The class of any integer coprime to the modulus"""
        if modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {modulus}")
        return cls(modulus, value % modulus)

    def __mul__(self, other):
        if not isinstance(other, UnitClass):
            return NotImplemented
        return mul(self, other)

    def __int__(self):
        return self.rep

    def __str__(self):
        return str(self.rep)


@dataclass(frozen=True)
class UnitGroup:
    """All coprime residue classes modulo m, representatives ascending"""
    modulus: int
    elements: Tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[UnitClass]:
        return (UnitClass(self.modulus, rep) for rep in self.elements)

    def __contains__(self, item):
        if isinstance(item, UnitClass):
            return item.modulus == self.modulus
        return isinstance(item, int) and 1 <= item < self.modulus and math.gcd(item, self.modulus) == 1

    @property
    def identity(self) -> UnitClass:
        return UnitClass(self.modulus, 1)

    @property
    def minus_one(self) -> UnitClass:
        """The class of m - 1, the co-opposite of the identity"""
        return UnitClass(self.modulus, self.modulus - 1)

    def element(self, rep: int) -> UnitClass:
        return UnitClass(self.modulus, rep)

    def index(self, rep: int) -> int:
        return self.elements.index(rep)


@dataclass(frozen=True)
class Orbit:
    """Successive powers g, g^2, ..., g^k = 1 of a generator"""
    generator: UnitClass
    members: Tuple[UnitClass, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def reps(self) -> List[int]:
        return [member.rep for member in self.members]


def _same_modulus(a: UnitClass, b: UnitClass):
    if a.modulus != b.modulus:
        raise DomainError(f"classes modulo {a.modulus} and {b.modulus} cannot be combined")


def build_group(m: int) -> UnitGroup:
    """Gamma(m): the coprimes below m, each standing for its class"""
    if m < 2:
        raise DomainError(f"the unit group needs m >= 2, got {m}")
    return UnitGroup(m, tuple(s for s in range(1, m) if math.gcd(s, m) == 1))


def mul(a: UnitClass, b: UnitClass) -> UnitClass:
    """Class product: class(a) * class(b) = class(a * b)"""
    _same_modulus(a, b)
    return UnitClass(a.modulus, a.rep * b.rep % a.modulus)


def inverse(a: UnitClass) -> UnitClass:
    """Multiplicative inverse from the Bezout identity a*s + m*t = 1"""
    return UnitClass(a.modulus, mod_inverse(a.rep, a.modulus))


def co_opposite(a: UnitClass) -> UnitClass:
    """m - a, which is also the product with the class of m - 1"""
    return UnitClass(a.modulus, a.modulus - a.rep)


def order_leq(a: UnitClass, b: UnitClass) -> bool:
    _same_modulus(a, b)
    return a.rep <= b.rep


def element_order(a: UnitClass) -> int:
    """Least k >= 1 with a^k = 1, by repeated multiplication"""
    k, power = 1, a.rep
    while power != 1:
        power = power * a.rep % a.modulus
        k += 1
    return k


def cyclic_subgroup(g: UnitClass) -> Orbit:
    members = [g]
    while members[-1].rep != 1:
        members.append(mul(members[-1], g))
    return Orbit(generator=g, members=tuple(members))


def congruent(x: int, y: int, m: int) -> bool:
    """Congruence modulo m, defined only between integers coprime to m"""
    if m < 1:
        raise DomainError(f"modulus must be positive, got {m}")
    for value in (x, y):
        if math.gcd(value, m) != 1:
            raise DomainError(f"{value} is not coprime to {m}; congruence is restricted to coprimes")
    return (x - y) % m == 0


def theta(group: UnitGroup, s: int) -> UnitClass:
    """Order isomorphism from the coprimes below m onto the group"""
    if s not in group:
        raise DomainError(f"{s} is not a coprime below {group.modulus}")
    return group.element(s)


def theta_inverse(a: UnitClass) -> int:
    return a.rep


def order_census(group: UnitGroup) -> Dict[int, int]:
    """Element order -> number of elements with that order, orders ascending"""
    census: Dict[int, int] = {}
    for a in group:
        k = element_order(a)
        census[k] = census.get(k, 0) + 1
    return dict(sorted(census.items()))


def generators_by_order(group: UnitGroup) -> Dict[int, UnitClass]:
    """Order -> least element generating a cyclic subgroup of that order"""
    chosen: Dict[int, UnitClass] = {}
    for a in group:
        chosen.setdefault(element_order(a), a)
    return dict(sorted(chosen.items()))


def split_at_half(group: UnitGroup) -> Tuple[List[int], List[int]]:
    """Representatives up to m/2 and above it, for an even modulus 2m.

    Multiplying by the class of 2m - 1 maps the lower half onto the upper half.
    """
    if group.modulus % 2 != 0:
        raise DomainError(f"half-range split needs an even modulus, got {group.modulus}")
    half = group.modulus // 2
    lower = [s for s in group.elements if s <= half]
    upper = [s for s in group.elements if s > half]
    return lower, upper


def mirror_rows(group: UnitGroup) -> Tuple[int, int]:
    """Largest representative below the half-way point and its co-opposite"""
    lower, _ = split_at_half(group)
    a_m = lower[-1]
    return a_m, group.modulus - a_m
