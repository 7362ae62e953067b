"""Rational quaternion algebras as ramification data.

A quaternion algebra B(a,b) over Q (basis 1, i, j, k with i^2 = a,
j^2 = b, ij = -ji = k) is classified up to isomorphism by the finite set
of places where it ramifies, which always has even cardinality.  This
module computes that set from a symbol pair, tests isomorphism as set
equality, exchanges the local invariants at a prime and infinity,
decides whether a quadratic field splits an algebra, and evaluates
Eichler's class number formula for the definite case.

Maximal orders, ideal classes and unit groups are deliberately absent:
the ramification set carries everything the rest of the package needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .ntheory import (
    INFINITY,
    Place,
    hilbert_symbol,
    is_prime,
    is_squarefree,
    kronecker,
    prime_factors,
)

__all__ = [
    "QuaternionAlgebra",
    "ramified_places",
    "reduced_discriminant",
    "is_isomorphic",
    "interchange",
    "quad_field_splits",
    "eichler_class_number",
]


def ramified_places(a: int, b: int) -> frozenset[Place]:
    """Set of places v with (a,b)_v = -1.

    Only the archimedean place and the primes dividing 2ab can ramify, so
    the scan over those places is complete.
    """
    if a == 0 or b == 0:
        raise ValueError("symbol entries must be nonzero")
    candidates = [INFINITY] + [Place(p) for p in prime_factors(2 * a * b)]
    return frozenset(v for v in candidates if hilbert_symbol(a, b, v) == -1)


@dataclass(frozen=True)
class QuaternionAlgebra:
    """A rational quaternion algebra, canonically its ramification set."""

    ram_set: frozenset[Place]

    def __post_init__(self) -> None:
        if len(self.ram_set) % 2:
            raise ValueError("a ramification set has even cardinality")

    @classmethod
    def from_symbols(cls, a: int, b: int) -> "QuaternionAlgebra":
        return cls(ramified_places(a, b))

    @classmethod
    def from_ramified_places(cls, places: Iterable[Place | int | None]) -> "QuaternionAlgebra":
        """Build from places given as Place values, primes, or None for oo."""
        normalized = frozenset(
            v if isinstance(v, Place) else Place(v) for v in places
        )
        return cls(normalized)

    @property
    def is_definite(self) -> bool:
        return INFINITY in self.ram_set

    def sorted_places(self) -> list[Place]:
        return sorted(self.ram_set, key=Place.sort_key)

    def __str__(self) -> str:
        inside = ", ".join(str(v) for v in self.sorted_places())
        return "{" + inside + "}"


def reduced_discriminant(B: QuaternionAlgebra) -> int:
    """Product of the finite ramified primes."""
    d = 1
    for v in B.ram_set:
        if v.is_finite:
            d *= v.prime
    return d


def is_isomorphic(B1: QuaternionAlgebra, B2: QuaternionAlgebra) -> bool:
    """Isomorphism over Q is equality of ramification sets."""
    return B1.ram_set == B2.ram_set


def interchange(B: QuaternionAlgebra, p: int) -> QuaternionAlgebra:
    """Exchange the local invariants of B at the odd prime p and at oo.

    Membership of Place(p) and of the archimedean place in the ramification
    set are swapped; everything else is untouched.  Applied to an indefinite
    algebra ramified at p this yields a definite algebra unramified at p,
    and the operation is an involution.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("interchange is defined at an odd prime")
    fin = Place(p)
    places = set(B.ram_set)
    had_p = fin in places
    had_inf = INFINITY in places
    places.discard(fin)
    places.discard(INFINITY)
    if had_inf:
        places.add(fin)
    if had_p:
        places.add(INFINITY)
    return QuaternionAlgebra(frozenset(places))


def quad_field_splits(d: int, B: QuaternionAlgebra) -> bool:
    """Whether Q(sqrt(d)) splits B, for squarefree d not in {0, 1}.

    Q(sqrt(d)) embeds in (equivalently, splits) B exactly when no ramified
    place of B splits in the field: a finite prime l splits iff the
    Kronecker symbol of the field discriminant at l is +1, and the
    archimedean place splits iff d > 0.
    """
    if d in (0, 1) or not is_squarefree(d):
        raise ValueError("d must be squarefree and define a quadratic field")
    disc = d if d % 4 == 1 else 4 * d
    for v in B.ram_set:
        if v.is_finite:
            if kronecker(disc, v.prime) == 1:
                return False
        elif d > 0:
            return False
    return True


def eichler_class_number(D: int) -> int:
    """Class number of a maximal order in the definite algebra of reduced
    discriminant D (squarefree), by Eichler's formula:

        H(D) = prod(l-1)/12 + prod(1 - (-4/l))/4 + prod(1 - (-3/l))/3

    with products over the primes l dividing D, evaluated in exact rational
    arithmetic.  A non-integral result means D is not the reduced
    discriminant of a definite maximal order and raises.
    """
    if D < 1 or not is_squarefree(D):
        raise ValueError("D must be a squarefree positive integer")
    mass = Fraction(1, 12)
    term2 = Fraction(1, 4)
    term3 = Fraction(1, 3)
    for ell in prime_factors(D):
        mass *= ell - 1
        term2 *= 1 - kronecker(-4, ell)
        term3 *= 1 - kronecker(-3, ell)
    h = mass + term2 + term3
    if h.denominator != 1 or h <= 0:
        raise ValueError(f"Eichler formula gives non-integral value {h} for D={D}")
    return int(h)
