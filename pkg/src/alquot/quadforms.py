"""Class numbers of imaginary quadratic orders by form enumeration.

The class number of discriminant D < 0 is the number of reduced primitive
positive-definite binary quadratic forms a x^2 + b x y + c y^2 of that
discriminant.  The enumeration is the classical one (a <= sqrt(|D|/3));
no genus-theory shortcut is taken, so the count doubles as its own oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["QuadraticForm", "reduced_forms", "class_number"]


@dataclass(frozen=True, order=True)
class QuadraticForm:
    """The integral binary quadratic form a x^2 + b x y + c y^2."""

    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant() < 0

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    @property
    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1


def _check_discriminant(D: int) -> None:
    if D >= 0:
        raise ValueError("discriminant must be negative")
    if D % 4 not in (0, 1):
        raise ValueError("a discriminant is 0 or 1 mod 4")


def reduced_forms(D: int) -> frozenset[QuadraticForm]:
    """All reduced primitive positive-definite forms of discriminant D < 0.

    Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c; each
    proper equivalence class contains exactly one such form.
    """
    _check_discriminant(D)
    forms = []
    for a in range(1, math.isqrt(-D // 3) + 1):
        for b in range(-a, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                forms.append(QuadraticForm(a, b, c))
    return frozenset(forms)


def class_number(D: int) -> int:
    """h(D) = number of reduced primitive forms of discriminant D.

    For a prime p = 1 mod 4 the order Z[sqrt(-p)] is maximal, so
    class_number(-4p) is the class number of Q(sqrt(-p)).
    """
    return len(reduced_forms(D))
