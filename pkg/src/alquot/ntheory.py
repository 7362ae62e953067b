"""Exact integer arithmetic over the places of Q.

Primality, p-adic valuations, Legendre and Kronecker symbols, and Hilbert
symbols at every place (finite primes and the archimedean place).  The
Hilbert symbol is computed twice over: once by the classical closed
formulas, and once by ``hilbert_symbol_oracle``, which decides solvability
of z^2 = a x^2 + b y^2 by exhaustive search over a residue ring large
enough for Hensel lifting.  The two implementations share nothing beyond
``valuation`` and exist to check each other.

Everything here is deterministic and pure; all functions are safe to call
from multiple threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Place",
    "INFINITY",
    "is_prime",
    "is_squarefree",
    "prime_factors",
    "valuation",
    "legendre",
    "kronecker",
    "hilbert_symbol",
    "hilbert_symbol_oracle",
]


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Place:
    """A place of Q: ``Place(p)`` for a finite prime p, ``Place(None)`` for oo."""

    prime: int | None = None

    def __post_init__(self) -> None:
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.prime is not None

    def sort_key(self) -> tuple[bool, int]:
        # finite primes ascending, the archimedean place last
        return (self.prime is None, self.prime or 0)

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INFINITY = Place(None)


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n != 0, in ascending order."""
    if n == 0:
        raise ValueError("0 has no prime factorization")
    n = abs(n)
    out: list[int] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1 if d == 2 else 2
    return True


def valuation(n: int, p: int) -> tuple[int, int]:
    """Write n = p^e * u with p not dividing u; return (e, u)."""
    if n == 0:
        raise ValueError("the valuation of 0 is undefined")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError("legendre symbol needs an odd prime modulus")
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else int(r)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n): the Jacobi symbol extended to all moduli.

    Multiplicative in n, agrees with ``legendre`` for odd prime n, and at
    n = 2 equals 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        if a % 2 == 0:
            return 0
        if e % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def hilbert_symbol(a: int, b: int, v: Place) -> int:
    """Hilbert symbol (a,b)_v, +1 or -1, by the classical closed formulas.

    (a,b)_v = +1 exactly when z^2 = a x^2 + b y^2 has a nontrivial solution
    over the completion of Q at v.  At the archimedean place the symbol is
    -1 iff both arguments are negative.  At an odd prime p, with
    a = p^alpha u and b = p^beta w,

        (a,b)_p = (-1)^(alpha beta (p-1)/2) (u/p)^beta (w/p)^alpha ,

    and at p = 2, with odd parts u and w,

        (a,b)_2 = (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u)) ,

    where eps(x) = (x-1)/2 and omega(x) = (x^2-1)/8 taken mod 2.
    """
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    if not v.is_finite:
        return -1 if (a < 0 and b < 0) else 1
    p = v.prime
    alpha, u = valuation(a, p)
    beta, w = valuation(b, p)
    if p == 2:
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        omega_u = ((u * u - 1) // 8) % 2
        omega_w = ((w * w - 1) // 8) % 2
        exponent = (eps_u * eps_w + alpha * omega_w + beta * omega_u) % 2
        return -1 if exponent else 1
    sign = 1
    if (alpha * beta * ((p - 1) // 2)) % 2:
        sign = -sign
    if beta % 2:
        sign *= legendre(u, p)
    if alpha % 2:
        sign *= legendre(w, p)
    return sign


# Largest residue ring the oracle will scan.  Keeps the int64 vector
# arithmetic overflow-free (n^3 < 2^63) and bounds the search time.
_MAX_SEARCH_MODULUS = 1 << 20


@lru_cache(maxsize=None)
def _square_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    r = np.arange(n, dtype=np.int64)
    squares = (r * r) % n
    mask = np.zeros(n, dtype=bool)
    mask[squares] = True
    return squares, mask


def _primitive_solution_exists(a: int, b: int, n: int) -> bool:
    # Any primitive triple has a unit coordinate, which unit rescaling
    # moves to 1, so three one-parameter scans are exhaustive.
    squares, is_square = _square_tables(n)
    if is_square[(a + b * squares) % n].any():  # x = 1
        return True
    if is_square[(a * squares + b) % n].any():  # y = 1
        return True
    b_mask = np.zeros(n, dtype=bool)  # z = 1: a x^2 = 1 - b y^2
    b_mask[(b * squares) % n] = True
    return bool(b_mask[(1 - a * squares) % n].any())


def hilbert_symbol_oracle(a: int, b: int, v: Place) -> int:
    """Decide (a,b)_v by direct search, independently of the closed formulas.

    Over R this is a sign check.  Over Q_p, the form z^2 - a x^2 - b y^2 has
    a nontrivial zero iff it has a primitive zero mod p^k for k beyond the
    Newton lifting bound: at a primitive residue zero the gradient has
    valuation at most m = max(val_p a, val_p b) for odd p (m + 1 at p = 2),
    so k = 2m + 1 (resp. 2m + 3) guarantees every primitive residue zero
    lifts to Z_p; conversely a p-adic zero rescales to a primitive one and
    reduces.  The search itself is an exhaustive scan of the residue ring.
    """
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    if not v.is_finite:
        return -1 if (a < 0 and b < 0) else 1
    p = v.prime
    m = max(valuation(a, p)[0], valuation(b, p)[0])
    k = (3 if p == 2 else 1) + 2 * m
    n = p**k
    if n > _MAX_SEARCH_MODULUS:
        raise ValueError(f"search modulus {p}^{k} exceeds the exhaustive budget")
    return 1 if _primitive_solution_exists(a % n, b % n, n) else -1
