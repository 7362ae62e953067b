import pytest
from hypothesis import given, settings, strategies as st

from alquot.ntheory import (
    INFINITY,
    Place,
    hilbert_symbol,
    hilbert_symbol_oracle,
    is_prime,
    is_squarefree,
    kronecker,
    legendre,
    prime_factors,
    valuation,
)

SMALL_PLACES = [INFINITY, Place(2), Place(3), Place(5), Place(7), Place(13)]
nonzero = st.integers(-50, 50).filter(lambda n: n != 0)


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(85)


def test_is_prime_agrees_with_sieve():
    limit = 2000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    for n in range(limit):
        assert is_prime(n) == sieve[n]


def test_place_requires_prime():
    with pytest.raises(ValueError):
        Place(6)
    assert Place(7).is_finite
    assert not INFINITY.is_finite
    assert str(INFINITY) == "inf"


def test_valuation_examples():
    assert valuation(-85, 5) == (1, -17)
    assert valuation(12, 2) == (2, 3)
    assert valuation(7, 3) == (0, 7)
    with pytest.raises(ValueError):
        valuation(0, 5)


def test_legendre_examples():
    assert legendre(1, 17) == 1
    squares_mod_17 = {x * x % 17 for x in range(1, 17)}
    assert 5 not in squares_mod_17
    assert legendre(5, 17) == -1
    assert legendre(2, 7) == 1  # 3^2 = 2 mod 7
    assert legendre(34, 17) == 0
    with pytest.raises(ValueError):
        legendre(3, 2)
    with pytest.raises(ValueError):
        legendre(3, 9)


@given(st.integers(-200, 200), st.sampled_from([3, 5, 7, 11, 13, 17, 19, 97]))
def test_legendre_euler_criterion(a, p):
    s = legendre(a, p)
    assert s == legendre(a % p, p)
    assert (pow(a, (p - 1) // 2, p) - s) % p == 0


def test_kronecker_examples():
    assert kronecker(-4, 5) == 1
    assert kronecker(-3, 2) == -1
    assert kronecker(-3, 17) == -1


def test_kronecker_at_two():
    for a in range(-40, 41):
        expected = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        assert kronecker(a, 2) == expected


@given(st.integers(-60, 60), st.integers(-40, 40).filter(bool), st.integers(-40, 40).filter(bool))
def test_kronecker_multiplicative_in_n(a, m, n):
    assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


@given(st.integers(-200, 200), st.sampled_from([3, 5, 7, 11, 13, 17]))
def test_kronecker_matches_legendre(a, p):
    assert kronecker(a, p) == legendre(a, p)


def test_hilbert_examples():
    for b in (1, -1, 2, -17, 85):
        for v in SMALL_PLACES:
            assert hilbert_symbol(1, b, v) == 1
    assert hilbert_symbol(-1, -1, INFINITY) == -1
    assert hilbert_symbol(-1, -85, Place(5)) == 1
    assert hilbert_symbol(-5, -17, Place(17)) == -1
    with pytest.raises(ValueError):
        hilbert_symbol(0, 3, Place(5))
    with pytest.raises(ValueError):
        hilbert_symbol(3, 0, INFINITY)


def test_oracle_examples():
    assert hilbert_symbol_oracle(-1, -1, Place(2)) == -1
    assert hilbert_symbol_oracle(-1, -1, Place(3)) == 1
    assert hilbert_symbol_oracle(2, 3, INFINITY) == 1


def test_oracle_rejects_oversized_search():
    with pytest.raises(ValueError):
        hilbert_symbol_oracle(2**40, 3, Place(2))


@settings(max_examples=150)
@given(nonzero, nonzero, st.sampled_from(SMALL_PLACES))
def test_hilbert_symmetry(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)


@settings(max_examples=150)
@given(nonzero, nonzero, nonzero, st.sampled_from(SMALL_PLACES))
def test_hilbert_bimultiplicative(a, a2, b, v):
    assert hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v)


@settings(max_examples=150)
@given(nonzero, nonzero, st.sampled_from(SMALL_PLACES))
def test_hilbert_oracle_agreement_sampled(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol_oracle(a, b, v)


@settings(max_examples=200)
@given(nonzero, nonzero)
def test_product_formula_sampled(a, b):
    places = [INFINITY] + [Place(p) for p in prime_factors(2 * a * b)]
    product = 1
    for v in places:
        product *= hilbert_symbol(a, b, v)
    assert product == 1
    for extra in (11, 19, 23, 101):
        if extra not in prime_factors(2 * a * b):
            assert hilbert_symbol(a, b, Place(extra)) == 1


def test_prime_factors_and_squarefree():
    assert prime_factors(-84) == (2, 3, 7)
    assert prime_factors(1) == ()
    with pytest.raises(ValueError):
        prime_factors(0)
    assert is_squarefree(30)
    assert not is_squarefree(12)
    assert not is_squarefree(0)
    assert is_squarefree(-15)
