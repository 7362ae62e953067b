import pytest

from alquot.ntheory import is_prime
from alquot.quadforms import QuadraticForm, class_number, reduced_forms


def _forms(D):
    return {(f.a, f.b, f.c) for f in reduced_forms(D)}


def test_reduced_forms_examples():
    assert _forms(-4) == {(1, 0, 1)}
    assert _forms(-20) == {(1, 0, 5), (2, 2, 3)}
    assert _forms(-3) == {(1, 1, 1)}


def test_classic_class_numbers():
    assert class_number(-4) == 1
    assert class_number(-20) == 2
    assert class_number(-116) == 6
    assert class_number(-15) == 2
    assert class_number(-23) == 3


def test_rejects_non_discriminants():
    for bad in (0, 4, -6, -1, -2):
        with pytest.raises(ValueError):
            reduced_forms(bad)


def test_every_form_satisfies_the_invariants():
    for D in (-3, -4, -15, -20, -23, -116, -420, -1000004):
        if D % 4 not in (0, 1):
            continue
        for f in reduced_forms(D):
            assert f.discriminant() == D
            assert f.is_positive_definite
            assert f.is_reduced
            assert f.is_primitive


def test_class_number_positive():
    for D in range(-200, 0):
        if D % 4 in (0, 1):
            assert class_number(D) >= 1


def test_congruence_for_5_mod_8_primes_sampled():
    # full range is covered by the acceptance suite
    for p in range(5, 600, 8):
        if is_prime(p):
            assert class_number(-4 * p) % 4 == 2


def test_form_dataclass():
    f = QuadraticForm(2, 2, 3)
    assert f.discriminant() == -20
    assert QuadraticForm(2, -2, 3).is_reduced is False
    assert QuadraticForm(2, 4, 6).is_primitive is False
