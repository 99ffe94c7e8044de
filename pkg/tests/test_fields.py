from fractions import Fraction

import pytest

from tropcm import DEFAULT_PRIME, FieldError, GFElement, PrimeField, QQ, field_from_name
from tropcm.fields import is_prime


def test_rational_coercion_lowest_terms():
    assert QQ.coerce("2/4") == Fraction(1, 2)
    c = QQ.coerce(Fraction(-3, -6))
    assert c.numerator == 1 and c.denominator == 2


def test_prime_field_arithmetic():
    F = PrimeField(7)
    a, b = F.coerce(3), F.coerce(5)
    assert a + b == F.coerce(1)
    assert a * b == F.coerce(1)
    assert a / b == a * F.coerce(3)  # 5^{-1} = 3 mod 7
    assert -a == F.coerce(4)
    assert bool(F.zero()) is False


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(FieldError):
        PrimeField(32004)


def test_mixed_moduli_raise():
    with pytest.raises(FieldError):
        GFElement(1, 5) + GFElement(1, 7)


def test_fraction_coercion_into_fp():
    F = PrimeField(5)
    assert F.coerce(Fraction(1, 2)) == F.coerce(3)  # 2 * 3 = 1 mod 5
    with pytest.raises(FieldError):
        F.coerce(Fraction(1, 5))


def test_field_names_round_trip():
    assert field_from_name("Q") is QQ
    assert field_from_name("Fp:32003") == PrimeField(DEFAULT_PRIME)
    assert field_from_name("Fp").p == DEFAULT_PRIME
    with pytest.raises(FieldError):
        field_from_name("R")


def test_is_prime_small_values():
    primes = [p for p in range(2, 60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(32003)
