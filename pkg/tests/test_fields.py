from fractions import Fraction

import pytest

from singlab.errors import FieldMismatch, ParseError
from singlab.fields import (
    QQ,
    QQI,
    GaussianRational,
    GFElement,
    PrimeField,
    field_by_name,
    format_scalar,
)


def test_gaussian_arithmetic():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(1, 2), -1)
    assert a + b == GaussianRational(Fraction(3, 2), 1)
    assert a * b == GaussianRational(Fraction(5, 2), 0)
    assert (a / b) * b == a
    assert a - a == GaussianRational(0, 0)
    assert not GaussianRational(0, 0)
    i = QQI.sqrt_minus_one()
    assert i * i == -1


def test_gaussian_int_coercion():
    a = GaussianRational(2, 3)
    assert 1 + a == GaussianRational(3, 3)
    assert 2 * a == GaussianRational(4, 6)
    assert a / 2 == GaussianRational(1, Fraction(3, 2))


def test_gf_arithmetic():
    p = PrimeField(7)
    a = p.from_int(3)
    b = p.from_int(5)
    assert a + b == p.from_int(1)
    assert a * b == p.from_int(1)
    assert (a / b) * b == a
    assert a ** 6 == p.one()
    with pytest.raises(FieldMismatch):
        _ = a + PrimeField(5).from_int(1)


def test_gf_requires_prime():
    with pytest.raises(ParseError):
        PrimeField(6)


def test_sqrt_minus_one_in_gf():
    assert PrimeField(5).sqrt_minus_one() ** 2 == -1
    assert PrimeField(13).sqrt_minus_one() ** 2 == -1
    assert PrimeField(7).sqrt_minus_one() is None
    assert PrimeField(2).sqrt_minus_one() ** 2 == PrimeField(2).one()


def test_field_names():
    assert field_by_name("rat") is QQ
    assert field_by_name("gauss") is QQI
    assert field_by_name("gf:11").p == 11


def test_format_scalar():
    assert format_scalar(Fraction(-3, 4)) == "-3/4"
    assert format_scalar(GaussianRational(1, 2)) == "1+2i"
    assert format_scalar(GaussianRational(0, -1)) == "-i"
    assert format_scalar(GaussianRational(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3i"
    assert format_scalar(GFElement(9, 7)) == "2"
