#!/usr/bin/env python
"""
Tests for exact Gaussian rational scalars.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from fractions import Fraction
import numbers

import pytest

from graphoperators.guts.rationals import GaussianRational, ONE, ZERO, to_exact


def test_field_operations():
    a = GaussianRational(Fraction(1, 2), 3)
    b = GaussianRational(-2, Fraction(1, 3))
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * ONE == a
    assert a + ZERO == a
    assert -(-a) == a


def test_mixed_arithmetic():
    z = GaussianRational(1, 1)
    assert z + 1 == GaussianRational(2, 1)
    assert 1 - z == GaussianRational(0, -1)
    assert 2 * z == GaussianRational(2, 2)
    assert z == complex(1, 1)
    assert z * 1j == GaussianRational(-1, 1)


def test_reflected_division():
    z = GaussianRational(1, 1)
    assert 1 / z == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert 2 / GaussianRational(0, 2) == GaussianRational(0, -1)
    assert (1 / z) * z == ONE
    with pytest.raises(ZeroDivisionError):
        1 / ZERO


def test_registered_as_complex_number():
    assert isinstance(GaussianRational(1, 2), numbers.Complex)
    assert isinstance(ONE, numbers.Number)


def test_conjugate_and_norm():
    z = GaussianRational(3, -4)
    assert z * z.conjugate() == 25
    assert z.abs2() == 25
    assert complex(z) == 3 - 4j


def test_string_forms():
    assert str(GaussianRational(1, -2)) == '1-2j'
    assert str(GaussianRational(0, Fraction(1, 2))) == '1/2j'
    assert str(GaussianRational(Fraction(-3, 4))) == '-3/4'


def test_floats_convert_exactly():
    assert to_exact(0.1) != GaussianRational(Fraction(1, 10))
    assert to_exact(0.25) == GaussianRational(Fraction(1, 4))
    assert to_exact('2/3') == GaussianRational(Fraction(2, 3))


def test_hash_matches_equality():
    assert len({GaussianRational(2), GaussianRational(2, 0), to_exact(2)}) == 1
    assert hash(GaussianRational(2)) == hash(2)


def test_errors():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(TypeError):
        to_exact(object())
    with pytest.raises(ValueError):
        to_exact('two')
    assert (GaussianRational(1) == 'not a number') is False
    assert not ZERO
