#!/usr/bin/env python
"""
Exact complex scalars with rational real and imaginary parts.

Algebra identities are checked with equality on these scalars; matrices
convert them to double precision with complex().

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from fractions import Fraction
import numbers


class GaussianRational(object):
    """
    Complex number re + im*j with re, im in Q.

    Examples
    --------
    >>> from graphoperators.guts.rationals import GaussianRational
    >>> z = GaussianRational(1, 2)
    >>> str(z * z)
    '-3+4j'
    >>> str(z.conjugate()), z.abs2()
    ('1-2j', Fraction(5, 1))
    >>> GaussianRational('1/2') + 1 == GaussianRational(3, 0) / 2
    True
    >>> complex(GaussianRational(0, -1))
    -1j
    >>> str(1 / GaussianRational(0, 2))
    '-1/2j'

    """
    __slots__ = ('_re', '_im')

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def real(self):
        return self._re

    @property
    def imag(self):
        return self._im

    @classmethod
    def from_number(cls, x):
        return to_exact(x)

    def __repr__(self):
        return 'GaussianRational({0}, {1})'.format(self._re, self._im)

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return '{0}j'.format(self._im)
        sign = '+' if self._im > 0 else '-'
        return '{0}{1}{2}j'.format(self._re, sign, abs(self._im))

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __bool__(self):
        return self._re != 0 or self._im != 0

    def __eq__(self, other):
        try:
            other = to_exact(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = to_exact(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = to_exact(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        try:
            other = to_exact(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re * other._re - self._im * other._im,
                                self._re * other._im + self._im * other._re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = to_exact(other)
        except TypeError:
            return NotImplemented
        norm = other.abs2()
        if norm == 0:
            raise ZeroDivisionError('GaussianRational division by zero')
        return self * other.conjugate() * GaussianRational(1 / norm)

    def __rtruediv__(self, other):
        try:
            other = to_exact(other)
        except TypeError:
            return NotImplemented
        return other / self

    def conjugate(self):
        return GaussianRational(self._re, -self._im)

    def abs2(self):
        """Return |z|^2 as a Fraction."""
        return self._re * self._re + self._im * self._im


def to_exact(x):
    """
    Convert a number to a GaussianRational.

    Floats are converted exactly (binary value), so 0.1 is not 1/10.

    Examples
    --------
    >>> from graphoperators.guts.rationals import to_exact
    >>> str(to_exact(3)), str(to_exact(0.5j)), str(to_exact('2/3'))
    ('3', '1/2j', '2/3')

    """
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (numbers.Rational, str)):
        return GaussianRational(x, 0)
    if isinstance(x, numbers.Real):
        return GaussianRational(Fraction(float(x)), 0)
    if isinstance(x, numbers.Complex):
        x = complex(x)
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    raise TypeError("Cannot convert {0!r} to an exact scalar".format(x))


numbers.Complex.register(GaussianRational)

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
