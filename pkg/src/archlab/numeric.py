"""Exact rationals.

Values are :class:`fractions.Fraction`, which already keeps numerator and
denominator reduced with a positive denominator, so structural equality
coincides with value equality.  This module adds the strict text grammar
used by circuit files and traces::

    [-]digits            e.g. "3", "-0"
    [-]digits/digits     e.g. "-2/6"  (denominator non-zero)
"""

import re
from enum import Enum
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import MalformedRational, ZeroDenominator

__all__ = [
    "Rational",
    "Ordering",
    "rat",
    "rat_add",
    "rat_mul",
    "rat_cmp",
    "rat_parse",
    "rat_format",
]

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_GRAMMAR = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?")


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def rat(value):
    """Coerce ``value`` to a :class:`Fraction` without ever going through float.

    Accepts Fractions, ints and rational text.  Floats are refused: a float
    literal such as ``0.1`` is not the rational it looks like.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_add(a, b):
    return rat(a) + rat(b)


def rat_mul(a, b):
    return rat(a) * rat(b)


def rat_cmp(a, b):
    """Total order on rationals by cross-multiplication."""
    a, b = rat(a), rat(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


def rat_parse(text):
    if not isinstance(text, str):
        raise MalformedRational(f"expected rational text, got {type(text).__name__}")
    m = _GRAMMAR.fullmatch(text)
    if m is None:
        raise MalformedRational(f"not a rational literal: {text[:40]!r}")
    num, den = m.group(1), m.group(2)
    try:
        n = int(num)
        d = int(den) if den is not None else 1
    except ValueError as exc:  # int() digit-count limit on huge literals
        raise MalformedRational(str(exc)) from None
    if d == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(n, d)


def rat_format(a):
    a = rat(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
