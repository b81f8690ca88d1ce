"""Small helpers shared by the exact-arithmetic modules."""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union[int, float, Fraction]


def to_fraction(x) -> Fraction:
    """Convert ``x`` to a :class:`Fraction`.

    Floats go through their shortest repr, so ``0.2`` becomes ``1/5`` rather
    than the nearest binary double. Strings accept ``"3/4"`` and ``"0.75"``.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, (str, Decimal)):
        return Fraction(str(x).strip())
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    # numpy scalars and the like
    return to_fraction(float(x))


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def sign(x) -> int:
    return (x > 0) - (x < 0)
