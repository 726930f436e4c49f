"""Exact-rational helpers: JSON encoding and small integer utilities.

All geometry in this package is done with ``fractions.Fraction``; nothing is
ever rounded.  JSON carries rationals as plain ints when the denominator is 1
and as ``"p/q"`` strings otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def rat_to_json(x: Fraction) -> int | str:
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def rat_from_json(value: int | str) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse a CLI rational: "7", "3/4" and decimal strings are accepted."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc


def ceil_log2(x: int) -> int:
    """Smallest w with 2**w >= x, for x >= 1."""
    if x < 1:
        raise ValueError("ceil_log2 needs a positive argument")
    return (x - 1).bit_length()


def common_scale(values) -> int:
    """LCM of the denominators, i.e. the scale putting all values on Z."""
    scale = 1
    for v in values:
        scale = lcm(scale, v.denominator)
    return scale
