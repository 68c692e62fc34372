"""Exact rational values and their string forms.

Every distance, threshold and result in this package is a
``fractions.Fraction``; nothing in the computational core touches
floats.  The single exception is ``INF`` (``math.inf``), which encodes
the separation of a one-block partition (an empty infimum).  Mixing
``Fraction`` with ``math.inf`` in comparisons, ``max`` and ``min`` is
exact, so no precision is ever lost.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ParseError

Rational = Fraction
RationalOrInf = Union[Fraction, float]

INF = math.inf


def parse_rational(text: str | int, where: str | None = None) -> Fraction:
    """Parse ``"p/q"``, decimal (``"1.5"``) or integer strings exactly."""
    if isinstance(text, bool):
        raise ParseError("boolean is not a rational", where)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}", where)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r} ({exc})", where) from None


def format_rational(value: RationalOrInf) -> str:
    """Inverse of :func:`parse_rational`; ``INF`` becomes ``"inf"``."""
    if value == INF:
        return "inf"
    return str(value)
