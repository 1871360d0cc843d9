"""Exact rational scalars.

Every number in the package is either a Python ``int`` or a
:class:`fractions.Fraction`.  ``Fraction`` already stores values reduced with a
positive denominator, so it is used directly as the rational type; this module
only adds the constructor/parsing/formatting conventions the rest of the
package relies on.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def make_rational(p: int, q: int = 1) -> Fraction:
    """Return the reduced fraction ``p/q`` with a positive denominator."""
    if q == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(p, q)


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (integers only, no decimals)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return make_rational(num, den)


def format_rational(x: RationalLike, strict: bool = False) -> str:
    """Render ``x`` as ``"p/q"``.

    With ``strict=False`` integers drop the ``/1``; ``strict=True`` always
    emits both parts, which is the form used on the JSON wire.
    """
    x = as_rational(x)
    if x.denominator == 1 and not strict:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
