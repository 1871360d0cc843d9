"""Text renderings of polynomials: plain, LaTeX, JSON and a bare coefficient list."""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import format_rational, parse_rational
from .poly import Polynomial

FORMATS = ("plain", "latex", "json", "coeffs")


def _power(k: int, latex: bool) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "n"
    return f"n^{{{k}}}" if latex else f"n^{k}"


def _magnitude(c: Fraction, k: int, latex: bool) -> str:
    var = _power(k, latex)
    if c == 1 and var:
        return var
    if latex:
        num = str(c.numerator) if c.denominator == 1 else rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
        return num + var
    num = format_rational(c)
    return f"{num}*{var}" if var else num


def _join_terms(p: Polynomial, latex: bool) -> str:
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        body = _magnitude(abs(c), k, latex)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def polynomial_to_json(p: Polynomial) -> dict:
    return {
        "degree": p.degree,
        "coefficients": [format_rational(c, strict=True) for c in p.coeffs],
    }


def format_polynomial(p: Polynomial, fmt: str = "plain") -> str:
    """Render ``p`` in one of ``plain``, ``latex``, ``json`` or ``coeffs``.

    ``plain`` and ``latex`` list terms by descending degree; ``json`` and
    ``coeffs`` list coefficients in ascending order as strict ``"p/q"`` strings.
    """
    if fmt == "plain":
        return _join_terms(p, latex=False)
    if fmt == "latex":
        return _join_terms(p, latex=True)
    if fmt == "json":
        return json.dumps(polynomial_to_json(p))
    if fmt == "coeffs":
        if p.is_zero():
            return "0/1"
        return " ".join(format_rational(c, strict=True) for c in p.coeffs)
    raise ValueError(f"unknown format {fmt!r}")


def parse_polynomial_json(text: str) -> Polynomial:
    obj = json.loads(text)
    p = Polynomial(parse_rational(c) for c in obj["coefficients"])
    if p.degree != obj["degree"]:
        raise ValueError("degree field disagrees with coefficients")
    return p
