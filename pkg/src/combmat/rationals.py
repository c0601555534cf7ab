"""Exact scalar arithmetic over the rationals.

Integers are Python ``int`` values (arbitrary precision, canonical zero).
Rationals are ``fractions.Fraction`` values, which are always stored
normalized: positive denominator, numerator and denominator coprime, and
zero as 0/1.  Exact equality is therefore structural equality, and nothing
in this package ever rounds: an operation that would leave the rationals
raises instead of approximating.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

ARITH_KINDS = ("add", "sub", "mul", "div")

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def rat_arith(a: Rational, b: Rational, kind: str) -> Rational:
    """Combine two rationals with one of ``add``/``sub``/``mul``/``div``.

    Division by zero raises ``ZeroDivisionError``; every result is exact and
    in lowest terms.
    """
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown arithmetic kind {kind!r}; expected one of {ARITH_KINDS}")


def rat_is_square(a: Rational) -> Rational | None:
    """Return the nonnegative rational square root of ``a``, or None.

    In lowest terms p/q is a square iff p >= 0 and both p and q are perfect
    integer squares.  Uses integer square roots only; no floating point.
    """
    if a < 0:
        return None
    root_num = math.isqrt(a.numerator)
    root_den = math.isqrt(a.denominator)
    if root_num * root_num != a.numerator or root_den * root_den != a.denominator:
        return None
    return Fraction(root_num, root_den)


def parse_rational(text: str, line: int | None = None) -> Rational:
    """Parse ``"p/q"`` or ``"p"`` with an optional leading sign.

    Accepts both the ASCII hyphen and the U+2212 minus sign.  A zero
    denominator is rejected.
    """
    cleaned = text.strip().replace("−", "-")
    m = _RATIONAL_RE.match(cleaned)
    if m is None:
        raise ParseError(f"not a rational: {text!r}", line=line)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}", line=line)
    return Fraction(num, den)


def format_rational(a: Rational) -> str:
    """Render as ``"p/q"``, omitting the denominator when it is 1."""
    return str(a)
