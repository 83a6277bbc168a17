"""Exact rational helpers built on fractions.Fraction"""

import re
from fractions import Fraction

from .errors import RationalParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string into a canonical Fraction.

    Decimal input is rejected: "0.1" has no unambiguous exact meaning here.
    """
    match = _RATIONAL_RE.match(text)
    if not match:
        raise RationalParseError(text)
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise RationalParseError(text, f"Zero denominator in {text!r}")
    return Fraction(num, den)


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list of rationals"""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise RationalParseError(text, "Empty rational list")
    return [parse_rational(p) for p in parts]


def format_rational(value: Fraction) -> str:
    """Render as "p/q" (always with a denominator, so the form is stable)"""
    return f"{value.numerator}/{value.denominator}"
