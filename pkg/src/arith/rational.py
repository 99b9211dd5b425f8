"""
Exact rational scalars.

Rationals are ``fractions.Fraction`` values; this module owns the text form
("a", "-a" or "a/b" with b>0) used by every file format and the CLI.
"""
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """
    Parse the canonical text form of a rational.

    Args:
        text: "a", "-a" or "a/b" with b a positive integer

    Returns:
        Fraction in lowest terms
    """
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise ValueError(f"malformed rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"malformed rational: {text!r} (zero denominator)")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Print a rational in lowest terms, integers without a denominator"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and canonical text to a Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def sign(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def is_integer(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


def decimal_hint(value: Fraction, digits: int = 6) -> str:
    """Human-mode decimal approximation, marked with a leading '~'"""
    return f"~{float(value):.{digits}g}"
