"""
Exact rational helpers.

Rationals travel through files and reports as "p/q" strings. Covering
spectrum values are kept as squared lengths q with the convention
value = 1/2 * sqrt(q); rendering to radicals and decimals happens here only.
"""

import math
from fractions import Fraction
from typing import Union

import sympy

from .errors import InputValidationError

RationalLike = Union[Fraction, int, str]

DECIMAL_DIGITS = 12


def to_fraction(value: RationalLike) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string to a Fraction.

    Raises:
        InputValidationError: if the string is not a rational literal
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputValidationError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputValidationError(f"not a rational: {value!r}") from e
    raise InputValidationError(f"not a rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Serialize a Fraction as "p/q" (or "p" when integral)."""
    return str(Fraction(value))


def sympy_rational(value: Fraction) -> sympy.Rational:
    """Fraction -> sympy Rational."""
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """sympy Rational/Integer (or ZZ/QQ domain element) -> Fraction."""
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value.numerator), int(value.denominator))


def _rational_sqrt(value: Fraction):
    """Exact square root of a non-negative Fraction, or None."""
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def render_half_sqrt(q: Fraction) -> str:
    """
    Render 1/2 * sqrt(q) in the radical form used in tables.

    12 -> "√3", 36 -> "3", 9 -> "3/2", 51/50 -> "√(51/200)"
    """
    inner = Fraction(q) / 4
    root = _rational_sqrt(inner)
    if root is not None:
        return format_fraction(root)
    if inner.denominator == 1:
        return f"√{inner.numerator}"
    return f"√({format_fraction(inner)})"


def decimal_half_sqrt(q: Fraction) -> str:
    """Approximate decimal of 1/2 * sqrt(q), fixed significant digits."""
    value = sympy.sqrt(sympy_rational(Fraction(q) / 4))
    return str(sympy.N(value, DECIMAL_DIGITS))
