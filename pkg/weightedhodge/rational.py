"""Exact parsing and printing of rational numbers."""
from fractions import Fraction

from . import exceptions

__all__ = ["parse_rational", "format_rational", "format_float"]


def parse_rational(value, what="value"):
    """
    Parse an int, a ``"p/q"`` string or a decimal string exactly.

    Floats are read through their shortest decimal form, so ``0.1`` gives
    ``1/10``.

    Args:
        value: The value to parse.
        what (str, optional): Description used in error messages.

    Returns:
        fractions.Fraction: The parsed value.

    """
    if isinstance(value, bool):
        raise exceptions.InputError(f"Cannot read {what} from a boolean.")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, (float, str)):
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise exceptions.InputError(f"Cannot read {what} from {value!r}.")


def format_rational(value):
    """``"p"`` for integers, ``"p/q"`` otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value):
    """Decimal with 17 significant digits."""
    return f"{float(value):.17g}"
