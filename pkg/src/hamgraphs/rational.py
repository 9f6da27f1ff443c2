"""Exact rational helpers and the JSON number convention.

All quantities in this package are ``fractions.Fraction`` values.  In JSON
they travel as strings like "3/4" or "5" so nothing is ever rounded.
"""

from fractions import Fraction


def parse_rat(value):
    """Parse a rational from its JSON form ("p/q", "p", or an int)."""
    if isinstance(value, bool):
        raise ValueError("not a rational: %r" % (value,))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("not a rational: %r" % (value,)) from exc
    raise ValueError("not a rational: %r" % (value,))


def fmt_rat(value):
    """Format a Fraction for JSON: "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)
