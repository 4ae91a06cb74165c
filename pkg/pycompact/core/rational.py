"""
Rational
--------

Text forms for exact rationals.  Every file format and every line of
command line output uses ``num/den`` or a plain integer, never a
decimal rendering.

>>> from pycompact.core.rational import parse_rational, format_rational
>>> format_rational(parse_rational("6/8"))
'3/4'
"""

import re
from fractions import Fraction

from pycompact.core.checks import rational_check
from pycompact.exceptions import InputError

REGEX_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    """
    Parses ``text`` in ``num/den`` or integer form.

    :param str text:
        The text to parse, for example ``"5/12"`` or ``"-3"``.

    :raises pycompact.exceptions.InputError:
        Raised if ``text`` is not a rational in one of the accepted
        forms or the denominator is zero.

    :rtype: fractions.Fraction
    """
    match = REGEX_RATIONAL.match(text)
    if match is None:
        raise InputError(
            "text", text,
            message="{0!r} is not a rational of the form num/den".format(
                text))

    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InputError("text", text, message="Zero denominator in %r" % text)

    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    """
    Returns the exact text form of ``value``: ``"n"`` for integers and
    ``"n/d"`` otherwise.

    :rtype: str
    """
    value = rational_check("value", value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{0}/{1}".format(value.numerator, value.denominator)


def dyadic_exponent(value):
    """
    Returns ``k`` such that the denominator of ``value`` is ``2 ** k``
    or None if the denominator is not a power of two.

    >>> dyadic_exponent(Fraction(3, 8))
    3
    """
    value = rational_check("value", value)
    denominator = value.denominator
    if denominator & (denominator - 1):
        return None
    return denominator.bit_length() - 1


def is_dyadic(value):
    """Returns True if ``value`` has a power of two denominator"""
    return dyadic_exponent(value) is not None
