"""
Checks
======

Provides functions that are responsible for internal type and value
checks.  Everything numeric in pycompact is exact so these checks are
also where integers get promoted to :class:`fractions.Fraction` and
floats get turned away.
"""

from fractions import Fraction

from six import integer_types

from pycompact.exceptions import InputError

NoneType = type(None)

RATIONAL_TYPES = integer_types + (Fraction, )


def input_check(name, value, allowed_types=None, allowed_values=None):
    """
    A small wrapper around :func:`isinstance`.  This is mainly meant
    to be used inside of other functions to pre-validate input rather
    than using assertions.  It's better to fail early with bad input
    so more reasonable error message can be provided instead of from
    somewhere deep in a computation.

    :param str name:
        The name of the input being checked.  This is provided
        so error messages make more sense and can be attributed
        to specific input arguments.

    :param value:
        The value we're performing the type check on.

    :keyword allowed_types:
        The allowed type or types for ``value``.

    :keyword tuple allowed_values:
        A tuple of allowed values.  When provided ``value`` must
        be in this tuple otherwise :class:`InputError` will be
        raised.

    :raises pycompact.exceptions.InputError:
        Raised if ``value`` is not an instance of ``allowed_types``

    :raises TypeError:
        Raised if ``allowed_values`` is provided and not a tuple.
    """
    if allowed_values is not None and not isinstance(allowed_values, tuple):
        raise TypeError("`allowed_values` must be a tuple")

    if allowed_types is not None and not isinstance(value, allowed_types):
        raise InputError(name, value, allowed_types=allowed_types)

    if allowed_values is not None and value not in allowed_values:
        raise InputError(name, value, allowed_values=allowed_values)


def rational_check(name, value, positive=False, nonnegative=False):
    """
    Checks that ``value`` is an exact rational and returns it as a
    :class:`fractions.Fraction`.  Booleans and floats are rejected.

    :param str name:
        The name of the input being checked.

    :param value:
        An integer or :class:`fractions.Fraction`.

    :keyword bool positive:
        If True, ``value`` must be strictly greater than zero.

    :keyword bool nonnegative:
        If True, ``value`` must be greater than or equal to zero.

    :raises pycompact.exceptions.InputError:
        Raised if ``value`` is not exact or fails the sign requirement.

    :rtype: fractions.Fraction
    """
    if isinstance(value, bool):
        raise InputError(name, value, allowed_types=RATIONAL_TYPES)
    input_check(name, value, allowed_types=RATIONAL_TYPES)
    value = Fraction(value)

    if positive and value <= 0:
        raise InputError(
            name, value, message="{0!r} must be > 0, got {1}".format(
                name, value))

    if nonnegative and value < 0:
        raise InputError(
            name, value, message="{0!r} must be >= 0, got {1}".format(
                name, value))

    return value


def integer_check(name, value, minimum=None):
    """
    Checks that ``value`` is an integer and, optionally, at least
    ``minimum``.

    :raises pycompact.exceptions.InputError:
        Raised if ``value`` is not an integer or is below ``minimum``.

    :rtype: int
    """
    if isinstance(value, bool):
        raise InputError(name, value, allowed_types=integer_types)
    input_check(name, value, allowed_types=integer_types)

    if minimum is not None and value < minimum:
        raise InputError(
            name, value, message="{0!r} must be >= {1}, got {2}".format(
                name, minimum, value))

    return value
