"""
Sequences
---------

Eventually constant binary sequences and the dyadic rationals they
map to.
"""

import re
from fractions import Fraction

from six import integer_types, string_types

from pycompact.core.checks import input_check, rational_check
from pycompact.core.rational import format_rational, is_dyadic
from pycompact.core.typesbase import ValueObject
from pycompact.exceptions import InputError

BITS = (0, 1)
REGEX_BINARY_SEQ = re.compile(
    r"^\s*(?P<prefix>[01]*(?:,[01])*)\s*(?:;\s*(?P<tail>[01])\s*)?$")


def _bit(name, value):
    if isinstance(value, bool) or not isinstance(value, integer_types) or \
            value not in BITS:
        raise InputError(name, value, allowed_values=BITS)
    return value


class BinarySeq(ValueObject):
    """
    The sequence ``prefix[0], prefix[1], ..., tail, tail, ...`` of bits.
    Trailing prefix bits equal to ``tail`` are dropped so every sequence
    has exactly one representation.

    >>> BinarySeq((1, 0, 1, 0, 0))
    BinarySeq('101;0')

    :param prefix:
        An iterable of bits, 0 or 1.

    :keyword int tail:
        The bit repeated after the prefix.
    """
    FIELDS = ("prefix", "tail")

    def __init__(self, prefix=(), tail=0):
        tail = _bit("tail", tail)
        bits = [_bit("prefix", bit) for bit in prefix]
        while bits and bits[-1] == tail:
            bits.pop()
        self._init_fields(prefix=tuple(bits), tail=tail)

    @classmethod
    def parse(cls, text):
        """
        Parses ``"101;0"``, ``"1,0,1;0"`` or a bare bit string such as
        ``"101"``, which has a 0 tail.  ``";1"`` is the all ones
        sequence.

        :raises pycompact.exceptions.InputError:
            Raised if ``text`` is not in one of the forms above.

        :rtype: BinarySeq
        """
        input_check("text", text, allowed_types=string_types)
        match = REGEX_BINARY_SEQ.match(text)
        if match is None:
            raise InputError(
                "text", text,
                message="%r is not a binary sequence like '101;0'" % text)
        prefix = match.group("prefix").replace(",", "")
        tail = match.group("tail") or "0"
        return cls([int(bit) for bit in prefix], int(tail))

    def bit(self, index):
        """Returns bit ``index`` (1-based)"""
        if index <= len(self.prefix):
            return self.prefix[index - 1]
        return self.tail

    def __str__(self):
        return "%s;%d" % ("".join(str(bit) for bit in self.prefix), self.tail)

    def __repr__(self):
        return "BinarySeq(%r)" % str(self)


class Dyadic(Fraction):
    """
    A rational in ``[0, 1]`` whose denominator is a power of two.

    >>> Dyadic(5, 8)
    Dyadic(5, 8)

    :raises pycompact.exceptions.InputError:
        Raised for floats, values outside ``[0, 1]`` and denominators
        which are not powers of two.
    """
    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        value = rational_check("numerator", numerator)
        if denominator is not None:
            denominator = rational_check("denominator", denominator)
            if denominator == 0:
                raise InputError(
                    "denominator", denominator, message="zero denominator")
            value /= denominator

        if not 0 <= value <= 1:
            raise InputError(
                "value", value,
                message="%s is outside [0, 1]" % format_rational(value))
        if not is_dyadic(value):
            raise InputError(
                "value", value,
                message="%s is not dyadic" % format_rational(value))
        return super(Dyadic, cls).__new__(
            cls, value.numerator, value.denominator)
