"""
Weights
-------

Geometric weight sequences ``l[i] = s * r ** i``.  Geometric weights
keep the total and every tail an exact rational.
"""

from pycompact.core.checks import rational_check, integer_check
from pycompact.core.rational import format_rational
from pycompact.core.typesbase import ValueObject
from pycompact.exceptions import InputError


class WeightSequence(ValueObject):
    """
    The weights ``l[i] = scale * ratio ** i`` for ``i >= 1``.

    >>> from fractions import Fraction
    >>> weights = WeightSequence(Fraction(1, 2))
    >>> weights.total, weights.tail(3)
    (Fraction(1, 1), Fraction(1, 8))

    :param ratio:
        A rational with ``0 < ratio < 1``.

    :keyword scale:
        A rational ``> 0``, 1 by default.
    """
    FIELDS = ("ratio", "scale")

    def __init__(self, ratio, scale=1):
        ratio = rational_check("ratio", ratio, positive=True)
        if ratio >= 1:
            raise InputError(
                "ratio", ratio, message="ratio must be below 1, got %s" % (
                    ratio))
        scale = rational_check("scale", scale, positive=True)
        self._init_fields(ratio=ratio, scale=scale)

    def weight(self, index):
        """Returns ``l[index]`` for ``index >= 1``"""
        integer_check("index", index, minimum=1)
        return self.scale * self.ratio ** index

    @property
    def total(self):
        """``L``, the sum of every weight"""
        return self.scale * self.ratio / (1 - self.ratio)

    def tail(self, depth):
        """Returns the sum of ``l[i]`` for ``i > depth`` (``depth >= 0``)"""
        integer_check("depth", depth, minimum=0)
        return self.scale * self.ratio ** (depth + 1) / (1 - self.ratio)

    def partial(self, depth):
        """Returns the sum of ``l[i]`` for ``1 <= i <= depth``"""
        return self.total - self.tail(depth)

    def describe(self):
        """Returns the text form used in definition files"""
        return "geometric(%s, %s)" % (
            format_rational(self.ratio), format_rational(self.scale))
