"""
Gauges
------

The closed catalog of bounded metric transforms ``h``.  Both members
satisfy ``h(0) = 0``, are nondecreasing, subadditive and never exceed
their argument, which is what lets a transformed space reuse the nets
of the space it came from.
"""

from fractions import Fraction

from pycompact.core.checks import input_check, rational_check
from pycompact.core.rational import format_rational
from pycompact.core.typesbase import ValueObject

CAP = "cap"
RATIONAL_BEND = "rational-bend"


class Gauge(ValueObject):
    """
    Base class for gauges.  Sub-classes provide :meth:`apply`.

    :ivar str kind:
        One of :data:`CAP` or :data:`RATIONAL_BEND`.

    :ivar fractions.Fraction bound:
        The bound ``a`` with ``h(t) <= a`` for every ``t``.

    :ivar eta:
        The injectivity radius: ``h`` is strictly increasing on
        ``[0, eta]``.  None means there is no cutoff.
    """
    FIELDS = ("kind", "bound", "eta")

    def apply(self, value):
        """Returns ``h(value)`` for a non-negative rational ``value``"""
        raise NotImplementedError

    def describe(self):
        """Returns the text form used in definition files"""
        raise NotImplementedError


class CapGauge(Gauge):
    """
    ``h(t) = min(t, a)``.  Capping at one turns any metric into a
    bounded metric with the same small balls.

    :param bound:
        The cap ``a > 0``.  The injectivity radius equals ``a``.
    """
    def __init__(self, bound=1):
        bound = rational_check("bound", bound, positive=True)
        self._init_fields(kind=CAP, bound=bound, eta=bound)

    def apply(self, value):
        return min(value, self.bound)

    def describe(self):
        return "cap(%s)" % format_rational(self.bound)


class RationalBendGauge(Gauge):
    """
    ``h(t) = t / (1 + t)``, bounded by 1 and strictly increasing
    everywhere.

    :keyword eta:
        An optional declared injectivity radius.  None (the default)
        means radii of any size are accepted.
    """
    def __init__(self, eta=None):
        if eta is not None:
            eta = rational_check("eta", eta, positive=True)
        self._init_fields(kind=RATIONAL_BEND, bound=Fraction(1), eta=eta)

    def apply(self, value):
        return value / (1 + value)

    def describe(self):
        if self.eta is None:
            return "bend"
        return "bend(%s)" % format_rational(self.eta)


def gauge_apply(gauge, value):
    """
    Returns ``h(value)`` exactly.

    >>> from fractions import Fraction
    >>> gauge_apply(RationalBendGauge(), 1)
    Fraction(1, 2)

    :param Gauge gauge:
        The gauge to apply.

    :param value:
        A rational ``>= 0``.

    :raises pycompact.exceptions.InputError:
        Raised if ``value`` is negative or not exact.

    :rtype: fractions.Fraction
    """
    input_check("gauge", gauge, allowed_types=(Gauge, ))
    value = rational_check("value", value, nonnegative=True)
    return Fraction(gauge.apply(value))
