"""
Interval
--------

Closed rational intervals ``[low, high]`` with the metric ``|x - y|``,
optionally rescaled by a gauge.  Only rational points are presentable.
"""

from fractions import Fraction

from pycompact.core.checks import rational_check, RATIONAL_TYPES
from pycompact.core.rational import parse_rational, format_rational
from pycompact.exceptions import (
    InputError, PointNotInSpaceError, DiameterBoundError)
from pycompact.spaces.base import Space, INTERVAL


class IntervalSpace(Space):
    """
    The rational points of ``[low, high]``.

    >>> from fractions import Fraction
    >>> from pycompact.spaces import IntervalSpace, metric_eval
    >>> metric_eval(IntervalSpace(0, 1), Fraction(1, 3), Fraction(3, 4))
    Fraction(5, 12)

    :param low:
        The left endpoint.

    :param high:
        The right endpoint, ``high >= low``.

    :keyword anchors:
        Designated default points.  Defaults to ``low``.

    :keyword str name:
        The identifier of the space.

    :keyword gauge:
        A :class:`pycompact.gauge.Gauge` applied to ``|x - y|``.  Use
        :func:`pycompact.gauge.transform_metric` instead of passing this
        directly.

    :keyword diameter_bound:
        The declared bound.  Defaults to the largest distance in the
        space and may not be smaller than it.
    """
    KIND = INTERVAL

    def __init__(  # pylint: disable=too-many-arguments
            self, low, high, anchors=None, name=None, gauge=None,
            diameter_bound=None):
        self.low = rational_check("low", low)
        self.high = rational_check("high", high)
        if self.high < self.low:
            raise InputError(
                "high", high,
                message="interval endpoints out of order: %s > %s" % (
                    self.low, self.high))
        self.gauge = gauge

        largest = self._scale(self.high - self.low)
        if diameter_bound is None:
            diameter_bound = largest
        if anchors is None:
            anchors = (self.low, )

        super(IntervalSpace, self).__init__(
            name or "interval", diameter_bound, anchors)

        if largest > self.declared_bound:
            raise DiameterBoundError(
                self.name, (self.low, self.high), largest,
                self.declared_bound)

    def _scale(self, value):
        if self.gauge is None:
            return value
        return self.gauge.apply(value)

    @property
    def is_finite(self):
        return self.low == self.high

    @property
    def is_single_point(self):
        return self.low == self.high

    def points(self):
        if self.is_finite:
            return (self.low, )
        return super(IntervalSpace, self).points()

    def check_point(self, point):
        if isinstance(point, bool) or not isinstance(point, RATIONAL_TYPES):
            raise PointNotInSpaceError(
                self.name, point, reason="not an exact rational")
        point = Fraction(point)
        if not self.low <= point <= self.high:
            raise PointNotInSpaceError(
                self.name, point,
                reason="outside [%s, %s]" % (
                    format_rational(self.low), format_rational(self.high)))
        return point

    def distance(self, point, other):
        return self._scale(abs(point - other))

    def parse_point(self, text):
        try:
            value = parse_rational(text)
        except InputError:
            raise PointNotInSpaceError(
                self.name, text, reason="not a rational")
        return self.check_point(value)

    def format_point(self, point):
        return format_rational(self.check_point(point))
