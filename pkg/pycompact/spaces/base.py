"""
Base
----

The shared interface of every finitely presented metric space and the
module level operations which work on any of them.
"""

from fractions import Fraction

from pycompact.core.checks import rational_check
from pycompact.exceptions import InputError, UnsupportedSpaceError

FINITE_DISCRETE = "finite-discrete"
INTERVAL = "interval"
FINITE_PRODUCT = "finite-product"
COUNTABLE_PRODUCT = "countable-product"
KINDS = (FINITE_DISCRETE, INTERVAL, FINITE_PRODUCT, COUNTABLE_PRODUCT)

ZERO = Fraction(0)


def weighted_term(weight, distance, bound):
    """
    Returns ``weight * distance / bound``, the contribution of one
    coordinate to a weighted product metric.  A component with a zero
    bound is a single point so its term is always zero.
    """
    if bound == 0:
        return ZERO
    return weight * distance / bound


class Space(object):
    """
    Base class for finitely presented metric spaces.  Every attribute is
    set in the constructor and no operation changes it afterwards, so one
    instance may be shared between threads.  The attributes are plain
    attributes; treat them as read-only.

    :param str name:
        The identifier of the space, used in certificates and messages.

    :param diameter_bound:
        The declared bound ``M`` with ``d(x, y) <= M`` for all points.

    :param tuple anchors:
        The designated default points, in order.
    """
    KIND = None

    def __init__(self, name, diameter_bound, anchors):
        self.name = name
        self.declared_bound = rational_check(
            "diameter_bound", diameter_bound, nonnegative=True)

        anchors = tuple(anchors)
        if not anchors:
            raise InputError("anchors", anchors, message="anchors is empty")
        self.anchors = tuple(self.check_point(anchor) for anchor in anchors)
        if len(set(self.anchors)) != len(self.anchors):
            raise InputError(
                "anchors", anchors, message="anchors must be distinct")

    def __repr__(self):
        return "<%s %s>" % (self.__class__.__name__, self.name)

    @property
    def kind(self):
        """The kind of presentation, one of :data:`KINDS`"""
        return self.KIND

    @property
    def is_finite(self):
        """True if every point of the space can be enumerated"""
        return False

    @property
    def is_single_point(self):
        """True if the space has exactly one point"""
        return False

    def points(self):
        """
        Returns every point of the space as a tuple.

        :raises pycompact.exceptions.UnsupportedSpaceError:
            Raised for spaces with infinitely many points.
        """
        raise UnsupportedSpaceError("enumeration", self.kind)

    def check_point(self, point):
        """
        Returns ``point`` in normalized form.

        :raises pycompact.exceptions.PointNotInSpaceError:
            Raised if ``point`` is not presentable in this space.
        """
        raise NotImplementedError

    def distance(self, point, other):
        """
        Returns the exact distance between two points which have
        already passed :meth:`check_point`.
        """
        raise NotImplementedError

    def same(self, point, other):
        """True if ``point`` and ``other`` denote the same point"""
        return self.check_point(point) == self.check_point(other)

    def verify_diameter_bound(self):
        """
        Hook for presentations which can prove their declared bound.
        Returns the declared bound.
        """
        return self.declared_bound

    def parse_point(self, text):
        """Parses the text form of a point of this space"""
        raise NotImplementedError

    def format_point(self, point):
        """Returns the text form of ``point``"""
        raise NotImplementedError


def metric_eval(space, point, other):
    """
    Returns the exact distance between two points of ``space``.

    >>> from pycompact.spaces import binary_space, metric_eval
    >>> metric_eval(binary_space(), 0, 1)
    Fraction(1, 1)

    :param pycompact.spaces.base.Space space:
        The space both points belong to.

    :raises pycompact.exceptions.PointNotInSpaceError:
        Raised if either point is not presentable in ``space``.

    :rtype: fractions.Fraction
    """
    if not isinstance(space, Space):
        raise InputError("space", space, allowed_types=(Space, ))
    return space.distance(space.check_point(point), space.check_point(other))


def diameter_bound(space):
    """
    Returns the declared diameter bound ``M`` of ``space``.  Finite
    tables are additionally checked against the bound.

    :raises pycompact.exceptions.DiameterBoundError:
        Raised if a table entry exceeds the declared bound.

    :rtype: fractions.Fraction
    """
    if not isinstance(space, Space):
        raise InputError("space", space, allowed_types=(Space, ))
    return space.verify_diameter_bound()


def same_point(space, point, other):
    """True if ``point`` and ``other`` are the same point of ``space``"""
    return space.same(point, other)


def enumerate_points(space):
    """Returns every point of a finite ``space``"""
    return space.points()
