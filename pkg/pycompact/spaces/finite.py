"""
Finite
------

Finite discrete spaces presented by a labeled point set and a full
distance table.
"""

from fractions import Fraction

from pycompact.core.checks import rational_check
from pycompact.core.logger import get_logger
from pycompact.exceptions import (
    InputError, PointNotInSpaceError, MetricAxiomError, DiameterBoundError)
from pycompact.spaces.axioms import (
    EXHAUSTIVE, SYMMETRY, Violation, check_metric_axioms)
from pycompact.spaces.base import Space, FINITE_DISCRETE

logger = get_logger("spaces.finite")


class FiniteSpace(Space):
    """
    A finite metric space given by its distance table.

    >>> from pycompact.spaces import FiniteSpace
    >>> space = FiniteSpace(("a", "b"), {("a", "b"): 2})
    >>> space.declared_bound
    Fraction(2, 1)

    :param points:
        The point labels in order.  Labels must be hashable and unique.

    :param dict table:
        Maps ``(p, q)`` label pairs to rational distances.  Each unordered
        pair needs at least one direction; the diagonal may be omitted.

    :keyword diameter_bound:
        The declared bound ``M``.  Defaults to the largest table entry.

    :keyword anchors:
        Designated default points.  Defaults to the first point.

    :keyword str name:
        The identifier of the space.

    :keyword bool validate:
        When True (the default) the table must pass an exhaustive
        :func:`pycompact.spaces.check_metric_axioms` run and stay within
        the declared bound.  False keeps the table as given so broken
        tables can be inspected.

    :raises pycompact.exceptions.InputError:
        Raised for empty or duplicate labels and missing table entries.

    :raises pycompact.exceptions.MetricAxiomError:
        Raised if ``validate`` is True and the table breaks an axiom.

    :raises pycompact.exceptions.DiameterBoundError:
        Raised if ``validate`` is True and an entry exceeds the bound.
    """
    KIND = FINITE_DISCRETE

    def __init__(  # pylint: disable=too-many-arguments
            self, points, table, diameter_bound=None, anchors=None,
            name=None, validate=True):
        labels = tuple(points)
        if not labels:
            raise InputError("points", points, message="points is empty")
        if len(set(labels)) != len(labels):
            raise InputError(
                "points", points, message="point labels must be unique")
        self._labels = labels
        self._index = dict((label, i) for i, label in enumerate(labels))
        self._table = self._build_table(table, validate)

        largest = max(self._table.values())
        if diameter_bound is None:
            diameter_bound = max(largest, Fraction(0))
        if anchors is None:
            anchors = labels[:1]

        super(FiniteSpace, self).__init__(
            name or "finite", diameter_bound, anchors)

        if validate:
            report = check_metric_axioms(self, EXHAUSTIVE)
            if report.violations:
                raise MetricAxiomError(report.violations[0])
            self.verify_diameter_bound()

    def _build_table(self, table, validate):
        for pair in table:
            if not isinstance(pair, tuple) or len(pair) != 2:
                raise InputError(
                    "table", table,
                    message="table keys must be (p, q) pairs, got %r" % (
                        pair, ))
            for label in pair:
                if label not in self._index:
                    raise PointNotInSpaceError(
                        "table", label, reason="unknown label")

        full = {}
        for left in self._labels:
            for right in self._labels:
                forward = table.get((left, right))
                backward = table.get((right, left))
                if forward is None and backward is None:
                    if left == right:
                        full[(left, right)] = Fraction(0)
                        continue
                    raise InputError(
                        "table", table,
                        message="no distance given for %r" % ((left, right), ))

                if forward is None:
                    forward = backward
                forward = rational_check("d%r" % ((left, right), ), forward)
                if backward is not None:
                    backward = rational_check(
                        "d%r" % ((right, left), ), backward)
                    if validate and forward != backward:
                        raise MetricAxiomError(Violation(
                            (left, right), SYMMETRY, forward, backward))

                full[(left, right)] = forward
        return full

    @property
    def is_finite(self):
        return True

    @property
    def is_single_point(self):
        return len(self._labels) == 1

    def points(self):
        return self._labels

    def table(self):
        """Returns a copy of the full ordered-pair distance table"""
        return dict(self._table)

    def check_point(self, point):
        try:
            if point in self._index:
                return point
        except TypeError:  # unhashable
            pass
        raise PointNotInSpaceError(self.name, point, reason="unknown label")

    def distance(self, point, other):
        return self._table[(point, other)]

    def same(self, point, other):
        return self.check_point(point) == self.check_point(other)

    def min_separation(self):
        """
        Returns the smallest positive distance in the table or None for
        a single point space.
        """
        positive = [value for value in self._table.values() if value > 0]
        return min(positive) if positive else None

    def verify_diameter_bound(self):
        for pair, value in self._table.items():
            if value > self.declared_bound:
                raise DiameterBoundError(
                    self.name, pair, value, self.declared_bound)
        return self.declared_bound

    def parse_point(self, text):
        text = text.strip()
        for label in self._labels:
            if str(label) == text:
                return label
        raise PointNotInSpaceError(self.name, text, reason="unknown label")

    def format_point(self, point):
        return str(self.check_point(point))


def binary_space(name="binary"):
    """
    Returns the two point space ``{0, 1}`` with ``d(x, y) = |x - y|``,
    diameter bound 1 and both points as anchors (in order 0, 1).
    """
    return FiniteSpace(
        (0, 1), {(0, 1): 1}, diameter_bound=1, anchors=(0, 1), name=name)
