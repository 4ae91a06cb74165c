"""
Topology
--------

Witnesses for the equivalence of the ``D`` metric topology and the
product topology.  Basic opens restrict only the first ``n``
coordinates:

    V = {y : sum(l[i] * d[i](x[i], y[i]) / M[i] for i <= n) < budget}

:func:`ball_to_open` finds such a ``V`` inside a ``D`` ball and
:func:`open_to_ball` finds a ``D`` ball inside a given ``V``.
"""

from pycompact.core.checks import input_check, integer_check, rational_check
from pycompact.core.logger import get_logger
from pycompact.core.typesbase import ValueObject
from pycompact.exceptions import InputError
from pycompact.product.countable import CountableProduct
from pycompact.spaces.axioms import AxiomReport, Violation

OPEN_IN_BALL = "open-in-ball"
BALL_IN_OPEN = "ball-in-open"

logger = get_logger("product.topology")


class BasicOpen(ValueObject):
    """
    The basic open set of ``space`` around ``center`` which bounds the
    weighted sum of the first ``depth`` coordinates by ``budget``.

    :param CountableProduct space:
        The product this set lives in.

    :param center:
        A :class:`pycompact.product.ProductPoint` of ``space``.

    :param int depth:
        How many coordinates are restricted, ``>= 1``.

    :param budget:
        A rational ``> 0``.
    """
    FIELDS = ("space", "center", "depth", "budget")

    def __init__(self, space, center, depth, budget):
        input_check("space", space, allowed_types=(CountableProduct, ))
        self._init_fields(
            space=space,
            center=space.check_point(center),
            depth=integer_check("depth", depth, minimum=1),
            budget=rational_check("budget", budget, positive=True))

    def contains(self, point):
        """True if ``point`` belongs to this set, decided exactly"""
        point = self.space.check_point(point)
        return self.space.truncated_distance(
            self.center, point, self.depth) < self.budget

    def __repr__(self):
        return "BasicOpen(%s, %r, depth=%d, budget=%s)" % (
            self.space.name, self.center, self.depth, self.budget)


def basic_open_contains(open_set, point):
    """True if ``point`` belongs to ``open_set``"""
    input_check("open_set", open_set, allowed_types=(BasicOpen, ))
    return open_set.contains(point)


def ball_to_open(space, center, eps):
    """
    Returns a basic open around ``center`` inside the ball
    ``{y : D(center, y) < eps}``.  The depth is the smallest ``n`` with
    ``tail_bound(n) < eps / 2`` and the budget is ``eps / 2``, so a
    member's restricted terms and its unrestricted tail each stay below
    ``eps / 2``.

    >>> from fractions import Fraction
    >>> from pycompact.product import binary_product, ProductPoint
    >>> space = binary_product()
    >>> found = ball_to_open(space, ProductPoint(), Fraction(1, 4))
    >>> found.depth, found.budget
    (4, Fraction(1, 8))

    :rtype: BasicOpen
    """
    input_check("space", space, allowed_types=(CountableProduct, ))
    eps = rational_check("eps", eps, positive=True)
    depth = space.minimal_depth(eps)
    logger.debug(
        "Ball of radius %s in %s contains the depth %d basic open",
        eps, space.name, depth)
    return BasicOpen(space, center, depth, eps / 2)


def open_to_ball(space, open_set):
    """
    Returns a radius ``eps`` such that the ball
    ``{y : D(center, y) < eps}`` is inside ``open_set``.  Each restricted
    term is at most ``D`` so the budget itself works.

    :raises pycompact.exceptions.InputError:
        Raised if ``open_set`` belongs to a different space.

    :rtype: fractions.Fraction
    """
    input_check("space", space, allowed_types=(CountableProduct, ))
    input_check("open_set", open_set, allowed_types=(BasicOpen, ))
    if open_set.space is not space:
        raise InputError(
            "open_set", open_set,
            message="open_set belongs to %s, not %s" % (
                open_set.space.name, space.name))
    return open_set.budget


def check_open_in_ball(open_set, eps, probes):
    """
    Reports every probe which is in ``open_set`` but not within ``eps``
    of its center.

    :rtype: pycompact.spaces.AxiomReport
    """
    space = open_set.space
    checked = 0
    violations = []
    for probe in probes:
        probe = space.check_point(probe)
        checked += 1
        if open_set.contains(probe):
            distance = space.distance(open_set.center, probe)
            if not distance < eps:
                violations.append(Violation(
                    (open_set.center, probe), OPEN_IN_BALL, distance, eps))
    return AxiomReport(checked, tuple(violations))


def check_ball_in_open(open_set, eps, probes):
    """
    Reports every probe within ``eps`` of the center of ``open_set``
    which is not a member of ``open_set``.

    :rtype: pycompact.spaces.AxiomReport
    """
    space = open_set.space
    checked = 0
    violations = []
    for probe in probes:
        probe = space.check_point(probe)
        checked += 1
        distance = space.distance(open_set.center, probe)
        if distance < eps and not open_set.contains(probe):
            violations.append(Violation(
                (open_set.center, probe), BALL_IN_OPEN,
                space.truncated_distance(
                    open_set.center, probe, open_set.depth),
                open_set.budget))
    return AxiomReport(checked, tuple(violations))
