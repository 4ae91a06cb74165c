"""
Transform
---------

Applying a gauge to the metric of a space, and the correspondence
between ball radii before and after the transform.
"""

from pycompact.core.checks import input_check, rational_check
from pycompact.core.logger import get_logger
from pycompact.exceptions import InputError, UnsupportedSpaceError
from pycompact.gauge.gauges import Gauge, CapGauge
from pycompact.spaces.axioms import AxiomReport, Violation
from pycompact.spaces.base import Space
from pycompact.spaces.finite import FiniteSpace
from pycompact.spaces.interval import IntervalSpace

BALL = "ball"

logger = get_logger("gauge.transform")


def transform_metric(space, gauge, name=None):
    """
    Returns a new presentation of ``space`` whose distances are
    ``h(d(x, y))``.  The diameter bound becomes ``min(h(M), a)`` and the
    anchors are kept.  Products are not transformed directly, build
    them from transformed components instead.

    :param pycompact.spaces.Space space:
        A finite discrete space or an untransformed interval.

    :param pycompact.gauge.Gauge gauge:
        The gauge to apply.

    :keyword str name:
        The name of the new space.  Defaults to ``<name>~<gauge>``.

    :raises pycompact.exceptions.UnsupportedSpaceError:
        Raised for product spaces and intervals which already carry a
        gauge.

    :rtype: pycompact.spaces.Space
    """
    input_check("space", space, allowed_types=(Space, ))
    input_check("gauge", gauge, allowed_types=(Gauge, ))
    if name is None:
        name = "%s~%s" % (space.name, gauge.describe())
    bound = min(gauge.apply(space.declared_bound), gauge.bound)

    if isinstance(space, FiniteSpace):
        table = dict(
            (pair, gauge.apply(value))
            for pair, value in space.table().items())
        transformed = FiniteSpace(
            space.points(), table, diameter_bound=bound,
            anchors=space.anchors, name=name)

    elif isinstance(space, IntervalSpace):
        if space.gauge is not None:
            raise UnsupportedSpaceError(
                "transform_metric", space.kind,
                message="%s already carries a gauge" % space.name)
        transformed = IntervalSpace(
            space.low, space.high, anchors=space.anchors, name=name,
            gauge=gauge, diameter_bound=bound)

    else:
        raise UnsupportedSpaceError(
            "transform_metric", space.kind,
            message="transform the components of %s instead" % space.name)

    logger.debug("Transformed %s with %s", space.name, gauge.describe())
    return transformed


def bounded_metric(space, name=None):
    """
    Returns ``space`` with its metric capped at one, which has the same
    balls of radius below one.
    """
    return transform_metric(space, CapGauge(1), name=name)


def ball_radius_map(gauge, eps):
    """
    Returns ``h(eps)``, the radius under the transformed metric whose
    balls equal the balls of radius ``eps`` under the original metric.

    >>> from fractions import Fraction
    >>> from pycompact.gauge import RationalBendGauge
    >>> ball_radius_map(RationalBendGauge(), Fraction(1, 2))
    Fraction(1, 3)

    :raises pycompact.exceptions.InputError:
        Raised if ``eps`` is not positive or is not below the gauge's
        injectivity radius.

    :rtype: fractions.Fraction
    """
    input_check("gauge", gauge, allowed_types=(Gauge, ))
    eps = rational_check("eps", eps, positive=True)
    if gauge.eta is not None and eps >= gauge.eta:
        raise InputError(
            "eps", eps,
            message="eps must be below the injectivity radius %s" % (
                gauge.eta))
    return gauge.apply(eps)


def check_ball_correspondence(space, gauge, center, eps, probes):
    """
    Checks that ``d(center, q) < eps`` exactly when
    ``d'(center, q) < h(eps)`` for every probe ``q``, where ``d'`` is
    the metric of ``transform_metric(space, gauge)``.

    :rtype: pycompact.spaces.AxiomReport
    :return:
        A report whose violations carry ``(center, q)`` with ``lhs`` the
        original distance and ``rhs`` the transformed distance.
    """
    transformed = transform_metric(space, gauge)
    radius = ball_radius_map(gauge, eps)
    center = space.check_point(center)

    checked = 0
    violations = []
    for probe in probes:
        probe = space.check_point(probe)
        original = space.distance(center, probe)
        rescaled = transformed.distance(center, probe)
        checked += 1
        if (original < eps) != (rescaled < radius):
            violations.append(
                Violation((center, probe), BALL, original, rescaled))

    return AxiomReport(checked, tuple(violations))
