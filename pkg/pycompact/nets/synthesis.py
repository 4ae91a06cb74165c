"""
Synthesis
---------

Finite ``eps`` nets for every kind of presented space.  Balls are open
throughout: a net point covers ``y`` when ``d(x, y) < eps``.
"""

from fractions import Fraction
from itertools import product

from pycompact.core.checks import input_check, rational_check
from pycompact.core.logger import get_logger
from pycompact.exceptions import UnsupportedSpaceError
from pycompact.nets.certificate import NetCertificate
from pycompact.product.countable import CountableProduct
from pycompact.product.points import ProductPoint
from pycompact.spaces.base import Space
from pycompact.spaces.finite import FiniteSpace
from pycompact.spaces.finiteproduct import FiniteProduct
from pycompact.spaces.interval import IntervalSpace

logger = get_logger("nets.synthesis")


def interval_grid(space, eps):
    """
    Returns ``low, low + s, ..., high`` where ``s`` is the width divided
    into ``floor(width / eps) + 1`` equal steps, so ``s < eps``.

    A gauge never increases distances (``h(t) <= t`` for both supported
    gauges) so the same grid serves gauged intervals.
    """
    width = space.high - space.low
    if width == 0:
        return (space.low, )
    steps = int(width // eps) + 1
    spacing = Fraction(width, steps)
    return tuple(space.low + spacing * step for step in range(steps + 1))


def _component_points(space, eps):
    if space.is_finite:
        return tuple(space.points())
    return _net_points(space, eps)


def _finite_product_points(space, eps):
    """
    Each coordinate gets an equal share ``eps / n`` of the budget: a
    component net at radius ``delta = eps * M / (n * w)`` keeps the
    coordinate's term ``w * d / M`` below ``eps / n``.
    """
    count = len(space.components)
    nets = []
    for component, weight in zip(space.components, space.weights):
        if component.declared_bound == 0:
            nets.append(tuple(component.points()))
            continue
        delta = eps * component.declared_bound / (count * weight)
        nets.append(_component_points(component, delta))
    return tuple(product(*nets))


def _countable_product_points(space, eps):
    depth = space.minimal_depth(eps)
    truncation = space.truncation(depth)
    points = []
    seen = set()
    for prefix in _finite_product_points(truncation, eps / 2):
        point = space.normalize(ProductPoint(prefix, space.default_anchor))
        if point not in seen:
            seen.add(point)
            points.append(point)
    logger.debug(
        "Net of %s at %s: depth %d, %d point(s)",
        space.name, eps, depth, len(points))
    return tuple(points)


def _net_points(space, eps):
    if isinstance(space, FiniteSpace):
        return tuple(space.points())
    if isinstance(space, IntervalSpace):
        return interval_grid(space, eps)
    if isinstance(space, FiniteProduct):
        return _finite_product_points(space, eps)
    if isinstance(space, CountableProduct):
        return _countable_product_points(space, eps)
    raise UnsupportedSpaceError("net synthesis", space.kind)


def net_of(space, eps):
    """
    Returns a certificate holding a finite ``eps`` net of ``space``.

    * finite discrete spaces: every point
    * intervals: an evenly spaced rational grid with spacing ``< eps``
    * finite products: the grid of component nets, each coordinate held
      to an equal share of ``eps``
    * countable products: the ``eps / 2`` net of the first ``n``
      coordinates, where ``n`` is the smallest depth whose weight tail
      is below ``eps / 2``, padded with the default anchor

    >>> from fractions import Fraction
    >>> from pycompact.product import binary_product
    >>> len(net_of(binary_product(), Fraction(1, 4)))
    16

    :param pycompact.spaces.base.Space space:
        The space to cover.

    :param eps:
        The radius, a rational ``> 0``.

    :raises pycompact.exceptions.InputError:
        Raised if ``eps <= 0``.

    :rtype: pycompact.nets.NetCertificate
    """
    input_check("space", space, allowed_types=(Space, ))
    eps = rational_check("eps", eps, positive=True)
    points = _net_points(space, eps)
    logger.debug("%s net of %s has %d point(s)", eps, space.name, len(points))
    return NetCertificate(space.name, eps, points)
