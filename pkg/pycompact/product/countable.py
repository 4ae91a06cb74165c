"""
Countable
---------

Countable products of presented spaces under the weighted metric

    D(x, y) = sum over i >= 1 of l[i] * d[i](x[i], y[i]) / M[i]

Points are eventually constant at an anchor, so ``D`` is a finite sum
over the explicit prefixes plus, when the tails differ, one closed form
geometric series per position in the component cycle.
"""

from fractions import Fraction

from pycompact.core.checks import input_check, integer_check, rational_check
from pycompact.core.logger import get_logger
from pycompact.core.typesbase import ValueObject
from pycompact.exceptions import InputError, PointNotInSpaceError
from pycompact.product.points import ProductPoint
from pycompact.product.weights import WeightSequence
from pycompact.spaces.base import (
    Space, COUNTABLE_PRODUCT, ZERO, weighted_term)
from pycompact.spaces.finite import binary_space
from pycompact.spaces.finiteproduct import FiniteProduct, check_component

logger = get_logger("product.countable")


class ComponentGenerator(ValueObject):
    """
    The family of component spaces: component ``i`` (1-based) is
    ``cycle[(i - 1) % len(cycle)]``.

    :param cycle:
        A non-empty iterable of :class:`pycompact.spaces.Space`.

    :raises pycompact.exceptions.InputError:
        Raised if the cycle is empty or a member has a zero diameter
        bound but more than one point.
    """
    FIELDS = ("cycle", )

    def __init__(self, cycle):
        cycle = tuple(cycle)
        if not cycle:
            raise InputError("cycle", cycle, message="cycle is empty")
        for space in cycle:
            check_component(space)
        self._init_fields(cycle=cycle)

    def component(self, index):
        """Returns the space of coordinate ``index`` (1-based)"""
        return self.cycle[(index - 1) % len(self.cycle)]

    @property
    def anchor_count(self):
        """How many anchor indexes every member of the cycle supports"""
        return min(len(space.anchors) for space in self.cycle)


class CountableProduct(Space):
    """
    A countable product under the weighted metric ``D``.  Use
    :func:`countable_product` to build one.

    :param ComponentGenerator generator:
        The component family.

    :param WeightSequence weights:
        The weights ``l[i]``.

    :keyword str name:
        The identifier of the space.

    :keyword int default_anchor:
        The anchor index used to pad net points.
    """
    KIND = COUNTABLE_PRODUCT

    def __init__(self, generator, weights, name=None, default_anchor=0):
        input_check("generator", generator,
                    allowed_types=(ComponentGenerator, ))
        input_check("weights", weights, allowed_types=(WeightSequence, ))
        self.generator = generator
        self.weights = weights

        anchor_count = generator.anchor_count
        integer_check("default_anchor", default_anchor, minimum=0)
        if default_anchor >= anchor_count:
            raise InputError(
                "default_anchor", default_anchor,
                allowed_values=tuple(range(anchor_count)))
        self.default_anchor = default_anchor

        super(CountableProduct, self).__init__(
            name or "countable-product", weights.total,
            [ProductPoint((), k) for k in range(anchor_count)])

    @property
    def cycle(self):
        """The component spaces, in cycle order"""
        return self.generator.cycle

    @property
    def is_single_point(self):
        return all(space.is_single_point for space in self.cycle)

    @property
    def is_finite(self):
        return self.is_single_point

    def points(self):
        if self.is_single_point:
            return (self.anchors[0], )
        return super(CountableProduct, self).points()

    def component(self, index):
        """Returns the space of coordinate ``index`` (1-based)"""
        return self.generator.component(index)

    def weight(self, index):
        """Returns ``l[index]`` for ``index >= 1``"""
        return self.weights.weight(index)

    def coordinate(self, point, index):
        """Returns coordinate ``index`` (1-based) of ``point``"""
        if index <= len(point.prefix):
            return point.prefix[index - 1]
        return self.component(index).anchors[point.tail_anchor]

    def term(self, point, other, index):
        """Returns ``l[i] * d[i](x[i], y[i]) / M[i]`` for ``i = index``"""
        space = self.component(index)
        return weighted_term(
            self.weight(index),
            space.distance(
                self.coordinate(point, index), self.coordinate(other, index)),
            space.declared_bound)

    def check_point(self, point):
        if not isinstance(point, ProductPoint):
            raise PointNotInSpaceError(
                self.name, point, reason="expected a ProductPoint")
        if point.tail_anchor >= self.generator.anchor_count:
            raise PointNotInSpaceError(
                self.name, point,
                reason="tail anchor %d is not valid for every component" % (
                    point.tail_anchor))

        prefix = []
        for index, coordinate in enumerate(point.prefix, 1):
            try:
                prefix.append(self.component(index).check_point(coordinate))
            except PointNotInSpaceError:
                raise PointNotInSpaceError(
                    self.name, point,
                    reason="coordinate %d is not a point of %s" % (
                        index, self.component(index).name))

        # Coordinates at the end of the prefix which equal the tail
        # anchor carry no information.
        while prefix:
            index = len(prefix)
            anchor = self.component(index).anchors[point.tail_anchor]
            if prefix[-1] != anchor:
                break
            prefix.pop()

        return ProductPoint(prefix, point.tail_anchor)

    def normalize(self, point):
        """Returns the normalized form of ``point``"""
        return self.check_point(point)

    def truncated_distance(self, point, other, depth):
        """
        Returns the sum of the first ``depth`` terms of ``D`` for two
        checked points.
        """
        return sum(
            (self.term(point, other, index)
             for index in range(1, depth + 1)), ZERO)

    def _tail_between(self, start, anchor, other_anchor):
        """
        Returns the sum of the terms after coordinate ``start`` for two
        points whose coordinates are anchors ``anchor`` and
        ``other_anchor`` from there on.
        """
        if anchor == other_anchor:
            return ZERO

        length = len(self.cycle)
        ratio = self.weights.ratio
        period = 1 - ratio ** length
        total = ZERO
        for offset, space in enumerate(self.cycle):
            spread = weighted_term(
                1, space.distance(
                    space.anchors[anchor], space.anchors[other_anchor]),
                space.declared_bound)
            if spread == 0:
                continue
            first = start + 1 + (offset - start) % length
            total += self.weights.scale * spread * ratio ** first / period
        return total

    def distance(self, point, other):
        depth = max(len(point.prefix), len(other.prefix))
        return self.truncated_distance(point, other, depth) + \
            self._tail_between(depth, point.tail_anchor, other.tail_anchor)

    def tail_bound(self, depth):
        """Returns the sum of ``l[i]`` for ``i > depth``"""
        integer_check("depth", depth, minimum=1)
        return self.weights.tail(depth)

    def minimal_depth(self, eps):
        """
        Returns the smallest ``n >= 1`` with ``tail_bound(n) < eps / 2``.
        """
        eps = rational_check("eps", eps, positive=True)
        depth = 1
        while self.weights.tail(depth) >= eps / 2:
            depth += 1
        return depth

    def truncation(self, depth):
        """
        Returns the product of the first ``depth`` components under the
        truncated weighted metric.
        """
        integer_check("depth", depth, minimum=1)
        return FiniteProduct(
            [self.component(index) for index in range(1, depth + 1)],
            [self.weight(index) for index in range(1, depth + 1)],
            name="%s[1..%d]" % (self.name, depth))

    def parse_point(self, text):
        text = text.strip()
        if ";" in text:
            coordinates, _, tail = text.partition(";")
            try:
                tail_anchor = int(tail.strip())
            except ValueError:
                raise PointNotInSpaceError(
                    self.name, text, reason="bad tail anchor %r" % tail)
        else:
            coordinates, tail_anchor = text, self.default_anchor

        coordinates = coordinates.strip()
        parts = coordinates.split(",") if coordinates else []
        prefix = [
            self.component(index).parse_point(part)
            for index, part in enumerate(parts, 1)]
        if tail_anchor < 0:
            raise PointNotInSpaceError(
                self.name, text, reason="negative tail anchor")
        return self.check_point(ProductPoint(prefix, tail_anchor))

    def format_point(self, point):
        point = self.check_point(point)
        return "%s;%d" % (
            ",".join(
                self.component(index).format_point(coordinate)
                for index, coordinate in enumerate(point.prefix, 1)),
            point.tail_anchor)


def countable_product(generator, weights, name=None, default_anchor=0):
    """
    Returns the countable product of ``generator``'s components under
    the weighted metric ``D``.  Its diameter bound is the weight total
    ``L`` and its anchors are the constant anchor sequences.

    :rtype: CountableProduct
    """
    space = CountableProduct(
        generator, weights, name=name, default_anchor=default_anchor)
    logger.debug(
        "Built %s over %d component(s), weights %s",
        space.name, len(generator.cycle), weights.describe())
    return space


def product_metric_D(space, point, other):  # pylint: disable=invalid-name
    """
    Returns ``D(point, other)`` exactly.

    :raises pycompact.exceptions.PointNotInSpaceError:
        Raised if a coordinate is not presentable.

    :rtype: fractions.Fraction
    """
    input_check("space", space, allowed_types=(CountableProduct, ))
    return space.distance(space.check_point(point), space.check_point(other))


def tail_bound(space, depth):
    """
    Returns the exact sum of the weights after coordinate ``depth``.

    :rtype: fractions.Fraction
    """
    input_check("space", space, allowed_types=(CountableProduct, ))
    return space.tail_bound(depth)


def truncated_distance(space, point, other, depth):
    """Returns the sum of the first ``depth`` terms of ``D``"""
    input_check("space", space, allowed_types=(CountableProduct, ))
    integer_check("depth", depth, minimum=0)
    return space.truncated_distance(
        space.check_point(point), space.check_point(other), depth)


def minimal_depth(space, eps):
    """Returns the smallest ``n >= 1`` with ``tail_bound(n) < eps / 2``"""
    input_check("space", space, allowed_types=(CountableProduct, ))
    return space.minimal_depth(eps)


def binary_product(name="cantor"):
    """
    Returns the product of copies of ``{0, 1}`` with weights
    ``2 ** -i``, so ``D(x, y) = sum(2 ** -i * |x[i] - y[i]|)``.
    """
    return countable_product(
        ComponentGenerator([binary_space()]),
        WeightSequence(Fraction(1, 2), 1), name=name)
