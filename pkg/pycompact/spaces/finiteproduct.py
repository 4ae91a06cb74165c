"""
Finite Product
--------------

Products of finitely many presented spaces under the weighted metric
``sum(w[i] * d[i](x[i], y[i]) / M[i])``.  Points are tuples.
"""

from itertools import product

from pycompact.core.checks import rational_check
from pycompact.exceptions import (
    InputError, PointNotInSpaceError, UnsupportedSpaceError)
from pycompact.spaces.base import Space, FINITE_PRODUCT, weighted_term


def check_component(space):
    """
    A component with a zero diameter bound has to be a single point,
    otherwise its term in the weighted metric is undefined.

    :raises pycompact.exceptions.InputError:
        Raised if ``space`` has a zero bound but more than one point.
    """
    if not isinstance(space, Space):
        raise InputError("component", space, allowed_types=(Space, ))
    if space.declared_bound == 0 and not space.is_single_point:
        raise InputError(
            "component", space,
            message="%s has diameter bound 0 but more than one point" % (
                space.name))


class FiniteProduct(Space):
    """
    The product of ``components`` with one positive weight per
    component.

    :param components:
        The component spaces, in coordinate order.

    :param weights:
        Positive rational weights, one per component.

    :keyword str name:
        The identifier of the space.
    """
    KIND = FINITE_PRODUCT

    def __init__(self, components, weights, name=None):
        self.components = tuple(components)
        if not self.components:
            raise InputError(
                "components", components, message="components is empty")
        for component in self.components:
            check_component(component)

        self.weights = tuple(
            rational_check("weights", weight, positive=True)
            for weight in weights)
        if len(self.weights) != len(self.components):
            raise InputError(
                "weights", weights,
                message="expected %d weights, got %d" % (
                    len(self.components), len(self.weights)))

        anchor_count = min(len(space.anchors) for space in self.components)
        anchors = [
            tuple(space.anchors[k] for space in self.components)
            for k in range(anchor_count)]

        super(FiniteProduct, self).__init__(
            name or "finite-product", sum(self.weights), anchors)

    @property
    def is_finite(self):
        return all(space.is_finite for space in self.components)

    @property
    def is_single_point(self):
        return all(space.is_single_point for space in self.components)

    def points(self):
        if not self.is_finite:
            raise UnsupportedSpaceError("enumeration", self.kind)
        return tuple(product(*[space.points() for space in self.components]))

    def check_point(self, point):
        if not isinstance(point, tuple) or \
                len(point) != len(self.components):
            raise PointNotInSpaceError(
                self.name, point,
                reason="expected a tuple of %d coordinates" % (
                    len(self.components)))
        return tuple(
            space.check_point(coordinate)
            for space, coordinate in zip(self.components, point))

    def distance(self, point, other):
        return sum(
            weighted_term(
                weight, space.distance(left, right), space.declared_bound)
            for space, weight, left, right in zip(
                self.components, self.weights, point, other))

    def parse_point(self, text):
        parts = text.split(",")
        if len(parts) != len(self.components):
            raise PointNotInSpaceError(
                self.name, text,
                reason="expected %d coordinates" % len(self.components))
        return tuple(
            space.parse_point(part)
            for space, part in zip(self.components, parts))

    def format_point(self, point):
        return ",".join(
            space.format_point(coordinate)
            for space, coordinate in zip(self.components, point))
