"""
Completeness
------------

Recovering the limit of a Cauchy sequence of product points one
coordinate at a time.

A component with a smallest positive distance ``delta`` can't move
once the modulus drops below ``l[i] * delta / M[i]``: any later term
would have to differ by a whole ``delta`` in that coordinate, which
alone costs more than the modulus allows.
"""

from pycompact.core.checks import input_check, rational_check
from pycompact.core.logger import get_logger
from pycompact.exceptions import (
    CauchyModulusError, InputError, InsufficientEvidenceError,
    UnsupportedSpaceError)
from pycompact.product.countable import CountableProduct
from pycompact.product.points import ProductPoint
from pycompact.spaces.base import weighted_term

logger = get_logger("product.completeness")


def _modulus_values(modulus, count):
    if callable(modulus):
        values = [modulus(index) for index in range(1, count + 1)]
    else:
        values = list(modulus)[:count]
        if len(values) < count:
            raise InputError(
                "modulus", modulus,
                message="expected %d modulus values, got %d" % (
                    count, len(values)))
    return [
        rational_check("modulus(%d)" % index, value, positive=True)
        for index, value in enumerate(values, 1)]


def _separations(space):
    separations = []
    for component in space.cycle:
        if component.is_single_point:
            separations.append(None)
            continue
        separation = getattr(component, "min_separation", lambda: None)()
        if separation is None:
            raise UnsupportedSpaceError(
                "cauchy_limit", component.kind,
                message="component %s has no positive minimal distance" % (
                    component.name))
        separations.append(separation)
    return separations


def check_modulus(space, terms, bounds):
    """
    Verifies ``D(seq[j], seq[k]) < modulus(j)`` for every pair of
    evidence indexes ``j < k`` (1-based).

    :raises pycompact.exceptions.CauchyModulusError:
        Raised with the first violating pair.
    """
    for j in range(1, len(terms) + 1):
        for k in range(j + 1, len(terms) + 1):
            distance = space.distance(terms[j - 1], terms[k - 1])
            if not distance < bounds[j - 1]:
                raise CauchyModulusError((j, k), distance, bounds[j - 1])


def cauchy_limit(space, seq, modulus):
    """
    Returns the limit of a Cauchy sequence of product points.

    The evidence is checked against the modulus first.  Coordinate ``i``
    is then read off the first term ``j`` with
    ``modulus(j) < l[i] * delta[i] / M[i]``; the stabilized coordinates
    form the limit's prefix.  Each tail anchor gives a candidate limit
    and a candidate must satisfy ``D(seq[j], z) <= modulus(j)`` for every
    evidence index.  The consistent candidate closest to the last term
    wins, ties going to the lower anchor index.

    :param CountableProduct space:
        A product whose components are finite discrete spaces or single
        points.

    :param seq:
        The evidence: a non-empty list of product points, ``seq[0]``
        being term 1.

    :param modulus:
        A callable mapping ``k`` (1-based) to a rational ``> 0`` or a
        sequence of such values.

    :raises pycompact.exceptions.CauchyModulusError:
        Raised if the evidence violates the modulus.

    :raises pycompact.exceptions.InsufficientEvidenceError:
        Raised if no coordinate stabilizes or no candidate limit is
        consistent with the evidence.

    :raises pycompact.exceptions.UnsupportedSpaceError:
        Raised if a component has no positive minimal distance.

    :rtype: pycompact.product.ProductPoint
    """
    input_check("space", space, allowed_types=(CountableProduct, ))
    terms = [space.check_point(term) for term in seq]
    if not terms:
        raise InputError("seq", seq, message="seq is empty")
    bounds = _modulus_values(modulus, len(terms))
    check_modulus(space, terms, bounds)

    if space.is_single_point:
        return space.anchors[0]

    separations = _separations(space)
    length = len(space.cycle)
    smallest = min(bounds)

    prefix = []
    stabilized = 0
    index = 1
    while True:
        component = space.component(index)
        separation = separations[(index - 1) % length]
        if separation is None:
            prefix.append(component.anchors[0])
            index += 1
            continue

        threshold = weighted_term(
            space.weight(index), separation, component.declared_bound)
        if not smallest < threshold:
            break
        settled = next(
            position for position, bound in enumerate(bounds, 1)
            if bound < threshold)
        prefix.append(space.coordinate(terms[settled - 1], index))
        stabilized += 1
        index += 1

    if not stabilized:
        raise InsufficientEvidenceError(
            "No coordinate of the sequence stabilizes within %d terms" % (
                len(terms)))

    best = None
    for anchor in range(space.generator.anchor_count):
        candidate = space.check_point(ProductPoint(prefix, anchor))
        if any(space.distance(term, candidate) > bound
               for term, bound in zip(terms, bounds)):
            continue
        gap = space.distance(terms[-1], candidate)
        if best is None or gap < best[0]:
            best = (gap, candidate)

    if best is None:
        raise InsufficientEvidenceError(
            "No eventually-anchor point matching the %d stabilized "
            "coordinate(s) is consistent with the modulus" % stabilized)

    logger.debug(
        "Limit of %d terms: %d coordinate(s) stabilized, %r",
        len(terms), stabilized, best[1])
    return best[1]
