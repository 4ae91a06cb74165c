"""
Axioms
------

Exact checks of the metric axioms over a finite set of probe points.
Problems are returned as data in an :class:`AxiomReport` so callers can
show every witness instead of just the first one.
"""

from collections import namedtuple
from fractions import Fraction
from functools import reduce
from math import gcd

from pycompact.core.logger import get_logger
from pycompact.exceptions import UnsupportedSpaceError

EXHAUSTIVE = "exhaustive"

IDENTITY = "identity"
SYMMETRY = "symmetry"
TRIANGLE = "triangle"

logger = get_logger("spaces.axioms")

Violation = namedtuple("Violation", ("witness", "axiom", "lhs", "rhs"))


class AxiomReport(namedtuple("AxiomReport", ("checked", "violations"))):
    """
    The result of an exact law check.

    :ivar int checked:
        How many cases were examined.  For metric checks this is the
        number of ordered probe triples.

    :ivar tuple violations:
        A tuple of :class:`Violation` values, empty when every case held.
    """
    __slots__ = ()

    @property
    def triples_checked(self):
        """Alias of ``checked`` for metric axiom reports"""
        return self.checked

    @property
    def ok(self):
        """True if no violations were found"""
        return not self.violations


def _lcm(left, right):
    return left * right // gcd(left, right)


def _scaled_matrix(matrix):
    """
    Scales a matrix of fractions by the least common multiple of their
    denominators so the triangle scan runs on integers.  The scaling is
    exact and positive so every comparison is preserved.
    """
    scale = reduce(
        _lcm, (value.denominator for row in matrix for value in row), 1)
    return scale, [
        [value.numerator * (scale // value.denominator) for value in row]
        for row in matrix]


def check_metric_axioms(space, probes=EXHAUSTIVE):
    """
    Checks identity of indiscernibles, symmetry and the triangle
    inequality over every ordered triple of ``probes``.

    Pair axioms are reported once per ordered pair with the pair as the
    witness; triangle violations carry the triple ``(x, y, z)`` with
    ``lhs = d(x, z)`` and ``rhs = d(x, y) + d(y, z)``.

    >>> from pycompact.spaces import binary_space, check_metric_axioms
    >>> check_metric_axioms(binary_space())
    AxiomReport(checked=8, violations=())

    :param pycompact.spaces.base.Space space:
        The space to check.

    :keyword probes:
        Either :data:`EXHAUSTIVE` or an iterable of points of ``space``.

    :raises pycompact.exceptions.UnsupportedSpaceError:
        Raised if an exhaustive check is requested for a space with
        infinitely many points.

    :raises pycompact.exceptions.PointNotInSpaceError:
        Raised if a probe is not a point of ``space``.

    :rtype: AxiomReport
    """
    if isinstance(probes, str):
        if probes != EXHAUSTIVE:
            raise ValueError("probes must be an iterable or %r" % EXHAUSTIVE)
        if not space.is_finite:
            raise UnsupportedSpaceError(
                "exhaustive axiom check", space.kind)
        probes = space.points()

    probes = [space.check_point(probe) for probe in probes]
    size = len(probes)
    matrix = [
        [space.distance(left, right) for right in probes] for left in probes]

    violations = []
    for i, left in enumerate(probes):
        for j, right in enumerate(probes):
            value = matrix[i][j]
            if space.same(left, right):
                if value != 0:
                    violations.append(
                        Violation((left, right), IDENTITY, value, Fraction(0)))
            elif value <= 0:
                violations.append(
                    Violation((left, right), IDENTITY, value, Fraction(0)))

            if value != matrix[j][i]:
                violations.append(
                    Violation((left, right), SYMMETRY, value, matrix[j][i]))

    scale, scaled = _scaled_matrix(matrix)
    for i in range(size):
        row_i = scaled[i]
        for j in range(size):
            through = row_i[j]
            row_j = scaled[j]
            for k in range(size):
                if row_i[k] > through + row_j[k]:
                    violations.append(Violation(
                        (probes[i], probes[j], probes[k]), TRIANGLE,
                        Fraction(row_i[k], scale),
                        Fraction(through + row_j[k], scale)))

    logger.debug(
        "Checked %d triples of %s, %d violation(s)",
        size ** 3, space.name, len(violations))
    return AxiomReport(size ** 3, tuple(violations))
