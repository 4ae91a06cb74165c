"""
Extraction
----------

Cluster points of sequences by nested balls.  At level ``n`` the
space is covered by balls of radius ``1 / (2n)`` around the points of
a net; the ball holding the most surviving terms wins and only the
terms inside it survive to the next level.  Two balls at levels ``n``
and ``n + i`` share a surviving term so their centers are closer than
``1 / (2n) + 1 / (2(n + i)) <= 1 / n``.

Only a finite horizon of terms can be examined so the result is an
``(eps, m)`` cluster point: a point within ``eps`` of ``m`` terms.
"""

from fractions import Fraction

from pycompact.core.checks import input_check, integer_check
from pycompact.core.logger import get_logger
from pycompact.core.typesbase import ValueObject
from pycompact.exceptions import InternalError
from pycompact.nets.synthesis import net_of
from pycompact.spaces.axioms import AxiomReport, Violation
from pycompact.spaces.base import Space

CAUCHY_ESTIMATE = "cauchy-estimate"

logger = get_logger("nets.extraction")


class ClusterPoint(ValueObject):
    """
    A point within ``eps`` of ``support_count`` examined terms.

    :ivar point:
        The last center of the chain.

    :ivar eps:
        ``1 / N`` for ``N`` levels.

    :ivar int support_count:
        The number of terms which survived every level.

    :ivar tuple chain:
        The centers ``y[1], ..., y[N]``, one per level.

    :ivar tuple survivors:
        The 1-based indexes of the surviving terms.
    """
    FIELDS = ("point", "eps", "support_count", "chain", "survivors")

    def __init__(self, point, eps, chain, survivors):
        survivors = tuple(survivors)
        self._init_fields(
            point=point, eps=eps, support_count=len(survivors),
            chain=tuple(chain), survivors=survivors)

    def check_chain(self, space):
        """
        Re-checks ``d(y[n + i], y[n]) < 1 / n`` for every pair of chain
        centers.

        :rtype: pycompact.spaces.AxiomReport
        """
        checked = 0
        violations = []
        for n, center in enumerate(self.chain, 1):
            for later in range(n + 1, len(self.chain) + 1):
                checked += 1
                distance = space.distance(self.chain[later - 1], center)
                if not distance < Fraction(1, n):
                    violations.append(Violation(
                        (n, later), CAUCHY_ESTIMATE, distance,
                        Fraction(1, n)))
        return AxiomReport(checked, tuple(violations))


def _materialize(space, seq, horizon):
    if callable(seq):
        return [space.check_point(seq(index))
                for index in range(1, horizon + 1)]
    terms = list(seq)[:horizon]
    if len(terms) < horizon:
        raise ValueError(
            "horizon %d is longer than the %d term(s) given" % (
                horizon, len(terms)))
    return [space.check_point(term) for term in terms]


def bw_extract(space, seq, horizon, levels):
    """
    Returns a cluster point of the first ``horizon`` terms of ``seq``.

    Ties between net points are broken by net order so the result is
    deterministic.

    :param pycompact.spaces.base.Space space:
        A space :func:`pycompact.nets.net_of` supports.

    :param seq:
        A callable mapping ``k`` (1-based) to a point or a sequence
        whose first item is term 1.

    :param int horizon:
        How many terms to examine, ``>= 1``.

    :param int levels:
        How many nested balls to use, ``>= 1``.

    :raises ValueError:
        Raised if ``seq`` is a sequence shorter than ``horizon``.

    :raises pycompact.exceptions.UnsupportedSpaceError:
        Raised if the space has no nets.

    :rtype: ClusterPoint
    """
    input_check("space", space, allowed_types=(Space, ))
    integer_check("horizon", horizon, minimum=1)
    integer_check("levels", levels, minimum=1)
    terms = _materialize(space, seq, horizon)

    survivors = list(range(1, horizon + 1))
    chain = []
    for level in range(1, levels + 1):
        radius = Fraction(1, 2 * level)
        best_center = None
        best_members = None
        for center in net_of(space, radius):
            members = [
                index for index in survivors
                if space.distance(center, terms[index - 1]) < radius]
            if best_members is None or len(members) > len(best_members):
                best_center, best_members = center, members

        if not best_members:
            raise InternalError(
                "No ball at level %d holds a surviving term" % level)

        logger.debug(
            "Level %d: radius %s keeps %d of %d term(s)",
            level, radius, len(best_members), len(survivors))
        chain.append(best_center)
        survivors = best_members

    return ClusterPoint(chain[-1], Fraction(1, levels), chain, survivors)
