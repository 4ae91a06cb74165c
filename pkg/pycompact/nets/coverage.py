"""
Coverage
--------

Brute force verification of net certificates against finite probe
universes.
"""

from collections import namedtuple
from itertools import product

from six import string_types

from pycompact.core.checks import input_check, integer_check
from pycompact.core.config import config
from pycompact.core.logger import get_logger
from pycompact.exceptions import InputError, UnsupportedSpaceError
from pycompact.nets.certificate import NetCertificate
from pycompact.product.countable import CountableProduct
from pycompact.product.points import ProductPoint
from pycompact.spaces.axioms import EXHAUSTIVE
from pycompact.spaces.base import Space

logger = get_logger("nets.coverage")

Uncovered = namedtuple("Uncovered", ("probe", "distance"))


class CoverageReport(namedtuple(
        "CoverageReport", ("probes_checked", "uncovered"))):
    """
    The result of :func:`verify_coverage`.

    :ivar int probes_checked:
        How many probes were examined.

    :ivar tuple uncovered:
        :class:`Uncovered` entries, each a probe with its exact distance
        to the nearest net point.
    """
    __slots__ = ()

    @property
    def ok(self):
        """True if every probe was strictly within eps of the net"""
        return not self.uncovered


def probe_universe(space, support_bound=None):
    """
    Returns the exhaustive probe universe of ``space``.

    Finite spaces and finite products of finite spaces give every point.
    A countable product of finite components gives every point whose
    coordinates after ``support_bound`` all equal one tail anchor, so
    the binary product with ``support_bound=6`` gives ``2 ** 6 * 2``
    points.

    :keyword int support_bound:
        The support bound ``K`` for countable products.  Defaults to the
        configured ``[nets] support_bound``.

    :raises pycompact.exceptions.UnsupportedSpaceError:
        Raised if the space, or a component of a countable product, has
        infinitely many points.

    :rtype: tuple
    """
    input_check("space", space, allowed_types=(Space, ))
    if not isinstance(space, CountableProduct):
        if not space.is_finite:
            raise UnsupportedSpaceError("probe universe", space.kind)
        return tuple(space.points())

    if support_bound is None:
        support_bound = config.support_bound()
    integer_check("support_bound", support_bound, minimum=0)
    for component in space.cycle:
        if not component.is_finite:
            raise UnsupportedSpaceError(
                "probe universe", space.kind,
                message="component %s of %s has infinitely many "
                        "points" % (component.name, space.name))

    # Every shorter prefix is a length K prefix padded with its tail
    # anchor, so length K alone covers the whole universe.
    coordinates = [
        space.component(index).points()
        for index in range(1, support_bound + 1)]
    probes = []
    seen = set()
    for prefix in product(*coordinates):
        for anchor in range(space.generator.anchor_count):
            point = space.normalize(ProductPoint(prefix, anchor))
            if point not in seen:
                seen.add(point)
                probes.append(point)

    logger.debug(
        "Probe universe of %s with support bound %d has %d point(s)",
        space.name, support_bound, len(probes))
    return tuple(probes)


def verify_coverage(space, certificate, probes=EXHAUSTIVE,
                    support_bound=None):
    """
    Checks every probe against every net point with exact arithmetic.
    A probe is covered when some net point is strictly within
    ``certificate.eps`` of it.  Problems are returned, not raised.

    >>> from fractions import Fraction
    >>> from pycompact.product import binary_product
    >>> from pycompact.nets import net_of
    >>> space = binary_product()
    >>> report = verify_coverage(space, net_of(space, Fraction(1, 4)))
    >>> report.probes_checked, report.uncovered
    (128, ())

    :param NetCertificate certificate:
        The certificate to verify.

    :keyword probes:
        An iterable of points or :data:`pycompact.spaces.EXHAUSTIVE` for
        :func:`probe_universe`.

    :keyword int support_bound:
        Passed to :func:`probe_universe` for exhaustive runs.

    :raises pycompact.exceptions.InputError:
        Raised if the certificate was made for another space.

    :rtype: CoverageReport
    """
    input_check("space", space, allowed_types=(Space, ))
    input_check("certificate", certificate,
                allowed_types=(NetCertificate, ))
    if certificate.space_id != space.name:
        raise InputError(
            "certificate", certificate,
            message="certificate is for %s, not %s" % (
                certificate.space_id, space.name))

    if isinstance(probes, string_types):
        if probes != EXHAUSTIVE:
            raise ValueError("probes must be an iterable or %r" % EXHAUSTIVE)
        probes = probe_universe(space, support_bound=support_bound)

    net = [space.check_point(point) for point in certificate]
    checked = 0
    uncovered = []
    for probe in probes:
        probe = space.check_point(probe)
        checked += 1
        nearest = None
        for point in net:
            distance = space.distance(point, probe)
            if nearest is None or distance < nearest:
                nearest = distance
            if distance < certificate.eps:
                break
        else:
            uncovered.append(Uncovered(probe, nearest))

    logger.debug(
        "Checked %d probe(s) of %s against %d net point(s), %d uncovered",
        checked, space.name, len(net), len(uncovered))
    return CoverageReport(checked, tuple(uncovered))
