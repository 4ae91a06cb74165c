"""
Certificate
-----------

Net certificates and their line oriented text form::

    cantor 1/4 16
    ;0
    0,0,0,1;0
    ...

The header holds the space id, the radius and the number of points.
Each following line is one point in its space's text form.
"""

from six import string_types

from pycompact.core.checks import input_check, rational_check
from pycompact.core.rational import parse_rational
from pycompact.core.typesbase import ValueObject
from pycompact.exceptions import CertificateFormatError, InputError
from pycompact.spaces.base import Space


class NetCertificate(ValueObject):
    """
    A finite set of points of the space named ``space_id`` which claims
    every point of that space is within distance ``< eps`` of one of
    them.

    :param str space_id:
        The name of the space the points belong to.

    :param eps:
        The radius, a rational ``> 0``.

    :param points:
        The net, an iterable of pairwise distinct points.

    :raises pycompact.exceptions.InputError:
        Raised for a non-positive radius or repeated points.
    """
    FIELDS = ("space_id", "eps", "points")

    def __init__(self, space_id, eps, points):
        input_check("space_id", space_id, allowed_types=string_types)
        points = tuple(points)
        if len(set(points)) != len(points):
            raise InputError(
                "points", points, message="net points must be distinct")
        self._init_fields(
            space_id=space_id,
            eps=rational_check("eps", eps, positive=True),
            points=points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _format_eps(eps):
    return "%d/%d" % (eps.numerator, eps.denominator)


def dumps_certificate(space, certificate):
    """
    Returns the text form of ``certificate``, newline terminated.

    :raises pycompact.exceptions.InputError:
        Raised if ``certificate`` was made for a different space.

    :rtype: str
    """
    input_check("space", space, allowed_types=(Space, ))
    input_check("certificate", certificate,
                allowed_types=(NetCertificate, ))
    if certificate.space_id != space.name:
        raise InputError(
            "certificate", certificate,
            message="certificate is for %s, not %s" % (
                certificate.space_id, space.name))

    lines = ["%s %s %d" % (
        space.name, _format_eps(certificate.eps), len(certificate))]
    lines.extend(space.format_point(point) for point in certificate)
    return "\n".join(lines) + "\n"


def loads_certificate(space, text):
    """
    Parses the text form of a certificate for ``space``.  Blank lines
    at the end of ``text`` are ignored.

    :raises pycompact.exceptions.CertificateFormatError:
        Raised with the offending line number for a bad header, a
        header for another space, a wrong point count, a line which is
        not a point of ``space`` or a repeated point.

    :rtype: NetCertificate
    """
    input_check("space", space, allowed_types=(Space, ))
    lines = text.rstrip("\n").split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise CertificateFormatError(1, "missing header")

    header = lines[0].split()
    if len(header) != 3:
        raise CertificateFormatError(
            1, "expected '<space id> <num/den> <count>', got %r" % lines[0])
    space_id, eps_text, count_text = header
    if space_id != space.name:
        raise CertificateFormatError(
            1, "certificate is for %s, not %s" % (space_id, space.name))
    try:
        eps = parse_rational(eps_text)
    except InputError as error:
        raise CertificateFormatError(1, error.message)
    if eps <= 0:
        raise CertificateFormatError(1, "eps must be > 0, got %s" % eps_text)
    if not count_text.isdigit():
        raise CertificateFormatError(1, "bad point count %r" % count_text)

    body = lines[1:]
    if len(body) != int(count_text):
        raise CertificateFormatError(
            len(lines), "expected %s point(s), found %d" % (
                count_text, len(body)))

    points = []
    seen = set()
    for number, line in enumerate(body, 2):
        try:
            point = space.parse_point(line)
        except InputError as error:
            raise CertificateFormatError(number, error.message)
        if point in seen:
            raise CertificateFormatError(
                number, "repeated point %r" % line.strip())
        seen.add(point)
        points.append(point)

    return NetCertificate(space_id, eps, points)
