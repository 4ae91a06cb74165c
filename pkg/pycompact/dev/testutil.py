"""
Test Utility
------------

This module is used by the unittests.
"""

from random import choice
from string import ascii_lowercase, ascii_uppercase
from unittest import TestCase as _TestCase

from pycompact.core.config import config
from pycompact.core.logger import get_logger
from pycompact.core.rational import parse_rational
from pycompact.nets.coverage import probe_universe
from pycompact.product.countable import binary_product
from pycompact.product.points import ProductPoint
from pycompact.spaces.finite import binary_space

logger = get_logger("dev.testutil")

# The support bound the exhaustive product checks run with.
SUPPORT_BOUND = 6


class SharedState(object):  # pylint: disable=too-few-public-methods
    """
    Contains some state data which is shared across multiple
    :class:`TestCase` instances.  This is kept outside of the test
    case class itself so it can't be inadvertently modified by a test
    or fixture.
    """
    cantor = None
    universe = None


class TestCase(_TestCase):  # pylint: disable=too-many-public-methods
    """
    A base class for all test cases.  By default the
    core test case just provides some extra functionality.
    """
    @classmethod
    def setUpClass(cls):
        if SharedState.cantor is None:
            SharedState.cantor = binary_product()
            SharedState.universe = probe_universe(
                SharedState.cantor, support_bound=SUPPORT_BOUND)

    def setUp(self):
        # Tests may load configuration files of their own, always go back
        # to what's on disk afterwards.
        self.addCleanup(config.load)

    @property
    def cantor(self):
        """The binary product with weights ``2 ** -i``, shared"""
        return SharedState.cantor

    @property
    def universe(self):
        """
        Every point of :attr:`cantor` with support at most
        :data:`SUPPORT_BOUND`, shared.
        """
        return SharedState.universe

    def binary(self):  # pylint: disable=no-self-use
        """Returns a new two point space ``{0, 1}``"""
        return binary_space()

    def q(self, text):  # pylint: disable=invalid-name,no-self-use
        """Shorthand for :func:`pycompact.core.rational.parse_rational`"""
        return parse_rational(text)

    def point(self, text, space=None):
        """Parses ``text`` as a point of ``space``, :attr:`cantor` default"""
        return (space or self.cantor).parse_point(text)

    def bits(self, *prefix, **kwargs):  # pylint: disable=no-self-use
        """
        Returns the normalized product point with ``prefix`` followed by
        the ``tail`` keyword (0 by default).
        """
        return SharedState.cantor.normalize(
            ProductPoint(prefix, kwargs.get("tail", 0)))

    def assert_report_ok(self, report):
        """Fails with the first violation if ``report`` has any"""
        violations = getattr(report, "violations", None)
        if violations is None:
            violations = report.uncovered
        self.assertEqual(
            len(violations), 0,
            msg="%d problem(s), first: %r" % (
                len(violations), violations[0] if violations else None))

    def random_string(self, length):
        """
        Returns a random string as long as ``length``.  The first character
        will always be a letter, the rest are ASCII letters or digits.
        """
        if length < 1:  # pragma: no cover
            self.fail("Length must be at least 1.")

        # First character should always be a letter so the string
        # can be used in object names.
        output = choice(ascii_lowercase)
        length -= 1

        while length:
            length -= 1
            output += choice(ascii_lowercase + ascii_uppercase + "0123456789")

        return output
