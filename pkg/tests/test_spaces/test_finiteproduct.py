from fractions import Fraction

from pycompact.dev.testutil import TestCase
from pycompact.exceptions import (
    InputError, PointNotInSpaceError, UnsupportedSpaceError)
from pycompact.spaces import (
    FINITE_PRODUCT, FiniteProduct, FiniteSpace, IntervalSpace,
    binary_space, check_component, check_metric_axioms)


class TestFiniteProduct(TestCase):
    """
    Tests for :class:`pycompact.spaces.FiniteProduct`
    """
    def setUp(self):
        super(TestFiniteProduct, self).setUp()
        self.space = FiniteProduct(
            [binary_space(), IntervalSpace(0, 2)],
            [Fraction(1, 2), Fraction(1, 4)])

    def test_kind_and_bound(self):
        self.assertEqual(self.space.kind, FINITE_PRODUCT)
        self.assertEqual(self.space.declared_bound, Fraction(3, 4))

    def test_distance(self):
        # 1/2 * 1/1 + 1/4 * 1/2
        self.assertEqual(
            self.space.distance((0, Fraction(0)), (1, Fraction(1))),
            Fraction(5, 8))

    def test_anchors(self):
        self.assertEqual(self.space.anchors, ((0, 0), ))

    def test_not_enumerable_with_interval(self):
        with self.assertRaises(UnsupportedSpaceError):
            self.space.points()

    def test_wrong_arity(self):
        with self.assertRaises(PointNotInSpaceError):
            self.space.check_point((0, ))

    def test_weight_count(self):
        with self.assertRaises(InputError):
            FiniteProduct([binary_space()], [1, 1])

    def test_parse_and_format(self):
        point = self.space.parse_point("1,3/2")
        self.assertEqual(point, (1, Fraction(3, 2)))
        self.assertEqual(self.space.format_point(point), "1,3/2")

    def test_points_and_axioms(self):
        space = FiniteProduct(
            [binary_space(), binary_space()], [1, Fraction(1, 2)])
        self.assertEqual(len(space.points()), 4)
        self.assert_report_ok(check_metric_axioms(space))


class TestCheckComponent(TestCase):
    """
    Tests for :func:`pycompact.spaces.check_component`
    """
    def test_zero_bound_single_point(self):
        check_component(FiniteSpace(("p", ), {}))

    def test_zero_bound_several_points(self):
        space = FiniteSpace(
            ("a", "b"), {("a", "b"): 0}, validate=False)
        with self.assertRaises(InputError):
            check_component(space)

    def test_not_a_space(self):
        with self.assertRaises(InputError):
            check_component("binary")
