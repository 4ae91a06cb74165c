from fractions import Fraction

from pycompact.dev.testutil import TestCase
from pycompact.exceptions import InputError, UnsupportedSpaceError
from pycompact.gauge import (
    CapGauge, RationalBendGauge, ball_radius_map, bounded_metric,
    check_ball_correspondence, transform_metric)
from pycompact.spaces import (
    FiniteSpace, IntervalSpace, binary_space, check_metric_axioms)


class TestTransformMetric(TestCase):
    """
    Tests for :func:`pycompact.gauge.transform_metric`
    """
    def test_finite_rational_bend(self):
        space = transform_metric(binary_space(), RationalBendGauge())
        self.assertEqual(space.name, "binary~bend")
        self.assertEqual(space.distance(0, 1), Fraction(1, 2))
        self.assertEqual(space.declared_bound, Fraction(1, 2))
        self.assertEqual(space.anchors, (0, 1))

    def test_finite_table_stays_a_metric(self):
        space = FiniteSpace(
            ("a", "b", "c"),
            {("a", "b"): 2, ("b", "c"): 3, ("a", "c"): 4})
        transformed = transform_metric(space, CapGauge(Fraction(5, 2)))
        self.assertEqual(transformed.distance("a", "c"), Fraction(5, 2))
        self.assert_report_ok(check_metric_axioms(transformed))

    def test_interval(self):
        space = transform_metric(
            IntervalSpace(0, 3), RationalBendGauge(), name="bent")
        self.assertEqual(space.name, "bent")
        self.assertEqual(space.distance(0, 3), Fraction(3, 4))
        self.assertEqual(space.declared_bound, Fraction(3, 4))

    def test_interval_twice(self):
        space = transform_metric(IntervalSpace(0, 1), RationalBendGauge())
        with self.assertRaises(UnsupportedSpaceError):
            transform_metric(space, CapGauge())

    def test_bounded_metric(self):
        space = bounded_metric(IntervalSpace(0, 5))
        self.assertEqual(space.declared_bound, 1)
        self.assertEqual(space.distance(0, 3), 1)
        self.assertEqual(space.distance(0, Fraction(1, 2)), Fraction(1, 2))

    def test_product(self):
        with self.assertRaises(UnsupportedSpaceError):
            transform_metric(self.cantor, CapGauge())


class TestBallRadiusMap(TestCase):
    """
    Tests for :func:`pycompact.gauge.ball_radius_map`
    """
    def test_rational_bend(self):
        self.assertEqual(
            ball_radius_map(RationalBendGauge(), Fraction(1, 2)),
            Fraction(1, 3))

    def test_rational_bend_without_cutoff(self):
        self.assertEqual(
            ball_radius_map(RationalBendGauge(), 100), Fraction(100, 101))

    def test_declared_cutoff(self):
        with self.assertRaises(InputError):
            ball_radius_map(RationalBendGauge(Fraction(1, 2)), Fraction(1, 2))

    def test_cap(self):
        self.assertEqual(
            ball_radius_map(CapGauge(1), Fraction(1, 4)), Fraction(1, 4))
        with self.assertRaises(InputError):
            ball_radius_map(CapGauge(1), 1)

    def test_eps_must_be_positive(self):
        with self.assertRaises(InputError):
            ball_radius_map(CapGauge(1), 0)


class TestCheckBallCorrespondence(TestCase):
    """
    Tests for :func:`pycompact.gauge.check_ball_correspondence`
    """
    def setUp(self):
        super(TestCheckBallCorrespondence, self).setUp()
        self.probes = [Fraction(k, 8) for k in range(25)]

    def test_cap(self):
        report = check_ball_correspondence(
            IntervalSpace(0, 3), CapGauge(1), 0, Fraction(1, 2), self.probes)
        self.assertEqual(report.checked, 25)
        self.assert_report_ok(report)

    def test_rational_bend(self):
        report = check_ball_correspondence(
            IntervalSpace(0, 3), RationalBendGauge(), Fraction(1, 2), 2,
            self.probes)
        self.assert_report_ok(report)

    def test_finite(self):
        report = check_ball_correspondence(
            binary_space(), RationalBendGauge(), 0, Fraction(3, 2), (0, 1))
        self.assert_report_ok(report)
