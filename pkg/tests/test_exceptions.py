from fractions import Fraction

from pycompact.dev.testutil import TestCase
from pycompact.exceptions import (
    PyCompactError, InputError, PointNotInSpaceError, UnsupportedSpaceError,
    MetricAxiomError, DiameterBoundError, CauchyModulusError,
    InsufficientEvidenceError, CertificateFormatError, DefinitionError,
    DefinitionSyntaxError, UnknownNameError, InternalError,
    ConfigurationError)
from pycompact.spaces.axioms import TRIANGLE, Violation


class TestBaseClasses(TestCase):
    """
    Tests the base classes of our custom exceptions
    """
    def test_pycompacterror(self):
        self.assertTrue(issubclass(PyCompactError, Exception))

    def test_direct_subclasses(self):
        for error in (InputError, UnsupportedSpaceError, MetricAxiomError,
                      DiameterBoundError, CauchyModulusError,
                      InsufficientEvidenceError, CertificateFormatError,
                      DefinitionError, InternalError):
            self.assertTrue(issubclass(error, PyCompactError), error)

    def test_pointnotinspaceerror(self):
        self.assertTrue(issubclass(PointNotInSpaceError, InputError))

    def test_definitionerror(self):
        self.assertTrue(issubclass(DefinitionSyntaxError, DefinitionError))
        self.assertTrue(issubclass(UnknownNameError, DefinitionError))

    def test_internalerror(self):
        self.assertTrue(issubclass(ConfigurationError, InternalError))


class TestInputError(TestCase):
    """
    Test case for :class:`pycompact.exceptions.InputError`
    """
    def test_input_values_are_none(self):
        with self.assertRaises(ValueError):
            InputError(
                "", None,
                allowed_types=None, allowed_values=None, message=None)

    def test_both_allowed_values_and_types_defined(self):
        with self.assertRaises(ValueError):
            InputError("", None, allowed_types=(int, ), allowed_values=(2, ))

    def test_attribute_test_value(self):
        error = InputError("", "foo", allowed_types=(int, ))
        self.assertEqual(error.value, "foo")

    def test_attribute_allowed_types(self):
        error = InputError("", "", allowed_types=(int,))
        self.assertEqual(error.allowed_types, (int, ))

    def test_attribute_allowed_values(self):
        error = InputError("", "", allowed_values=(1,))
        self.assertEqual(error.allowed_values, (1, ))

    def test_custom_message(self):
        error = InputError("", "", message="hello")
        self.assertEqual(str(error), "hello")

    def test_type_message(self):
        error = InputError("x", 1.5, allowed_types=(int, ))
        self.assertIn("'x'", error.message)
        self.assertIn("float", error.message)


class TestPointNotInSpaceError(TestCase):
    """
    Test case for :class:`pycompact.exceptions.PointNotInSpaceError`
    """
    def test_message(self):
        error = PointNotInSpaceError("binary", 2, reason="unknown label")
        self.assertEqual(error.space, "binary")
        self.assertEqual(error.value, 2)
        self.assertEqual(
            error.message, "2 is not a point of binary (unknown label).")


class TestMetricAxiomError(TestCase):
    """
    Test case for :class:`pycompact.exceptions.MetricAxiomError`
    """
    def test_carries_violation(self):
        violation = Violation(("a", "b", "c"), TRIANGLE, 3, 2)
        error = MetricAxiomError(violation)
        self.assertIs(error.violation, violation)
        self.assertIn("triangle", error.message)


class TestCauchyModulusError(TestCase):
    """
    Test case for :class:`pycompact.exceptions.CauchyModulusError`
    """
    def test_attributes(self):
        error = CauchyModulusError((1, 2), Fraction(1), Fraction(1, 2))
        self.assertEqual(error.pair, (1, 2))
        self.assertEqual(error.distance, 1)
        self.assertEqual(error.bound, Fraction(1, 2))


class TestPositionedErrors(TestCase):
    """
    Tests for the errors which carry a position
    """
    def test_certificate_format_error(self):
        error = CertificateFormatError(3, "bad point")
        self.assertEqual(error.line, 3)
        self.assertEqual(error.message, "line 3: bad point")

    def test_definition_error(self):
        error = UnknownNameError(2, 7, "no such space")
        self.assertEqual((error.line, error.column), (2, 7))
        self.assertEqual(error.message, "2:7: no such space")
