from fractions import Fraction

from pycompact.dev.testutil import TestCase
from pycompact.exceptions import CertificateFormatError, InputError
from pycompact.nets import (
    NetCertificate, dumps_certificate, loads_certificate, net_of)


class TestNetCertificate(TestCase):
    """
    Tests for :class:`pycompact.nets.NetCertificate`
    """
    def test_fields(self):
        certificate = NetCertificate("binary", Fraction(1, 2), [0, 1])
        self.assertEqual(certificate.points, (0, 1))
        self.assertEqual(len(certificate), 2)
        self.assertEqual(list(certificate), [0, 1])

    def test_repeated_point(self):
        with self.assertRaises(InputError):
            NetCertificate("binary", 1, [0, 0])

    def test_eps_must_be_positive(self):
        with self.assertRaises(InputError):
            NetCertificate("binary", 0, [0])

    def test_space_id_type(self):
        with self.assertRaises(InputError):
            NetCertificate(1, 1, [0])


class TestDumpsCertificate(TestCase):
    """
    Tests for :func:`pycompact.nets.dumps_certificate`
    """
    def test_binary_product(self):
        text = dumps_certificate(
            self.cantor, net_of(self.cantor, Fraction(1, 4)))
        lines = text.split("\n")
        self.assertEqual(lines[0], "cantor 1/4 16")
        self.assertEqual(lines[1], ";0")
        self.assertEqual(lines[2], "0,0,0,1;0")
        self.assertEqual(lines[-1], "")
        self.assertEqual(len(lines), 18)

    def test_integer_eps(self):
        space = self.binary()
        self.assertEqual(
            dumps_certificate(space, NetCertificate("binary", 2, [0, 1])),
            "binary 2/1 2\n0\n1\n")

    def test_other_space(self):
        with self.assertRaises(InputError):
            dumps_certificate(
                self.cantor, NetCertificate("binary", 2, [0, 1]))


class TestLoadsCertificate(TestCase):
    """
    Tests for :func:`pycompact.nets.loads_certificate`
    """
    def assert_format_error(self, text, line):
        with self.assertRaises(CertificateFormatError) as error:
            loads_certificate(self.cantor, text)
        self.assertEqual(error.exception.line, line)
        self.assertTrue(
            error.exception.message.startswith("line %d:" % line))

    def test_reload(self):
        certificate = net_of(self.cantor, Fraction(1, 8))
        self.assertEqual(
            loads_certificate(
                self.cantor, dumps_certificate(self.cantor, certificate)),
            certificate)

    def test_trailing_blank_lines(self):
        certificate = loads_certificate(self.cantor, "cantor 1/2 1\n;1\n\n\n")
        self.assertEqual(certificate.points, (self.bits(tail=1), ))

    def test_points_are_normalized(self):
        certificate = loads_certificate(self.cantor, "cantor 1/2 1\n1,0,0;0")
        self.assertEqual(certificate.points, (self.bits(1), ))

    def test_empty(self):
        self.assert_format_error("", 1)

    def test_short_header(self):
        self.assert_format_error("cantor 1/4\n;0\n", 1)

    def test_other_space(self):
        self.assert_format_error("binary 1/4 1\n;0\n", 1)

    def test_bad_eps(self):
        self.assert_format_error("cantor quarter 1\n;0\n", 1)

    def test_zero_eps(self):
        self.assert_format_error("cantor 0/1 1\n;0\n", 1)

    def test_bad_count(self):
        self.assert_format_error("cantor 1/4 one\n;0\n", 1)

    def test_count_mismatch(self):
        self.assert_format_error("cantor 1/4 2\n;0\n", 2)

    def test_bad_point(self):
        self.assert_format_error("cantor 1/4 2\n;0\n1;x\n", 3)

    def test_bad_coordinate(self):
        self.assert_format_error("cantor 1/4 2\n;0\n1,2;0\n", 3)

    def test_repeated_point(self):
        self.assert_format_error("cantor 1/4 2\n;0\n0,0;0\n", 3)
