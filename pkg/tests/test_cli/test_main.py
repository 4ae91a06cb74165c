import io
import logging
import os
import shutil
import tempfile
from textwrap import dedent

from mock import patch

from pycompact.cli.main import (
    EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main)
from pycompact.core.config import config
from pycompact.dev.testutil import TestCase

DEFINITIONS = dedent("""
    # spaces used by the command line tests
    finite tri { points = a, b, c; d(a, b) = 1; d(b, c) = 1; d(a, c) = 2 }
    interval unit { endpoints = 0, 1 }
    product cube { cycle = unit; weights = geometric(1/2) }
""")


class MainTestCase(TestCase):
    """
    Runs :func:`pycompact.cli.main.main` with captured output in a
    temporary directory.
    """
    def setUp(self):
        super(MainTestCase, self).setUp()
        self.directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.directory)

        # Keep the stream handler's level from leaking between tests.
        patcher = patch("pycompact.cli.main.enable_stream_logging")
        self.enable_stream_logging = patcher.start()
        self.addCleanup(patcher.stop)

        self.definitions = self.write("spaces.def", DEFINITIONS)

    def write(self, name, text):
        path = os.path.join(self.directory, name)
        with io.open(path, "w", encoding="utf-8") as file_:
            file_.write(text)
        return path

    def write_bytes(self, name, data):
        path = os.path.join(self.directory, name)
        with open(path, "wb") as file_:
            file_.write(data)
        return path

    def run_main(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        code = main(list(argv), out=out, err=err)
        return code, out.getvalue(), err.getvalue()


class TestParser(MainTestCase):
    """
    Tests for :func:`pycompact.cli.main.build_parser`
    """
    def test_command_required(self):
        with self.assertRaises(SystemExit):
            build_parser().parse_args([])

    def test_eps_must_be_positive(self):
        with self.assertRaises(SystemExit):
            build_parser().parse_args(["net", "cantor", "--eps", "0"])

    def test_eps_must_be_rational(self):
        with self.assertRaises(SystemExit):
            build_parser().parse_args(["net", "cantor", "--eps", "0.25"])

    def test_eps(self):
        args = build_parser().parse_args(["net", "cantor", "--eps", "1/4"])
        self.assertEqual(args.eps, self.q("1/4"))

    def test_horizon(self):
        with self.assertRaises(SystemExit):
            build_parser().parse_args(
                ["limit", "cantor", "--seq", "x", "--horizon", "-1",
                 "--levels", "1"])


class TestLogging(MainTestCase):
    """
    Tests for the logging setup done by :func:`pycompact.cli.main.main`
    """
    def test_default_level(self):
        self.run_main("map-f", "1;0")
        self.enable_stream_logging.assert_called_once_with(
            config.logging_level())

    def test_verbose(self):
        self.run_main("-v", "map-f", "1;0")
        self.enable_stream_logging.assert_called_once_with(logging.DEBUG)


class TestDist(MainTestCase):
    """
    Tests for ``pycompact dist``
    """
    def test_builtin(self):
        self.assertEqual(
            self.run_main("dist", "cantor", "1;0", "0;1"),
            (EXIT_OK, "1\n", ""))

    def test_single_bit(self):
        code, out, _ = self.run_main("dist", "cantor", "0,0,1;0", ";0")
        self.assertEqual((code, out), (EXIT_OK, "1/8\n"))

    def test_definition_file(self):
        code, out, _ = self.run_main(
            "-f", self.definitions, "dist", "unit", "1/3", "3/4")
        self.assertEqual((code, out), (EXIT_OK, "5/12\n"))

    def test_configured_definition_file(self):
        with patch.object(
                config, "definitions_path", return_value=self.definitions):
            code, out, _ = self.run_main("dist", "tri", "a", "c")
        self.assertEqual((code, out), (EXIT_OK, "2\n"))

    def test_unknown_space(self):
        code, out, err = self.run_main("dist", "nope", "a", "b")
        self.assertEqual((code, out), (EXIT_USAGE, ""))
        self.assertIn("pycompact: error: ", err)
        self.assertIn("no space named 'nope'", err)

    def test_bad_point(self):
        code, _, err = self.run_main("dist", "cantor", "2;0", ";0")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("is not a point of", err)

    def test_missing_file(self):
        code, _, err = self.run_main(
            "-f", os.path.join(self.directory, "missing.def"),
            "dist", "cantor", ";0", ";1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("can't read", err)

    def test_broken_definitions(self):
        path = self.write(
            "broken.def",
            "finite tri { points = a, b, c; d(a, b) = 1; d(b, c) = 1; "
            "d(a, c) = 3 }")
        code, _, err = self.run_main("-f", path, "dist", "tri", "a", "b")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("%s:1:1:" % path, err)
        self.assertIn("witness a, b, c: 3 vs 2", err)


class TestCheckAxioms(MainTestCase):
    """
    Tests for ``pycompact check-axioms``
    """
    def test_finite(self):
        code, out, _ = self.run_main(
            "-f", self.definitions, "check-axioms", "tri")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("violations 0\n", out)

    def test_product(self):
        code, out, _ = self.run_main(
            "check-axioms", "cantor", "--support-bound", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("violations 0\n", out)

    def test_probe_file(self):
        probes = self.write("probes.txt", "0\n1/3\n\n1\n")
        code, out, _ = self.run_main(
            "-f", self.definitions, "check-axioms", "unit",
            "--probes", probes)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("violations 0\n", out)

    def test_interval_needs_probes(self):
        code, _, err = self.run_main(
            "-f", self.definitions, "check-axioms", "unit")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("pycompact: error: ", err)


class TestNetAndVerify(MainTestCase):
    """
    Tests for ``pycompact net`` and ``pycompact verify``
    """
    def test_net_to_stdout(self):
        code, out, _ = self.run_main("net", "cantor", "--eps", "1/4")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "cantor 1/4 16")
        self.assertEqual(len(lines), 17)

    def test_net_then_verify(self):
        path = os.path.join(self.directory, "cantor.net")
        code, out, _ = self.run_main(
            "net", "cantor", "--eps", "1/4", "--out", path)
        self.assertEqual((code, out), (EXIT_OK, ""))

        code, out, _ = self.run_main(
            "verify", "cantor", "--cert", path, "--support-bound", "6")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "probes 128\nuncovered 0\n")

    def test_configured_support_bound(self):
        path = os.path.join(self.directory, "cantor.net")
        self.run_main("net", "cantor", "--eps", "1/2", "--out", path)
        with patch.object(config, "support_bound", return_value=3):
            code, out, _ = self.run_main("verify", "cantor", "--cert", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "probes 16\nuncovered 0\n")

    def test_uncovered(self):
        path = self.write("sparse.net", "cantor 1/4 1\n;1\n")
        code, out, _ = self.run_main(
            "verify", "cantor", "--cert", path, "--support-bound", "1")
        self.assertEqual(code, EXIT_FAILED)
        lines = out.splitlines()
        self.assertEqual(lines[:2], ["probes 4", "uncovered 3"])
        self.assertIn(";0\t1", lines)

    def test_malformed_certificate(self):
        path = self.write("bad.net", "cantor 1/4 2\n;0\n")
        code, _, err = self.run_main("verify", "cantor", "--cert", path)
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("line 2:", err)

    def test_product_of_intervals(self):
        code, out, _ = self.run_main(
            "-f", self.definitions, "net", "cube", "--eps", "1/2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines()[0], "cube 1/2 120")

    def test_interval_net(self):
        code, out, _ = self.run_main(
            "-f", self.definitions, "net", "unit", "--eps", "1/3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "unit 1/3 5\n0\n1/4\n1/2\n3/4\n1\n")


class TestBallWitness(MainTestCase):
    """
    Tests for ``pycompact ball-witness``
    """
    def test_cantor(self):
        code, out, _ = self.run_main(
            "ball-witness", "cantor", "--point", ";0", "--eps", "1/4")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "depth 4\nbudget 1/8\nradius 1/8\n")

    def test_not_a_product(self):
        code, _, err = self.run_main(
            "ball-witness", "binary", "--point", "0", "--eps", "1/4")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("ball-witness", err)


class TestLimit(MainTestCase):
    """
    Tests for ``pycompact limit``
    """
    def setUp(self):
        super(TestLimit, self).setUp()
        self.seq = self.write(
            "seq.txt", "\n".join(
                ",".join(["0"] * (k - 1) + ["1"]) + ";0"
                for k in range(1, 17)))

    def test_single_bit_sequence(self):
        code, out, _ = self.run_main(
            "limit", "cantor", "--seq", self.seq, "--horizon", "16",
            "--levels", "2")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[:3], ["point ;0", "eps 1/2", "support 14"])
        self.assertEqual(lines[3:], ["chain 1 ;0", "chain 2 ;0"])

    def test_horizon_too_long(self):
        code, _, err = self.run_main(
            "limit", "cantor", "--seq", self.seq, "--horizon", "17",
            "--levels", "2")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("--horizon 17", err)


class TestQuotientCommands(MainTestCase):
    """
    Tests for ``pycompact map-f`` and ``pycompact preimage``
    """
    def test_map_f(self):
        self.assertEqual(
            self.run_main("map-f", "101;0"), (EXIT_OK, "5/8\n", ""))

    def test_map_f_one_tail(self):
        self.assertEqual(self.run_main("map-f", "0;1")[1], "1/2\n")

    def test_map_f_bad_bits(self):
        self.assertEqual(self.run_main("map-f", "12;0")[0], EXIT_USAGE)

    def test_preimage(self):
        self.assertEqual(
            self.run_main("preimage", "1/2"), (EXIT_OK, "1;0\n0;1\n", ""))

    def test_preimage_endpoint(self):
        self.assertEqual(self.run_main("preimage", "1")[1], ";1\n")

    def test_preimage_not_dyadic(self):
        self.assertEqual(self.run_main("preimage", "1/3"), (EXIT_OK, "", ""))

    def test_preimage_outside(self):
        code, _, err = self.run_main("preimage", "3/2")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("outside [0, 1]", err)


class TestUndecodableFiles(MainTestCase):
    """
    Tests for files which are not valid UTF-8
    """
    def test_definition_file(self):
        path = self.write_bytes(
            "latin.def", b"finite a { points = \xff\xfe; }")
        code, out, err = self.run_main(
            "-f", path, "dist", "binary", "0", "1")
        self.assertEqual((code, out), (EXIT_USAGE, ""))
        self.assertIn("pycompact: error: can't read %s" % path, err)

    def test_certificate_file(self):
        path = self.write_bytes("latin.net", b"cantor 1/4 1\n\xff;0\n")
        code, out, err = self.run_main(
            "verify", "cantor", "--cert", path, "--support-bound", "1")
        self.assertEqual((code, out), (EXIT_USAGE, ""))
        self.assertIn("pycompact: error: can't read %s" % path, err)

    def test_sequence_file(self):
        path = self.write_bytes("latin.txt", b";0\n\xff\n")
        code, _, err = self.run_main(
            "limit", "cantor", "--seq", path, "--horizon", "1",
            "--levels", "1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("can't read %s" % path, err)
