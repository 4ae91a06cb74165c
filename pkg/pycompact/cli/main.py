"""
Main
----

The ``pycompact`` command.  Each subcommand loads the definition file,
runs one library operation and prints exact results.  Exit codes:

* 0 -- success, or the certificate or table checked out
* 1 -- a verification found problems
* 2 -- usage, parse or input errors
"""

from __future__ import print_function

import argparse
import logging
import io
import sys

from pycompact import __version__
from pycompact.core.config import config
from pycompact.core.logger import enable_stream_logging, get_logger
from pycompact.core.rational import format_rational, parse_rational
from pycompact.exceptions import (
    DefinitionError, InputError, PyCompactError, UnsupportedSpaceError)
from pycompact.cli.loader import SpaceDefFile
from pycompact.nets.certificate import dumps_certificate, loads_certificate
from pycompact.nets.coverage import probe_universe, verify_coverage
from pycompact.nets.extraction import bw_extract
from pycompact.nets.synthesis import net_of
from pycompact.product.countable import CountableProduct
from pycompact.product.topology import ball_to_open, open_to_ball
from pycompact.quotient.mapping import f_eval, f_preimages
from pycompact.quotient.sequences import BinarySeq
from pycompact.spaces.axioms import EXHAUSTIVE, check_metric_axioms

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

logger = get_logger("cli.main")


class UsageError(Exception):
    """Raised for command line problems argparse can't see"""


def rational_argument(text):
    """argparse ``type`` for ``num/den`` arguments"""
    try:
        return parse_rational(text)
    except InputError as error:
        raise argparse.ArgumentTypeError(error.message)


def positive_rational_argument(text):
    """argparse ``type`` for ``num/den`` arguments which must be ``> 0``"""
    value = rational_argument(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("%s is not > 0" % text)
    return value


def natural_argument(text):
    """argparse ``type`` for integers ``>= 0``"""
    if not text.isdigit():
        raise argparse.ArgumentTypeError("%r is not an integer >= 0" % text)
    return int(text)


def read_text(path):
    """Returns the UTF-8 text of ``path``"""
    try:
        with io.open(path, "r", encoding="utf-8") as file_:
            return file_.read()
    except (OSError, IOError, UnicodeDecodeError) as error:
        raise UsageError("can't read %s: %s" % (path, error))


def read_points(space, path):
    """Parses one point of ``space`` per non-blank line of ``path``"""
    return [
        space.parse_point(line)
        for line in read_text(path).splitlines() if line.strip()]


def load_definitions(args):
    """
    Loads ``-f``/``--file`` or the configured definition file.  Without
    either only the built-in spaces exist.
    """
    path = args.file or config.definitions_path()
    if path is None:
        return SpaceDefFile()
    try:
        return SpaceDefFile(read_text(path))
    except DefinitionError as error:
        raise UsageError("%s:%s" % (path, error.message))


def command_check_axioms(args, out):
    """Prints the axiom report of a space as a table"""
    space = load_definitions(args).space(args.space)
    if args.probes:
        probes = read_points(space, args.probes)
    elif isinstance(space, CountableProduct):
        probes = probe_universe(space, support_bound=args.support_bound)
    else:
        probes = EXHAUSTIVE
    report = check_metric_axioms(space, probes)

    print("checked %d" % report.checked, file=out)
    print("violations %d" % len(report.violations), file=out)
    for violation in report.violations:
        print("%s\t%s\t%s\t%s" % (
            violation.axiom,
            " ".join(space.format_point(point)
                     for point in violation.witness),
            format_rational(violation.lhs), format_rational(violation.rhs)),
              file=out)
    return EXIT_OK if report.ok else EXIT_FAILED


def command_dist(args, out):
    """Prints the exact distance between two points"""
    space = load_definitions(args).space(args.space)
    point = space.parse_point(args.p)
    other = space.parse_point(args.q)
    print(format_rational(space.distance(point, other)), file=out)
    return EXIT_OK


def command_net(args, out):
    """Writes a net certificate to ``--out`` or standard output"""
    space = load_definitions(args).space(args.space)
    text = dumps_certificate(space, net_of(space, args.eps))
    if args.out:
        try:
            with io.open(args.out, "w", encoding="utf-8") as file_:
                file_.write(text)
        except (OSError, IOError) as error:
            raise UsageError("can't write %s: %s" % (args.out, error))
        logger.info("Wrote certificate to %s", args.out)
    else:
        out.write(text)
    return EXIT_OK


def command_verify(args, out):
    """Verifies a certificate against the exhaustive probe universe"""
    space = load_definitions(args).space(args.space)
    certificate = loads_certificate(space, read_text(args.cert))
    support_bound = args.support_bound
    if support_bound is None:
        support_bound = config.support_bound()
    report = verify_coverage(
        space, certificate, EXHAUSTIVE, support_bound=support_bound)

    print("probes %d" % report.probes_checked, file=out)
    print("uncovered %d" % len(report.uncovered), file=out)
    for entry in report.uncovered:
        print("%s\t%s" % (
            space.format_point(entry.probe),
            "-" if entry.distance is None else format_rational(
                entry.distance)), file=out)
    if not report.ok:
        logger.warning(
            "%d of %d probe(s) are not within %s of the net",
            len(report.uncovered), report.probes_checked,
            format_rational(certificate.eps))
        return EXIT_FAILED
    return EXIT_OK


def command_ball_witness(args, out):
    """Prints the basic open inside a ball and the ball inside it"""
    space = load_definitions(args).space(args.space)
    if not isinstance(space, CountableProduct):
        raise UnsupportedSpaceError("ball-witness", space.kind)
    open_set = ball_to_open(space, space.parse_point(args.point), args.eps)
    print("depth %d" % open_set.depth, file=out)
    print("budget %s" % format_rational(open_set.budget), file=out)
    print("radius %s" % format_rational(open_to_ball(space, open_set)),
          file=out)
    return EXIT_OK


def command_limit(args, out):
    """Prints a cluster point of the terms in ``--seq``"""
    space = load_definitions(args).space(args.space)
    terms = read_points(space, args.seq)
    if args.horizon > len(terms):
        raise UsageError(
            "--horizon %d is longer than the %d term(s) in %s" % (
                args.horizon, len(terms), args.seq))
    cluster = bw_extract(space, terms, args.horizon, args.levels)

    print("point %s" % space.format_point(cluster.point), file=out)
    print("eps %s" % format_rational(cluster.eps), file=out)
    print("support %d" % cluster.support_count, file=out)
    for level, center in enumerate(cluster.chain, 1):
        print("chain %d %s" % (level, space.format_point(center)), file=out)
    return EXIT_OK if cluster.check_chain(space).ok else EXIT_FAILED


def command_map_f(args, out):
    """Prints ``f`` of a binary sequence"""
    print(format_rational(f_eval(BinarySeq.parse(args.bits))), file=out)
    return EXIT_OK


def command_preimage(args, out):
    """Prints every binary sequence ``f`` maps to a value"""
    for sequence in f_preimages(args.value):
        print(str(sequence), file=out)
    return EXIT_OK


def build_parser():
    """Constructs the argument parser"""
    parser = argparse.ArgumentParser(
        prog="pycompact",
        description="Exact nets, coverage checks and limits for finitely "
                    "presented compact metric spaces.")
    parser.add_argument(
        "-f", "--file",
        help="The space definition file.  Defaults to the [cli] "
             "definitions setting.")
    parser.add_argument(
        "-v", "--verbose", action="store_true", default=False,
        help="Log debug messages to stderr.")
    parser.add_argument(
        "--version", action="version",
        version="%(prog)s " + ".".join(map(str, __version__)))
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    check = subparsers.add_parser(
        "check-axioms", help="Check the metric axioms of a space.")
    check.add_argument("space")
    probes = check.add_mutually_exclusive_group()
    probes.add_argument(
        "--exhaustive", action="store_true", default=False,
        help="Check every point (the default).")
    probes.add_argument(
        "--probes", help="A file with one probe point per line.")
    check.add_argument(
        "--support-bound", type=natural_argument, default=None,
        help="Support bound of product probe universes.")
    check.set_defaults(function=command_check_axioms)

    dist = subparsers.add_parser("dist", help="Exact distance of two points.")
    dist.add_argument("space")
    dist.add_argument("p")
    dist.add_argument("q")
    dist.set_defaults(function=command_dist)

    net = subparsers.add_parser("net", help="Write a net certificate.")
    net.add_argument("space")
    net.add_argument(
        "--eps", type=positive_rational_argument, required=True,
        help="The net radius, num/den.")
    net.add_argument("--out", help="Write the certificate to this file.")
    net.set_defaults(function=command_net)

    verify = subparsers.add_parser("verify", help="Verify a net certificate.")
    verify.add_argument("space")
    verify.add_argument("--cert", required=True, help="The certificate file.")
    verify.add_argument(
        "--support-bound", type=natural_argument, default=None,
        help="Support bound of product probe universes.  Defaults to the "
             "[nets] support_bound setting.")
    verify.set_defaults(function=command_verify)

    witness = subparsers.add_parser(
        "ball-witness",
        help="Basic open inside a ball and a ball inside that open.")
    witness.add_argument("space")
    witness.add_argument("--point", required=True)
    witness.add_argument(
        "--eps", type=positive_rational_argument, required=True)
    witness.set_defaults(function=command_ball_witness)

    limit = subparsers.add_parser(
        "limit", help="Cluster point of a sequence of points.")
    limit.add_argument("space")
    limit.add_argument(
        "--seq", required=True, help="A file with term k on line k.")
    limit.add_argument("--horizon", type=natural_argument, required=True)
    limit.add_argument("--levels", type=natural_argument, required=True)
    limit.set_defaults(function=command_limit)

    map_f = subparsers.add_parser(
        "map-f", help="f of a binary sequence such as 101;0.")
    map_f.add_argument("bits")
    map_f.set_defaults(function=command_map_f)

    preimage = subparsers.add_parser(
        "preimage", help="Binary sequences f maps to a value.")
    preimage.add_argument("value", type=rational_argument)
    preimage.set_defaults(function=command_preimage)

    return parser


def main(argv=None, out=None, err=None):
    """
    Runs the command line and returns the exit code.

    :keyword list argv:
        The arguments, ``sys.argv[1:]`` by default.

    :keyword out:
        Where results are written, standard output by default.

    :keyword err:
        Where diagnostics are written, standard error by default.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        level = logging.DEBUG if args.verbose else config.logging_level()
        enable_stream_logging(level)
        return args.function(args, out)
    except (UsageError, PyCompactError) as error:
        print("pycompact: error: %s" % getattr(error, "message", error),
              file=err)
        return EXIT_USAGE


def run():
    """Console script entry point"""
    sys.exit(main())
