"""
Loader
------

Turns the parse tree of a space definition file into spaces and
gauges.  Every problem is reported as a
:class:`pycompact.exceptions.DefinitionError` carrying the position of
the declaration, setting or value at fault.
"""

from collections import OrderedDict

from lark import Token

from pycompact.core.logger import get_logger
from pycompact.core.rational import parse_rational
from pycompact.exceptions import (
    DefinitionError, DiameterBoundError, InputError, MetricAxiomError,
    UnknownNameError, UnsupportedSpaceError)
from pycompact.cli.grammar import parse_tree
from pycompact.gauge.gauges import CapGauge, RationalBendGauge
from pycompact.gauge.transform import transform_metric
from pycompact.product.countable import (
    ComponentGenerator, binary_product, countable_product)
from pycompact.product.weights import WeightSequence
from pycompact.spaces.finite import FiniteSpace, binary_space
from pycompact.spaces.interval import IntervalSpace

logger = get_logger("cli.loader")

FINITE = "finite"
INTERVAL = "interval"
GAUGE = "gauge"
TRANSFORM = "transform"
PRODUCT = "product"

KEYS = {
    FINITE: (("points", ), ("bound", "anchors")),
    INTERVAL: (("endpoints", ), ("anchors", )),
    GAUGE: (("h", ), ()),
    TRANSFORM: (("space", "gauge"), ()),
    PRODUCT: (("cycle", "weights"), ("anchor", )),
}


def builtin_spaces():
    """Returns the spaces every definition file can refer to"""
    spaces = OrderedDict()
    for space in (binary_space(), binary_product()):
        spaces[space.name] = space
    return spaces


def _position(item):
    if isinstance(item, Token):
        return item.line, item.column
    return item.meta.line, item.meta.column


def _error(item, message, error_class=DefinitionError):
    line, column = _position(item)
    return error_class(line, column, message)


class Declaration(object):
    """
    One ``kind name { ... }`` block with its settings indexed by key.
    ``d(a, b) = q`` entries are kept apart in :attr:`distances`.
    """
    def __init__(self, tree):
        self.tree = tree
        kind, name = tree.children[:2]
        self.kind_token = kind
        self.name_token = name
        self.kind = str(kind)
        self.name = str(name)
        self.settings = OrderedDict()
        self.distances = []

        if self.kind not in KEYS:
            raise _error(
                kind, "unknown declaration kind %r, expected one of %s" % (
                    self.kind, ", ".join(sorted(KEYS))))
        required, optional = KEYS[self.kind]

        for setting in tree.children[2:]:
            if setting.data == "distance":
                if self.kind != FINITE:
                    raise _error(
                        setting, "distances only belong in finite "
                                 "declarations")
                self.distances.append(setting)
                continue

            key, values = setting.children
            if str(key) not in required + optional:
                raise _error(
                    key, "unknown key %r for %s, expected one of %s" % (
                        str(key), self.kind,
                        ", ".join(required + optional)))
            if str(key) in self.settings:
                raise _error(key, "%r is set twice" % str(key))
            self.settings[str(key)] = (key, values.children)

        for key in required:
            if key not in self.settings:
                raise _error(
                    tree, "%s %s is missing %r" % (self.kind, self.name, key))

    def values(self, key):
        """Returns the value items of ``key`` or None if it's not set"""
        if key not in self.settings:
            return None
        return self.settings[key][1]

    def single(self, key):
        """Returns the only value of ``key`` or None if it's not set"""
        values = self.values(key)
        if values is None:
            return None
        if len(values) != 1:
            raise _error(
                self.settings[key][0], "%r takes exactly one value" % key)
        return values[0]


def _token(item, what):
    if not isinstance(item, Token):
        raise _error(item, "expected %s" % what)
    return item


def _rational(item):
    item = _token(item, "a rational")
    try:
        return parse_rational(str(item))
    except InputError:
        raise _error(item, "%r is not a rational" % str(item))


def _integer(item):
    value = _rational(item)
    if value.denominator != 1:
        raise _error(item, "%r is not an integer" % str(item))
    return int(value)


def _call(item, names):
    if isinstance(item, Token):
        function, arguments = item, []
    else:
        function, arguments = item.children[0], item.children[1:]
    if str(function) not in names:
        raise _error(
            item, "expected one of %s" % ", ".join(
                "%s(...)" % name for name in names))
    return str(function), arguments


class SpaceDefFile(object):
    """
    The spaces and gauges declared by a definition file, in declaration
    order.  The built-in ``binary`` and ``cantor`` spaces are available
    unless the file declares spaces with those names.

    :param str text:
        The text of the file.

    :raises pycompact.exceptions.DefinitionSyntaxError:
        Raised if ``text`` can't be parsed.

    :raises pycompact.exceptions.DefinitionError:
        Raised if a declaration is invalid, for example a distance table
        which breaks a metric axiom.

    :raises pycompact.exceptions.UnknownNameError:
        Raised if a reference doesn't name an earlier declaration.
    """
    def __init__(self, text=""):
        self.spaces = builtin_spaces()
        self.gauges = OrderedDict()
        self.declared = []
        for tree in parse_tree(text).children:
            self._load(Declaration(tree))
        logger.debug("Loaded declarations: %s", self.declared)

    def _load(self, declaration):
        if declaration.name in self.declared:
            raise _error(
                declaration.name_token,
                "%r is already declared" % declaration.name)

        loader = getattr(self, "_load_%s" % declaration.kind)
        try:
            value = loader(declaration)
        except MetricAxiomError as error:
            violation = error.violation
            raise _error(
                declaration.tree,
                "%s %s breaks the %s axiom, witness %s: %s vs %s" % (
                    declaration.kind, declaration.name, violation.axiom,
                    ", ".join(str(point) for point in violation.witness),
                    violation.lhs, violation.rhs))
        except (DiameterBoundError, UnsupportedSpaceError,
                InputError) as error:
            raise _error(
                declaration.tree, "%s %s: %s" % (
                    declaration.kind, declaration.name, error.message))

        if declaration.kind == GAUGE:
            self.gauges[declaration.name] = value
        else:
            self.spaces[declaration.name] = value
        self.declared.append(declaration.name)

    def _lookup(self, item, table, what):
        # Declarations are only added once loaded so forward and self
        # references miss here.
        item = _token(item, "a name")
        if str(item) not in table:
            raise _error(
                item, "%r does not name an earlier %s declaration" % (
                    str(item), what), error_class=UnknownNameError)
        return table[str(item)]

    def _load_finite(self, declaration):
        points = [
            str(_token(item, "a point label"))
            for item in declaration.values("points")]

        table = {}
        for setting in declaration.distances:
            left, right, value = setting.children
            for label in (left, right):
                if str(label) not in points:
                    raise _error(
                        label, "%r is not a point of %s" % (
                            str(label), declaration.name))
            table[(str(left), str(right))] = _rational(value)

        bound = declaration.single("bound")
        anchors = declaration.values("anchors")
        if anchors is not None:
            anchors = [str(_token(item, "a point label")) for item in anchors]
        return FiniteSpace(
            points, table, name=declaration.name, anchors=anchors,
            diameter_bound=None if bound is None else _rational(bound))

    def _load_interval(self, declaration):
        endpoints = declaration.values("endpoints")
        if len(endpoints) != 2:
            raise _error(
                declaration.settings["endpoints"][0],
                "endpoints takes exactly two values")
        anchors = declaration.values("anchors")
        if anchors is not None:
            anchors = [_rational(item) for item in anchors]
        return IntervalSpace(
            _rational(endpoints[0]), _rational(endpoints[1]),
            anchors=anchors, name=declaration.name)

    def _load_gauge(self, declaration):
        item = declaration.single("h")
        function, arguments = _call(item, ("cap", "bend"))
        if function == "cap":
            if len(arguments) != 1:
                raise _error(item, "cap takes exactly one bound")
            return CapGauge(_rational(arguments[0]))
        if len(arguments) > 1:
            raise _error(item, "bend takes at most one cutoff")
        if arguments:
            return RationalBendGauge(_rational(arguments[0]))
        return RationalBendGauge()

    def _load_transform(self, declaration):
        space = self._lookup(
            declaration.single("space"), self.spaces, "space")
        gauge = self._lookup(
            declaration.single("gauge"), self.gauges, "gauge")
        return transform_metric(space, gauge, name=declaration.name)

    def _load_product(self, declaration):
        cycle = [
            self._lookup(item, self.spaces, "space")
            for item in declaration.values("cycle")]

        item = declaration.single("weights")
        _, arguments = _call(item, ("geometric", ))
        if len(arguments) not in (1, 2):
            raise _error(item, "geometric takes a ratio and a scale")
        weights = WeightSequence(*[_rational(value) for value in arguments])

        anchor = declaration.single("anchor")
        return countable_product(
            ComponentGenerator(cycle), weights, name=declaration.name,
            default_anchor=0 if anchor is None else _integer(anchor))

    def space(self, name):
        """
        Returns the space called ``name``.

        :raises pycompact.exceptions.UnknownNameError:
            Raised if there's no such space.
        """
        try:
            return self.spaces[name]
        except KeyError:
            raise UnknownNameError(
                0, 0, "no space named %r, known spaces: %s" % (
                    name, ", ".join(self.spaces)))


def parse_space_file(text):
    """
    Parses and loads the text of a space definition file.

    >>> definitions = parse_space_file(
    ...     "finite two { points = a, b; d(a, b) = 1 }")
    >>> definitions.space("two").declared_bound
    Fraction(1, 1)

    :rtype: SpaceDefFile
    """
    return SpaceDefFile(text)
