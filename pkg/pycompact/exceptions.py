"""
Exceptions
==========

Custom exceptions that ``pycompact`` can throw.  Checks which find
problems in the data they were asked to examine, such as
:func:`pycompact.spaces.check_metric_axioms`, return reports instead of
raising.  The exceptions below are reserved for broken contracts.
"""


class PyCompactError(Exception):
    """
    The base class for all custom exceptions that pycompact can throw.
    """


class InputError(PyCompactError):
    """
    A subclass of :class:`PyCompactError` that's raised when invalid input
    is provided to a function.  Every scalar in pycompact is an exact
    rational so we fail early on floats and other values which would
    silently introduce rounding.

    :param str name:
        The name of the parameter being checked.

    :param value:
        The value of the parameter being checked.

    :keyword allowed_types:
        The expected type(s). If provided then the exception's message will
        be tailored to provide information about ``value``'s type and the
        possible input types.

    :keyword allowed_values:
        The expected value(s).  If provided then the exception's message will
        be tailored to provide information about what value(s) were allowed
        for ``value``.

    :keyword str message:
        A custom error message.  This will override the default error messages
        which :class:`InputError` would normally generate.  This can be
        helpful if there is a problem with a given input parameter to a
        function but it's unrelated to the type of input.
    """
    def __init__(  # pylint: disable=too-many-arguments
            self, name, value,
            allowed_types=None, allowed_values=None, message=None):
        if allowed_types is not None and allowed_values is not None:
            raise ValueError(
                "Please provide either `allowed_types` or `allowed_values`")

        if (allowed_types is None and allowed_values is None and
                message is None):
            raise ValueError(
                "Please provide `allowed_types`, `allowed_values` or "
                "`message`")

        self.name = name
        self.value = value
        self.allowed_types = allowed_types
        self.allowed_values = allowed_values
        self.message = message

        if self.message is None and self.allowed_types is not None:
            self.message = \
                "Expected type(s) {expected} for {name}. Type of {name} " \
                "is {typeof}.".format(
                    expected=repr(allowed_types), name=repr(name),
                    typeof=repr(type(value)))

        elif self.message is None and self.allowed_values is not None:
            self.message = \
                "Expected the value of {name} to be in {values}. Value of " \
                "{name} is {value}.".format(
                    name=repr(name), values=allowed_values, value=repr(value))

        super(InputError, self).__init__(self.message)


class PointNotInSpaceError(InputError):
    """
    Raised when a point is not presentable in a space: an unknown label
    for a finite space, a rational outside of an interval's endpoints or
    a product point whose coordinates don't belong to their components.

    :param str space:
        The name of the space the point was checked against.

    :param point:
        The offending point.

    :keyword str reason:
        Optional extra detail appended to the message.
    """
    def __init__(self, space, point, reason=None):
        self.space = space
        message = "{point!r} is not a point of {space}".format(
            point=point, space=space)
        if reason:
            message += " ({0})".format(reason)
        super(PointNotInSpaceError, self).__init__(
            "point", point, message=message + ".")


class UnsupportedSpaceError(PyCompactError):
    """
    Raised when an operation is not defined for the kind of space it
    was given, for example an exhaustive scan of an interval.

    :param str operation:
        The name of the operation.

    :param str kind:
        The kind of space the operation was asked to handle.
    """
    def __init__(self, operation, kind, message=None):
        self.operation = operation
        self.kind = kind
        if message is None:
            message = "{0} is not supported for {1} spaces.".format(
                operation, kind)
        self.message = message
        super(UnsupportedSpaceError, self).__init__(message)


class MetricAxiomError(PyCompactError):
    """
    Raised when a distance table is rejected because it breaks a
    metric axiom.

    :param violation:
        The :class:`pycompact.spaces.axioms.Violation` which witnesses
        the problem.
    """
    def __init__(self, violation):
        self.violation = violation
        self.message = (
            "{axiom} violated by {witness!r}: {lhs} vs {rhs}".format(
                axiom=violation.axiom, witness=violation.witness,
                lhs=violation.lhs, rhs=violation.rhs))
        super(MetricAxiomError, self).__init__(self.message)


class DiameterBoundError(PyCompactError):
    """
    Raised when a distance exceeds the space's declared diameter bound.
    """
    def __init__(self, space, pair, distance, bound):
        self.space = space
        self.pair = pair
        self.distance = distance
        self.bound = bound
        self.message = (
            "Distance {0} between {1!r} in {2} exceeds the declared "
            "diameter bound {3}.".format(distance, pair, space, bound))
        super(DiameterBoundError, self).__init__(self.message)


class CauchyModulusError(PyCompactError):
    """
    Raised when a sequence breaks the modulus it was claimed to satisfy.

    :param tuple pair:
        The 1-based indexes ``(j, k)`` of the witness pair.

    :param distance:
        The exact distance between the two terms.

    :param bound:
        The value of the modulus which should have been exceeded.
    """
    def __init__(self, pair, distance, bound):
        self.pair = pair
        self.distance = distance
        self.bound = bound
        self.message = (
            "Terms {0} and {1} are {2} apart which is not below the "
            "modulus value {3}.".format(pair[0], pair[1], distance, bound))
        super(CauchyModulusError, self).__init__(self.message)


class InsufficientEvidenceError(PyCompactError):
    """
    Raised when a finite amount of evidence is not enough to decide
    a limit, for instance when no coordinate of a Cauchy sequence has
    provably stopped moving.
    """


class CertificateFormatError(PyCompactError):
    """
    Raised when the text form of a net certificate can't be loaded.

    :param int line:
        The 1-based line the problem was found on.

    :param str message:
        What was wrong with the line.
    """
    def __init__(self, line, message):
        self.line = line
        self.message = "line {0}: {1}".format(line, message)
        super(CertificateFormatError, self).__init__(self.message)


class DefinitionError(PyCompactError):
    """
    Raised when a space definition file is well formed but describes
    something invalid such as a table which breaks the triangle
    inequality.

    :param int line:
        The 1-based line of the offending declaration or entry.

    :param int column:
        The 1-based column of the offending declaration or entry.

    :param str message:
        Description of the problem.
    """
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = "{0}:{1}: {2}".format(line, column, message)
        super(DefinitionError, self).__init__(self.message)


class DefinitionSyntaxError(DefinitionError):
    """Raised when a space definition file can't be parsed"""


class UnknownNameError(DefinitionError):
    """Raised when a reference or requested space name doesn't resolve"""


class InternalError(PyCompactError):
    """
    Raised if we encounter an internal error.  Most likely this is an
    indication of a bug in pycompact but it could also be a problem caused
    by an unexpected use case.
    """


class ConfigurationError(InternalError):
    """Raised when there was a problem with the configuration file"""
