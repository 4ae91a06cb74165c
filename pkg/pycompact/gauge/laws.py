"""
Laws
----

Exact checks of the conditions a gauge must meet: subadditivity and
monotonicity, and the finite difference form of a nonincreasing
derivative.  Both return :class:`pycompact.spaces.AxiomReport` values.
"""

from pycompact.core.checks import input_check, rational_check
from pycompact.core.logger import get_logger
from pycompact.exceptions import InputError
from pycompact.gauge.gauges import Gauge
from pycompact.spaces.axioms import AxiomReport, Violation

SUBADDITIVITY = "subadditivity"
MONOTONICITY = "monotonicity"
DERIVATIVE = "derivative"

logger = get_logger("gauge.laws")


def check_subadditivity(gauge, grid):
    """
    Checks ``h(b + c) <= h(b) + h(c)`` for every ordered pair of grid
    values and ``h`` nondecreasing along the sorted grid.

    :param pycompact.gauge.Gauge gauge:
        The gauge to check.

    :param grid:
        An iterable of rationals ``>= 0``.

    :raises pycompact.exceptions.InputError:
        Raised if a grid value is negative or not exact.

    :rtype: pycompact.spaces.AxiomReport
    """
    input_check("gauge", gauge, allowed_types=(Gauge, ))
    grid = [rational_check("grid", value, nonnegative=True) for value in grid]
    values = dict((value, gauge.apply(value)) for value in grid)

    violations = []
    for left in grid:
        for right in grid:
            lhs = gauge.apply(left + right)
            rhs = values[left] + values[right]
            if lhs > rhs:
                violations.append(
                    Violation((left, right), SUBADDITIVITY, lhs, rhs))

    ordered = sorted(values)
    for lower, upper in zip(ordered, ordered[1:]):
        if values[lower] > values[upper]:
            violations.append(Violation(
                (lower, upper), MONOTONICITY, values[lower], values[upper]))

    checked = len(grid) ** 2 + max(len(ordered) - 1, 0)
    logger.debug(
        "Subadditivity of %s over %d grid values: %d violation(s)",
        gauge.describe(), len(grid), len(violations))
    return AxiomReport(checked, tuple(violations))


def check_derivative_nonincreasing(gauge, grid, step):
    """
    Computes the forward difference quotients
    ``(h(t + step) - h(t)) / step`` at every grid point and reports each
    place where a quotient is larger than the one before it.

    :param pycompact.gauge.Gauge gauge:
        The gauge to check.

    :param grid:
        Rationals ``>= 0`` in ascending order.

    :param step:
        The difference step, a rational ``> 0``.

    :raises pycompact.exceptions.InputError:
        Raised if the grid is not sorted or ``step`` is not positive.

    :rtype: pycompact.spaces.AxiomReport
    """
    input_check("gauge", gauge, allowed_types=(Gauge, ))
    step = rational_check("step", step, positive=True)
    grid = [rational_check("grid", value, nonnegative=True) for value in grid]
    if grid != sorted(grid):
        raise InputError("grid", grid, message="grid must be sorted")

    quotients = [
        (gauge.apply(point + step) - gauge.apply(point)) / step
        for point in grid]

    violations = []
    for index in range(1, len(quotients)):
        if quotients[index] > quotients[index - 1]:
            violations.append(Violation(
                (grid[index - 1], grid[index]), DERIVATIVE,
                quotients[index], quotients[index - 1]))

    return AxiomReport(max(len(quotients) - 1, 0), tuple(violations))
