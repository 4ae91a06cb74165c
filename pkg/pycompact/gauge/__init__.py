"""
Gauge Sub-Package
=================

Bounded metric transforms ``d'(x, y) = h(d(x, y))`` with checkable
subadditivity and the correspondence between ball radii.
"""

from pycompact.gauge.gauges import (
    CAP, RATIONAL_BEND, Gauge, CapGauge, RationalBendGauge, gauge_apply)
from pycompact.gauge.laws import (
    SUBADDITIVITY, MONOTONICITY, DERIVATIVE, check_subadditivity,
    check_derivative_nonincreasing)
from pycompact.gauge.transform import (
    BALL, transform_metric, bounded_metric, ball_radius_map,
    check_ball_correspondence)
