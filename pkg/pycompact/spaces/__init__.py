"""
Spaces Sub-Package
==================

Finitely presented metric spaces: finite discrete tables, rational
intervals and finite weighted products, plus the exact metric
operations every other part of pycompact builds on.
"""

# The spaces package is broken into several submodules.  The public
# names are imported here so they can be used from a single place.
from pycompact.spaces.axioms import (
    EXHAUSTIVE, IDENTITY, SYMMETRY, TRIANGLE, AxiomReport, Violation,
    check_metric_axioms)
from pycompact.spaces.base import (
    FINITE_DISCRETE, INTERVAL, FINITE_PRODUCT, COUNTABLE_PRODUCT, KINDS,
    Space, metric_eval, diameter_bound, same_point, enumerate_points,
    weighted_term)
from pycompact.spaces.finite import FiniteSpace, binary_space
from pycompact.spaces.interval import IntervalSpace
from pycompact.spaces.finiteproduct import FiniteProduct, check_component
