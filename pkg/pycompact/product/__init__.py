"""
Product Sub-Package
===================

Countable products of presented spaces under the weighted metric
``D``, the basic opens of the product topology and limits of Cauchy
sequences.
"""

# The product package is broken into several submodules.  The public
# names are imported here so they can be used from a single place.
from pycompact.product.weights import WeightSequence
from pycompact.product.points import ProductPoint
from pycompact.product.countable import (
    ComponentGenerator, CountableProduct, countable_product,
    product_metric_D, tail_bound, truncated_distance, minimal_depth,
    binary_product)
from pycompact.product.topology import (
    OPEN_IN_BALL, BALL_IN_OPEN, BasicOpen, basic_open_contains,
    ball_to_open, open_to_ball, check_open_in_ball, check_ball_in_open)
from pycompact.product.completeness import check_modulus, cauchy_limit
