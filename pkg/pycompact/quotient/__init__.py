"""
Quotient Sub-Package
====================

The binary product mapped onto ``[0, 1]`` by ``f(x) = sum(2 ** -i * x[i])``:
exact evaluation, preimages, the induced equivalence and its classes.
"""

# The quotient package is broken into several submodules.  The public
# names are imported here so they can be used from a single place.
from pycompact.quotient.sequences import BITS, BinarySeq, Dyadic
from pycompact.quotient.mapping import (
    CANTOR, LipschitzWitness, to_product_point, f_eval, f_preimages,
    equiv_wrt_f, lipschitz_witness, canonical_representative,
    quotient_class, g_inverse)
