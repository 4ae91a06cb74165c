"""
Mapping
-------

The map ``f(x) = sum(2 ** -i * x[i])`` from binary sequences onto
``[0, 1]``, the equivalence ``x ~ y <=> f(x) = f(y)`` it induces and the
quotient map ``g`` from classes to values.

Each class holds one sequence for ``0`` and ``1`` and two for every
other dyadic: the terminating expansion and the one ending in ones.
Classes are represented by their terminating member (the all ones
sequence for ``1``).
"""

from collections import namedtuple
from fractions import Fraction

from pycompact.core.checks import input_check, rational_check
from pycompact.core.logger import get_logger
from pycompact.core.rational import dyadic_exponent
from pycompact.exceptions import InputError
from pycompact.product.countable import binary_product, product_metric_D
from pycompact.product.points import ProductPoint
from pycompact.quotient.sequences import BinarySeq, Dyadic

logger = get_logger("quotient.mapping")

CANTOR = binary_product()

LipschitzWitness = namedtuple(
    "LipschitzWitness", ("value_gap", "distance", "holds"))


def to_product_point(x):
    """
    Returns ``x`` as a point of the binary product, whose tail anchors
    0 and 1 are the constant 0 and 1 sequences.

    :rtype: pycompact.product.ProductPoint
    """
    input_check("x", x, allowed_types=(BinarySeq, ))
    return CANTOR.normalize(ProductPoint(x.prefix, x.tail))


def f_eval(x):
    """
    Returns ``f(x)`` exactly: the prefix sum plus ``2 ** -m`` for a one
    tail after ``m`` prefix bits.

    >>> f_eval(BinarySeq.parse("101;0"))
    Dyadic(5, 8)

    :rtype: Dyadic
    """
    input_check("x", x, allowed_types=(BinarySeq, ))
    value = sum(
        (Fraction(bit, 2 ** index) for index, bit in enumerate(x.prefix, 1)),
        Fraction(0))
    if x.tail:
        value += Fraction(1, 2 ** len(x.prefix))
    return Dyadic(value)


def f_preimages(q):
    """
    Returns every eventually constant binary sequence ``x`` with
    ``f(x) = q``, the terminating expansion first.  A rational which is
    not dyadic has no such sequence and gives an empty list.

    >>> from fractions import Fraction
    >>> f_preimages(Fraction(1, 2))
    [BinarySeq('1;0'), BinarySeq('0;1')]

    :param q:
        A rational in ``[0, 1]``.

    :raises pycompact.exceptions.InputError:
        Raised if ``q`` is outside ``[0, 1]``.

    :rtype: list
    """
    q = rational_check("q", q)
    if not 0 <= q <= 1:
        raise InputError("q", q, message="%s is outside [0, 1]" % q)

    exponent = dyadic_exponent(q)
    if exponent is None:
        logger.debug("%s is not dyadic, no preimages", q)
        return []
    if q == 0:
        return [BinarySeq((), 0)]
    if q == 1:
        return [BinarySeq((), 1)]

    # q = a / 2 ** k with a odd, so the k bit expansion of a ends in 1.
    bits = [int(bit) for bit in format(q.numerator, "0%db" % exponent)]
    terminating = BinarySeq(bits, 0)
    ending_in_ones = BinarySeq(bits[:-1] + [0], 1)
    return [terminating, ending_in_ones]


def equiv_wrt_f(x, y):
    """True if ``f(x) == f(y)``"""
    return f_eval(x) == f_eval(y)


def lipschitz_witness(x, y):
    """
    Returns ``|f(x) - f(y)|``, ``D(x, y)`` in the binary product and
    whether the first is at most the second.  ``holds`` is always True;
    reporting it makes ``f``'s continuity checkable pair by pair.

    >>> witness = lipschitz_witness(
    ...     BinarySeq.parse("1;0"), BinarySeq.parse("0;1"))
    >>> witness.value_gap, witness.distance, witness.holds
    (Fraction(0, 1), Fraction(1, 1), True)

    :rtype: LipschitzWitness
    """
    gap = Fraction(abs(f_eval(x) - f_eval(y)))
    distance = product_metric_D(
        CANTOR, to_product_point(x), to_product_point(y))
    return LipschitzWitness(gap, distance, gap <= distance)


def canonical_representative(x):
    """
    Returns the member of ``x``'s class used to stand for the class:
    the terminating expansion, or the all ones sequence for ``1``.

    :rtype: BinarySeq
    """
    return f_preimages(f_eval(x))[0]


def quotient_class(x):
    """Returns every sequence equivalent to ``x``"""
    return f_preimages(f_eval(x))


def g_inverse(q):
    """
    Returns the canonical representative of the class ``g`` maps to
    ``q``.

    :raises pycompact.exceptions.InputError:
        Raised if ``q`` is not a dyadic rational in ``[0, 1]``.

    :rtype: BinarySeq
    """
    return f_preimages(Dyadic(q))[0]
