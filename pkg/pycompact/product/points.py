"""
Points
------

Points of countable products: an explicit finite prefix followed by
the same anchor in every later coordinate.
"""

from six import integer_types

from pycompact.core.checks import input_check
from pycompact.core.typesbase import ValueObject
from pycompact.exceptions import InputError


class ProductPoint(ValueObject):
    """
    The sequence ``prefix[0], prefix[1], ..., a, a, ...`` where every
    coordinate after the prefix is the component's anchor number
    ``tail_anchor``.

    ``==`` and ``hash`` compare the fields as given.  They only agree
    with equality of sequences on points returned by
    :meth:`pycompact.product.CountableProduct.normalize`.  For example
    ``ProductPoint((0, ), 0)`` and ``ProductPoint((), 0)`` are both the
    all-zero sequence of the binary product but compare unequal.  Use
    :func:`pycompact.spaces.same_point` for points built by hand.

    :param prefix:
        The explicit coordinates, an iterable.

    :keyword int tail_anchor:
        The index of the anchor used for every later coordinate.
    """
    FIELDS = ("prefix", "tail_anchor")

    def __init__(self, prefix=(), tail_anchor=0):
        if isinstance(tail_anchor, bool):
            raise InputError(
                "tail_anchor", tail_anchor, allowed_types=integer_types)
        input_check("tail_anchor", tail_anchor, allowed_types=integer_types)
        if tail_anchor < 0:
            raise InputError(
                "tail_anchor", tail_anchor,
                message="tail_anchor must be >= 0")
        self._init_fields(prefix=tuple(prefix), tail_anchor=tail_anchor)

    @property
    def support(self):
        """The number of explicit coordinates"""
        return len(self.prefix)

    def __repr__(self):
        return "ProductPoint(%r, tail_anchor=%d)" % (
            self.prefix, self.tail_anchor)
