"""
Types Base
==========

Provides the base type on top of which user visible value types are
built.
"""


class ValueObject(object):
    """
    Base class for the immutable values pycompact hands to its users:

    * Fields listed in ``FIELDS`` are set once by :meth:`_init_fields`.
    * Attribute assignment afterwards raises :class:`AttributeError`.
    * Equality, hashing and ``repr`` are derived from :meth:`_key`, which
      sub-classes may override to compare a normalized form.
    """
    FIELDS = ()

    def _init_fields(self, **values):
        for name in self.FIELDS:
            object.__setattr__(self, name, values[name])

    def __setattr__(self, name, value):
        raise AttributeError(
            "%s objects are immutable, can't set %r" % (
                self.__class__.__name__, name))

    def __delattr__(self, name):
        raise AttributeError(
            "%s objects are immutable, can't delete %r" % (
                self.__class__.__name__, name))

    def _key(self):
        return tuple(getattr(self, name) for name in self.FIELDS)

    def __eq__(self, other):
        if not isinstance(other, self.__class__):
            return NotImplemented
        # pylint: disable=protected-access
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.__class__.__name__, self._key()))

    def __repr__(self):
        return "%s(%s)" % (
            self.__class__.__name__,
            ", ".join(
                "%s=%r" % (name, getattr(self, name)) for name in self.FIELDS))
