"""
PyCompact
=========

The root of the pycompact package.  See the ``README`` and documentation for
help and examples.
"""

__version__ = (0, 1, 0)
