"""
Development Sub-Package
=======================

This package is used for development and testing purposes.  It does
not contain core functionality of pycompact and is unused by
:mod:`pycompact.spaces`, :mod:`pycompact.nets` and other similar modules.
"""
