"""
Core Sub-Package
================

An internal package used by pycompact for exact rational arithmetic,
handling configuration data, logging, input checks and other common
tasks.
"""
