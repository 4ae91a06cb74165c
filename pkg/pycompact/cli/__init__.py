"""
CLI Sub-Package
===============

The ``pycompact`` command: space definition files and the subcommands
which run checks and emit or verify certificates.
"""

# The cli package is broken into several submodules.  The public
# names are imported here so they can be used from a single place.
from pycompact.cli.grammar import GRAMMAR, parse_tree
from pycompact.cli.loader import SpaceDefFile, builtin_spaces, parse_space_file
