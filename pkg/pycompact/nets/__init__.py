"""
Nets Sub-Package
================

Finite ``eps`` nets, their certificates and brute force verification,
and cluster point extraction by nested balls.
"""

# The nets package is broken into several submodules.  The public
# names are imported here so they can be used from a single place.
from pycompact.nets.certificate import (
    NetCertificate, dumps_certificate, loads_certificate)
from pycompact.nets.synthesis import interval_grid, net_of
from pycompact.nets.coverage import (
    Uncovered, CoverageReport, probe_universe, verify_coverage)
from pycompact.nets.extraction import (
    CAUCHY_ESTIMATE, ClusterPoint, bw_extract)
