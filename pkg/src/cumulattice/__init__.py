"""Exact combinatorics of set partitions and the moment-cumulant transforms.

Modules:

* ``partitions``: canonical set partitions, family enumeration, refinement
  order, noncrossing closure
* ``incidence``: incidence algebra of the partition lattices (convolution,
  zeta, Moebius, multiplicative functions)
* ``series``: truncated formal power series over exact scalars
* ``cumulants``: flavored sequences and the moment/cumulant transforms
* ``identities``: cumulants as weighted sums over connected and irreducible
  partitions, counting, and the verification suite
* ``cli`` / ``api``: command line and HTTP front ends over the same calls
"""

__version__ = "0.1.0"

from .cumulants import (
    Sequence,
    cumulant_to_moment,
    gaussian,
    moment_to_cumulant,
    poisson,
    transform,
)
from .partitions import SetPartition, enumerate_partitions, leq
from .rings import LAMBDA, LambdaPoly

__all__ = [
    "LAMBDA",
    "LambdaPoly",
    "Sequence",
    "SetPartition",
    "__version__",
    "cumulant_to_moment",
    "enumerate_partitions",
    "gaussian",
    "leq",
    "moment_to_cumulant",
    "poisson",
    "transform",
]
