"""Minimum joins, join distances and the Kotzig-Lovász partition of grafts."""

from .distance import DistanceTable, JoinWeighting, Path, dist, distance_table, path_weight
from .errors import (
    DomainError,
    EnumerationLimitError,
    GraftError,
    InputError,
    NotAGraftError,
    ParseError,
)
from .graph import (
    Graft,
    Graph,
    connected_components,
    contract,
    cut,
    induced_edges,
    is_graft,
    symmetric_difference,
)
from .joins import JoinCertificate, allowed_edges, is_join, is_minimum_join, min_join, nu
from .kernels import BACKEND
from .sebo import SeboDecomposition, lift_negative_path, sebo_decomposition, verify_sebo
from .structure import (
    CombBipartiteView,
    FactorComponent,
    KLPartition,
    factor_components,
    is_comb_bipartite,
    kl_classes_of_component,
    kl_partition,
    refinement_report,
    same_class,
)

__version__ = "0.1.0"
