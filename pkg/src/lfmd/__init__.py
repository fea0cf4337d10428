"""Exact local fractional metric dimension of Toeplitz and zero-divisor graphs."""

from .errors import (
    CapacityError,
    EmptyGraphError,
    InvalidFamilyError,
    InvalidInputError,
    LfmdError,
    NoEdgesError,
    NotAdjacentError,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bfs_distances,
    build_toeplitz,
    build_zero_divisor,
    build_zero_divisor_star,
    export_graph,
    is_bipartite,
)
from .resolving import (
    ResolvingProfile,
    edge_resolving_profile,
    ell_beta,
    global_resolving_neighborhood,
    local_resolving_neighborhood,
)
from .solver import (
    BoundReport,
    LpSolution,
    LpStatus,
    generic_bounds,
    local_metric_dimension_integer,
    solve_fmd_exact,
    solve_lfmd_exact,
)

__version__ = "0.1.0"
