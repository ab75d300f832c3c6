"""Closed-form distance, diameter and distance-balance analysis of GP(n, k)."""

from .balance import (
    BalanceReport,
    ConjectureRecord,
    LBalanceVerdict,
    balance_report,
    conjecture_predicate,
    conjecture_scan,
    is_diam_distance_balanced,
    is_highly_distance_balanced,
    is_l_distance_balanced,
    w_set,
)
from .core import (
    GPParams,
    Side,
    VertexId,
    bfs_distances,
    make_params,
    neighbors,
    oracle_diameter,
    oracle_distance,
)
from .diameter import (
    DiameterResult,
    Method,
    Strategy,
    diameter,
    diameter_small_k,
    diameter_theorem,
)
from .errors import (
    EllOutOfRange,
    GPError,
    InternalCaseGap,
    InvalidParams,
    NotGuaranteed,
    OutOfRange,
    SameVertex,
)
from .pathform import (
    Decomposition,
    DistanceProfile,
    JStarResult,
    PathType,
    closed_distance,
    decompose,
    distance_table,
    is_guaranteed,
    jstar_case_analysis,
    jstar_scan,
    path_length,
)

__version__ = "0.1.0"
