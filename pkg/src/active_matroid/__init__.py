"""Active filtrations and the decomposition of bases of ordered matroids."""

from .closure import (
    ActivePartition,
    acl_ext,
    acl_int,
    active_filtration,
    active_partition,
    internal_external_partition,
)
from .decomposition import (
    BasisDecomposition,
    classify_all_bases,
    decompose_basis,
    etlv_split,
    recompose,
    swap_min_bijection,
    uniactive_bases,
)
from .errors import MatroidError
from .filtration import (
    Filtration,
    beta_product,
    enumerate_filtrations,
    filtration_dual,
    induced_minors,
    is_connected_filtration,
    validate_filtration,
)
from .fundamental import (
    ActivitySets,
    FundamentalGraph,
    activities,
    activity_sets,
    fg_dual,
    fg_remove,
    fundamental_graph,
    is_uniactive_external,
    is_uniactive_internal,
    render_tableau,
)
from .matroid import (
    Matroid,
    circuits,
    cocircuits,
    cyclic_flats,
    dual,
    fundamental_circuit,
    fundamental_cocircuit,
    graphic_matroid,
    is_connected,
    is_cyclic_flat,
    is_dual_flat,
    is_flat,
    matroid_from_bases,
    minor,
    rank,
    uniform_matroid,
)
from .tutte import (
    TuttePolynomial,
    beta,
    beta_star,
    tutte_by_activities,
    tutte_by_filtrations,
    tutte_convolution,
    tutte_rank_nullity,
)

K4_EDGES = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


def k4() -> Matroid:
    """K4 with edges 1=ab, 2=ac, 3=bc, 4=ad, 5=bd, 6=cd."""
    return graphic_matroid(4, K4_EDGES)


__version__ = "0.1.0"
