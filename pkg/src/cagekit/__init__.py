"""Graph combinatorics toolkit: girth cycles, nonseparating-cycle
verification on cage graphs, special permutations, and graph6 I/O."""

from .cage_analysis import (
    BadPairGraph,
    CycleAnalysis,
    G1Structure,
    RemovalReport,
    SpecialSubgraphDetail,
    VerificationReport,
    analyze_cycle,
    analyze_removal,
    antipodal_pairs,
    bad_pairs,
    build_sigma,
    check_special_subgraph,
    classify_g1,
    verify_cage_nonseparating,
)
from .catalog_io import (
    CageRecord,
    catalog_entries,
    get_cage,
    moore_bound,
    parse_graph6,
    read_graph6_file,
    write_graph6,
)
from .cycle_engine import (
    Cycle,
    cycle_distance,
    enumerate_g_cycles,
    girth,
    is_nonseparating,
)
from .graph_core import (
    UNREACHABLE,
    Distance,
    Graph,
    VertexSet,
    build_graph,
    complement,
    components,
    delete_vertices,
    diameter,
    disjoint_union,
    distance,
    induced_subgraph,
    is_k_regular,
    neighborhood_in,
)
from .special_perm import (
    Permutation,
    UnionSpec,
    compose_disjoint,
    cycle_plus_path_graph,
    hamilton_cycle_dirac,
    identity_permutation,
    is_special_permutation,
    search_special_permutation,
    special_perm_cycle,
    special_perm_cycle_plus_path,
    special_perm_path,
    special_perm_union,
    union_graph,
)

__version__ = "0.1.0"
