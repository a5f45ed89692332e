"""Spanning trees with nonseparating paths and nonseparating fundamental
cycles: decision procedures, constructions, certificates, and an exhaustive
verification harness."""

from .graph import (
    Graph,
    GraphError,
    SpanningTree,
    TreePath,
    build_graph,
    connected_mask,
    is_connected,
    mask_of,
    mask_vertices,
    tree_path,
)
from .structure import (
    Block,
    BlockCutTree,
    BridgeDecomposition,
    HBridge,
    block_cut_tree,
    bridge_graph,
    connectivity_at_least,
    cut_edges,
    h_bridges,
    is_series_parallel,
    two_vertex_cuts,
)
from .nonsep import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    Certificate,
    Cycle,
    SearchStats,
    SeparatingCycle,
    SeparatingPath,
    WitnessCycle,
    WitnessPath,
    WitnessTree,
    fundamental_cycle,
    is_nonseparating_cycle,
    is_nonseparating_path,
    non_tree_edges,
    verify_fundamental_tutte_tree,
    verify_tutte_tree,
)
from .planar import (
    Embedding,
    embedding_from_rotation,
    embedding_to_dot,
    is_planar,
    leaves_clique,
    leaves_induce_triangle,
    leaves_on_common_face,
    planar_embed,
)
from .search import (
    BudgetExceeded,
    ConstructionError,
    CutRecord,
    SearchConfig,
    SpanningTreeOverflow,
    SpgReport,
    build_ftt_block_structured,
    build_ftt_series_parallel,
    check_spg_conditions,
    decide_planar_tutte,
    enumerate_spanning_trees,
    find_fundamental_tutte_tree,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    find_spanning_tree_with_leafset,
    find_tutte_tree,
)
from .generators import (
    g_n,
    herschel,
    named,
    named_graphs,
    noftt,
    noftt_witness,
    star_s,
    zamfirescu,
    zamfirescu_terminals,
)
from .harness import (
    Graph6Error,
    THEOREM_IDS,
    TheoremReport,
    graph_to_dot,
    parse_graph6,
    read_graph6_file,
    replay_bundle,
    verify_theorem,
    write_graph6,
)

__version__ = "1.0.0"
