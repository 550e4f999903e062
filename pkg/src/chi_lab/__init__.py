"""Exact graph-invariant laboratory.

Computes chi, omega, alpha, Delta, complement connectivity, and the
chromatic excess of small graphs with certifying witnesses, evaluates a
family of exact upper bounds on the chromatic number in quarter-integer
arithmetic, and batch-verifies the bounds (plus the Reed-ceiling scan and
the relaxed-bound connectivity dichotomy) over graph streams.
"""

from .bounds import (
    BOUND_IDS,
    PROVEN_BOUND_IDS,
    BoundEvaluation,
    MissingInvariantError,
    Q4,
    ValidationError,
    bound_cor5,
    bound_cor6,
    bound_cor7,
    bound_cor9,
    bound_cor10,
    bound_cor11,
    bound_prop1,
    bound_prop2,
    bound_prop3,
    bound_prop4,
    eps_bound,
    eps_bound_holds,
    prop12_threshold,
    prop12_threshold_met,
    ramsey_upper,
    reed_bound,
)
from .graphs import (
    Graph,
    Graph6Error,
    UnsupportedSizeError,
    complement,
    complete_graph,
    component_count,
    cycle_graph,
    empty_graph,
    encode_graph6,
    enumerate_labeled,
    gen_gnp,
    gnp_stream,
    graph_from_edge_mask,
    induced_subgraph,
    is_connected,
    is_cut_set,
    iter_bits,
    iter_graph6,
    mask_of,
    parse_graph6,
    path_graph,
    petersen_graph,
)
from .harness import (
    EnumerateSource,
    EpsScanSummary,
    HarnessAbort,
    HarnessOptions,
    ReedScanSummary,
    ReedViolator,
    StrategyPlan,
    VerificationSummary,
    Violation,
    bound_records,
    build_record,
    greedy_independent_partition,
    invariant_records,
    minimal_cut_sets,
    scan_eps,
    scan_reed,
    subgraph_strategy,
    verify_all,
    write_records,
)
from .invariants import (
    InvariantReport,
    certify_report,
    chromatic_excess,
    chromatic_number,
    clique_number,
    greedy_coloring,
    independence_number,
    invariant_report,
    is_clique,
    is_independent_set,
    is_proper_coloring,
    vertex_connectivity,
)

__version__ = "0.1.0"
