"""densebip: dense induced bipartite subgraphs of triangle-free graphs.

A triangle-free graph of minimum degree d admits an induced bipartite
subgraph of average degree ell/2310 with ell = floor(ln d / ln ln d). This
package turns that existence argument into a seeded, verifiable pipeline:
reduction to a d-degenerate core, randomized extraction with an exact
acceptance potential, exhaustive small-instance oracles, triangle-free
generators, and Monte Carlo checks of every distributional step.
"""

from .extractor import (
    BEST_EFFORT_MIN_DEGREE,
    DEGREE_FLOOR_DENOM,
    GUARANTEE_MIN_DEGREE,
    SIZE_RATIO_BOUND,
    ExtractionError,
    ExtractionResult,
    Params,
    ParamsError,
    SampleOutcome,
    derive_params,
    exact_q,
    extract,
    greedy_independent_set,
    left_minimal_members,
    potential,
    potential_value,
    sample_trial,
    survival_probability,
    target_hit_count,
)
from .generators import (
    binomial_triangle_scrubbed,
    c5_blowup,
    complete_bipartite,
    random_bipartite,
)
from .graph import (
    BipartitePairReport,
    Graph,
    GraphError,
    bipartite_pair_report,
    canonical_sha256,
    format_edge_list,
    from_edge_list,
    load_graph,
    parse_edge_list,
    save_graph,
)
from .oracle import (
    OracleResult,
    max_independent_set,
    max_induced_bipartite_average_degree,
)
from .reducer import (
    EmptyCoreError,
    OrderedGraph,
    OrderingError,
    build_ordered,
    d_core,
    degeneracy_ordering,
    minimal_min_degree_subgraph,
    reduce_and_order,
)
from .rng import mix64, stream, stream_seed
from .stats import (
    ConditionalTrial,
    Estimate,
    MarkovBound,
    QBoundCheck,
    check_q_bound,
    draw_conditional_trial,
    log_spaced_ints,
    mc_conditional,
    mc_conditional_sweep,
    mc_edge_identity,
    mc_markov_bound,
    mc_per_vertex_survival,
    mc_potential,
    mean_interval,
    wilson_interval,
)

__version__ = "0.1.0"

__all__ = [
    "BEST_EFFORT_MIN_DEGREE",
    "BipartitePairReport",
    "ConditionalTrial",
    "DEGREE_FLOOR_DENOM",
    "EmptyCoreError",
    "Estimate",
    "ExtractionError",
    "ExtractionResult",
    "GUARANTEE_MIN_DEGREE",
    "Graph",
    "GraphError",
    "MarkovBound",
    "OracleResult",
    "OrderedGraph",
    "OrderingError",
    "Params",
    "ParamsError",
    "QBoundCheck",
    "SIZE_RATIO_BOUND",
    "SampleOutcome",
    "bipartite_pair_report",
    "binomial_triangle_scrubbed",
    "build_ordered",
    "c5_blowup",
    "canonical_sha256",
    "check_q_bound",
    "complete_bipartite",
    "d_core",
    "degeneracy_ordering",
    "derive_params",
    "draw_conditional_trial",
    "exact_q",
    "extract",
    "format_edge_list",
    "from_edge_list",
    "greedy_independent_set",
    "left_minimal_members",
    "load_graph",
    "log_spaced_ints",
    "max_independent_set",
    "max_induced_bipartite_average_degree",
    "mc_conditional",
    "mc_conditional_sweep",
    "mc_edge_identity",
    "mc_markov_bound",
    "mc_per_vertex_survival",
    "mc_potential",
    "mean_interval",
    "minimal_min_degree_subgraph",
    "mix64",
    "parse_edge_list",
    "potential",
    "potential_value",
    "random_bipartite",
    "reduce_and_order",
    "sample_trial",
    "save_graph",
    "stream",
    "stream_seed",
    "survival_probability",
    "target_hit_count",
    "wilson_interval",
]
