"""Randomized extraction of a dense induced bipartite pair from an ordered core.

Given a d-degenerate graph of minimum degree >= d with a fixed left-to-right
order, each trial samples every vertex independently with probability 1/d,
keeps the sampled vertices with no sampled left-neighbor as the independent
side I, and collects the layer of vertices whose candidate set is hit exactly
ell times. Layer vertices with enough neighbors in I form the supported set.
A trial is accepted when the potential

    |supported| - layer_edges/(10 q d) - q |sampled| d / 10

is strictly positive (all arithmetic exact rationals); a positive potential
certifies the supported set is large yet sparse, so a greedy independent set
inside it yields the second side J with the promised size and degree bounds.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import BipartitePairReport, Graph, bipartite_pair_report
from .parallel import iter_indexed
from .reducer import OrderedGraph
from .rng import stream

GUARANTEE_MIN_DEGREE = 16
BEST_EFFORT_MIN_DEGREE = 2
Q_OVER_P_FLOOR = Fraction(35, 100)  # guarantee mode promises q >= 0.35 p
SURVIVAL_FLOOR = 0.35               # (1 - 1/d)^d stays above this for d >= 12
SIZE_RATIO_BOUND = 230              # |I| <= 230 |J| in guarantee mode
DEGREE_FLOOR_DENOM = 2310           # guaranteed average degree is ell / 2310


class ParamsError(ValueError):
    """Degree parameter out of range, or a guarantee-mode constant check failed."""


class ExtractionError(RuntimeError):
    """Extraction could not produce a valid pair; carries diagnostics."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


def exact_q(d: int, ell: int) -> float:
    """Binomial(d, 1/d) pmf at ell, to relative error well below 1e-12.

    The binomial coefficient is exact (arbitrary-precision integers); only the
    two power factors go through log space. Nothing can overflow and the
    rounding error stays at a few ulp even around d = 1e6, where a pure
    log-gamma evaluation would already lose nine digits to cancellation.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if not 0 <= ell <= d:
        raise ValueError(f"ell must lie in [0, d], got {ell}")
    if d == 1:
        # p = 1: the sample is forced, so the hit count is d with certainty
        return 1.0 if ell == 1 else 0.0
    log_powers = 0.0
    if ell:
        log_powers -= ell * math.log(d)
    if ell < d:
        log_powers += (d - ell) * math.log1p(-1.0 / d)
    return math.exp(math.log(math.comb(d, ell)) + log_powers)


def survival_probability(d: int, exposures: int | None = None) -> float:
    """(1 - 1/d)^k: no event fires among k independent 1/d events (default k = d)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    k = d if exposures is None else exposures
    if k < 0:
        raise ValueError("exposure count must be nonnegative")
    if k == 0:
        return 1.0
    return math.exp(k * math.log1p(-1.0 / d))


def target_hit_count(d: int) -> int:
    """floor(ln d / ln ln d): the layer hit count that keeps q within a constant of p."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return math.floor(math.log(d) / math.log(math.log(d)))


@dataclass(frozen=True)
class Params:
    """Derived sampling constants for degree parameter d.

    ell is the exact number of candidate-set hits that puts a vertex in the
    layer; p is the per-vertex sampling probability, exactly 1/d; q is the
    binomial pmf at ell, frozen as a rational so potential comparisons are
    exact and deterministic; threshold is the minimum number of I-neighbors a
    layer vertex needs to join the supported set.
    """

    d: int
    ell: int
    p: Fraction
    q: Fraction
    threshold: int
    guarantee: bool


def derive_params(d: int, guarantee_mode: bool) -> Params:
    """Build Params for degree d.

    Guarantee mode needs d >= 16 and re-checks the constants the size and
    degree bounds rest on (q >= 0.35 p, ell^ell <= d, survival floor).
    Best-effort mode accepts d >= 2 and clamps ell into [1, d]; the formula
    can leave that range for tiny d (d = 3 gives 11).
    """
    if guarantee_mode and d < GUARANTEE_MIN_DEGREE:
        raise ParamsError(f"guarantee mode needs d >= {GUARANTEE_MIN_DEGREE}, got {d}")
    if d < BEST_EFFORT_MIN_DEGREE:
        raise ParamsError(f"d must be at least {BEST_EFFORT_MIN_DEGREE}, got {d}")
    raw = target_hit_count(d)
    ell = raw if guarantee_mode else min(d, max(1, raw))
    q_float = exact_q(d, ell)
    if q_float <= 0.0:
        raise ParamsError(f"pmf underflow at d={d}, ell={ell}")
    p = Fraction(1, d)
    q = Fraction(q_float)
    threshold = max(1, -(-ell // 10))
    if guarantee_mode:
        if not 1 <= ell <= d:
            raise ParamsError(f"hit target {ell} out of range for d={d}")
        if ell**ell > d:
            raise ParamsError(f"ell^ell = {ell**ell} exceeds d = {d}")
        if survival_probability(d) < SURVIVAL_FLOOR:
            raise ParamsError(f"survival probability below {SURVIVAL_FLOOR} at d={d}")
        if q < Q_OVER_P_FLOOR * p:
            raise ParamsError(f"q/p = {float(q / p):.4f} is below {float(Q_OVER_P_FLOOR)}")
    return Params(d, ell, p, q, threshold, guarantee_mode)


@dataclass(frozen=True)
class SampleOutcome:
    """One sampling trial.

    sampled is the 1/d-sample; survivors its left-minimal members (always an
    independent set); layer the vertices hit exactly ell times in their
    candidate set; supported the layer vertices with >= threshold survivor
    neighbors; layer_edges the edge count inside the layer; potential the
    exact acceptance value.
    """

    sampled: tuple[int, ...]
    survivors: tuple[int, ...]
    layer: tuple[int, ...]
    supported: tuple[int, ...]
    layer_edges: int
    potential: Fraction


def potential_value(n_supported: int, layer_edges: int, n_sampled: int, params: Params) -> Fraction:
    """|supported| - layer_edges/(10 q d) - q |sampled| d/10, exactly."""
    q, d = params.q, params.d
    return (
        Fraction(n_supported)
        - Fraction(layer_edges) / (10 * q * d)
        - q * n_sampled * d / 10
    )


def potential(outcome: SampleOutcome, params: Params) -> Fraction:
    """Recompute the acceptance potential of an outcome under `params`."""
    return potential_value(
        len(outcome.supported), outcome.layer_edges, len(outcome.sampled), params
    )


def left_minimal_members(og: OrderedGraph, sampled, membership) -> list[int]:
    """Sampled vertices with no sampled left-neighbor (`membership` is 0/1 by id)."""
    left = og.left_neighbors
    out = []
    for x in sampled:
        for w in left[x]:
            if membership[w]:
                break
        else:
            out.append(x)
    return out


def sample_trial(og: OrderedGraph, params: Params, rng) -> SampleOutcome:
    """Draw one trial from `rng` (anything with randrange; usually a seeded stream).

    Membership tests use randrange(d) == 0 so the per-vertex probability is
    exactly 1/d, not a float approximation.
    """
    if og.d != params.d:
        raise ValueError(f"ordered graph built for d={og.d}, params for d={params.d}")
    g = og.graph
    n = g.n
    d, ell, threshold = params.d, params.ell, params.threshold
    membership = bytearray(n)
    sampled = []
    randrange = rng.randrange
    for v in range(n):
        if randrange(d) == 0:
            membership[v] = 1
            sampled.append(v)
    survivors = left_minimal_members(og, sampled, membership)
    hits = [0] * n
    index = og.candidate_index
    for x in sampled:
        for y in index[x]:
            hits[y] += 1
    layer = [y for y in range(n) if hits[y] == ell]
    layer_edges = g.edges_within(layer)
    support = [0] * n
    adjacency = g.adjacency
    for s in survivors:
        for w in adjacency[s]:
            support[w] += 1
    supported = [y for y in layer if support[y] >= threshold]
    phi = potential_value(len(supported), layer_edges, len(sampled), params)
    return SampleOutcome(
        tuple(sampled), tuple(survivors), tuple(layer), tuple(supported), layer_edges, phi
    )


def greedy_independent_set(g: Graph) -> tuple[int, ...]:
    """Minimum-degree greedy independent set (ties to the smallest id).

    Repeatedly takes a minimum-degree vertex of the remaining graph and
    deletes its closed neighborhood; the classic guarantee gives at least
    n / (average_degree + 1) vertices.
    """
    n = g.n
    deg = [len(nbrs) for nbrs in g.adjacency]
    alive = [True] * n
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    chosen: list[int] = []
    while heap:
        dv, v = heapq.heappop(heap)
        if not alive[v] or dv != deg[v]:
            continue
        chosen.append(v)
        removed = [v] + [w for w in g.adjacency[v] if alive[w]]
        for u in removed:
            alive[u] = False
        for u in removed:
            for w in g.adjacency[u]:
                if alive[w]:
                    deg[w] -= 1
                    heapq.heappush(heap, (deg[w], w))
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class ExtractionResult:
    """Accepted pair and its trial metadata.

    I is the survivor side of the accepted trial; J a greedy independent set
    inside the supported layer minus I; report the verification of the pair on
    the ordered graph's vertex ids.
    """

    I: tuple[int, ...]
    J: tuple[int, ...]
    report: BipartitePairReport
    trials_used: int
    seed: int
    params: Params


def _trial_worker(args, index: int) -> SampleOutcome:
    og, params, seed = args
    return sample_trial(og, params, stream(seed, index))


def extract(
    og: OrderedGraph,
    params: Params,
    seed: int,
    max_retries: int = 1000,
    workers: int = 1,
) -> ExtractionResult:
    """Resample until the potential is positive, then carve out the pair.

    Trial i draws only from stream(seed, i) and the smallest index with
    positive potential wins, so the result is identical for any worker count
    or schedule. Raises ExtractionError when retries run out or the accepted
    trial cannot produce a nonempty adjacent pair.
    """
    if max_retries < 1:
        raise ValueError("max_retries must be at least 1")
    if og.d != params.d:
        raise ValueError(f"ordered graph built for d={og.d}, params for d={params.d}")
    accepted_index = -1
    outcome: SampleOutcome | None = None
    for index, out in iter_indexed(_trial_worker, (og, params, seed), max_retries, workers):
        if out.potential > 0:
            accepted_index, outcome = index, out
            break
    if outcome is None:
        raise ExtractionError(
            f"no trial with positive potential in {max_retries} attempts",
            {"max_retries": max_retries, "seed": seed},
        )
    diagnostics = {
        "trial_index": accepted_index,
        "sampled": len(outcome.sampled),
        "survivors": len(outcome.survivors),
        "layer": len(outcome.layer),
        "supported": len(outcome.supported),
        "seed": seed,
    }
    pool = sorted(set(outcome.supported) - set(outcome.survivors))
    if not pool:
        raise ExtractionError("supported layer is contained in the survivor side", diagnostics)
    sub, old_to_new = og.graph.induced_subgraph(pool)
    new_to_old = {i: v for v, i in old_to_new.items()}
    side_j = tuple(sorted(new_to_old[v] for v in greedy_independent_set(sub)))
    side_i = outcome.survivors
    if not side_j:
        raise ExtractionError("greedy selection returned no vertices", diagnostics)
    report = bipartite_pair_report(og.graph, side_i, side_j)
    if not report.valid:
        raise ExtractionError(f"pair failed verification: {report.reason}", diagnostics)
    if report.cross_edges == 0:
        raise ExtractionError("no edges between the two sides", diagnostics)
    if params.guarantee and len(side_i) > SIZE_RATIO_BOUND * len(side_j):
        raise ExtractionError(
            f"survivor side exceeds {SIZE_RATIO_BOUND}x the partner side", diagnostics
        )
    return ExtractionResult(side_i, side_j, report, accepted_index + 1, seed, params)
