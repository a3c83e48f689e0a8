"""Exact and Monte Carlo checks of the sampler's distributional claims.

Each check returns an Estimate carrying a 95% interval and a pass flag whose
meaning depends on the claim: lower-bound claims pass when the interval clears
the target, identities pass when the interval contains it. All checks are
deterministic given (seed, trials) and independent of the worker count.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .extractor import (
    Params,
    derive_params,
    exact_q,
    left_minimal_members,
    sample_trial,
    survival_probability,
    target_hit_count,
)
from .parallel import iter_indexed
from .reducer import OrderedGraph
from .rng import stream

Z95 = 1.96
CONDITIONAL_TARGET = 0.2  # supported-given-layer probability must beat 1/5


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo estimate with a 95% interval and the claim's target."""

    mean: float
    trials: int
    ci_low: float
    ci_high: float
    target: float
    passed: bool


@dataclass(frozen=True)
class QBoundCheck:
    """Ratio q/p at the guarantee hit target; passes at >= 0.35."""

    d: int
    ell: int
    ratio: float
    passed: bool


@dataclass(frozen=True)
class ConditionalTrial:
    """One conditioned draw: the sample meets the vertex's candidate set in
    exactly the chosen forced subset."""

    vertex: int
    forced: tuple[int, ...]
    sampled: tuple[int, ...]


@dataclass(frozen=True)
class MarkovBound:
    """Forced-subset attrition: mean count of forced vertices that fail to
    survive, and how often at least 90% of them fail."""

    mean_missing: float
    frac_high_missing: float
    ell: int
    trials: int


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """95% Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 0 <= successes <= trials:
        raise ValueError("successes out of range")
    phat = successes / trials
    z2 = z * z
    denom = 1 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials)) / denom
    # at the boundaries the true endpoints are exactly 0 and 1; float rounding
    # of the closed form misses them by an ulp
    low = 0.0 if successes == 0 else max(0.0, center - half)
    high = 1.0 if successes == trials else min(1.0, center + half)
    return low, high


def mean_interval(values: Sequence[float], z: float = Z95) -> tuple[float, float, float]:
    """(mean, low, high): normal-approximation interval for a sample mean."""
    k = len(values)
    if k < 1:
        raise ValueError("need at least one value")
    mu = statistics.fmean(values)
    sd = statistics.stdev(values) if k > 1 else 0.0
    half = z * sd / math.sqrt(k)
    return mu, mu - half, mu + half


def log_spaced_ints(lo: int, hi: int, count: int) -> list[int]:
    """About `count` geometrically spaced integers from lo to hi, deduplicated."""
    if lo < 1 or hi < lo or count < 1:
        raise ValueError("need 1 <= lo <= hi and count >= 1")
    if count == 1:
        return [lo]
    la, lb = math.log(lo), math.log(hi)
    out = [round(math.exp(la + (lb - la) * i / (count - 1))) for i in range(count)]
    out[0], out[-1] = lo, hi
    return sorted(set(out))


def check_q_bound(d: int) -> QBoundCheck:
    """q/p at the hit target for degree d; the extraction constants need >= 0.35."""
    if d < 16:
        raise ValueError("the bound is only claimed for d >= 16")
    ell = target_hit_count(d)
    ratio = exact_q(d, ell) * d
    return QBoundCheck(d, ell, ratio, ratio >= 0.35)


def _require_trials(trials: int) -> None:
    if trials < 1:
        raise ValueError("trials must be at least 1")


def _require_compatible(og: OrderedGraph, params: Params) -> None:
    if og.d != params.d:
        raise ValueError(f"ordered graph built for d={og.d}, params for d={params.d}")


def _forced_trial(og: OrderedGraph, params: Params, y: int, forced, rng) -> ConditionalTrial:
    """Complete a trial whose candidate-set coordinates are pinned to `forced`."""
    blocked = set(og.candidate_sets[y])
    d = params.d
    sampled = set(forced)
    for v in range(og.graph.n):
        if v not in blocked and rng.randrange(d) == 0:
            sampled.add(v)
    return ConditionalTrial(y, tuple(sorted(forced)), tuple(sorted(sampled)))


def draw_conditional_trial(og: OrderedGraph, params: Params, y: int, rng) -> ConditionalTrial:
    """Force the sample's intersection with y's candidate set to a uniform
    size-ell subset; every other vertex is sampled independently at 1/d."""
    forced = rng.sample(og.candidate_sets[y], params.ell)
    return _forced_trial(og, params, y, forced, rng)


def _conditional_outcome(og: OrderedGraph, params: Params, trial: ConditionalTrial) -> tuple[bool, int]:
    membership = bytearray(og.graph.n)
    for v in trial.sampled:
        membership[v] = 1
    survivor_set = set(left_minimal_members(og, trial.sampled, membership))
    neighbor_hits = sum(1 for w in og.graph.adjacency[trial.vertex] if w in survivor_set)
    missing = sum(1 for x in trial.forced if x not in survivor_set)
    return neighbor_hits >= params.threshold, missing


def _conditional_worker(args, index: int) -> tuple[bool, int]:
    og, params, y, seed = args
    rng = stream(seed, index)
    return _conditional_outcome(og, params, draw_conditional_trial(og, params, y, rng))


def mc_conditional(
    og: OrderedGraph, params: Params, y: int, trials: int, seed: int, workers: int = 1
) -> Estimate:
    """P(vertex reaches the supported set | it is in the layer); claim: > 1/5.

    Conditioning is operational: the candidate-set coordinates are forced and
    the rest sampled, which is valid because coordinates are independent.
    """
    _require_trials(trials)
    _require_compatible(og, params)
    if len(og.graph.adjacency[y]) < params.d:
        raise ValueError(f"vertex {y} has degree below d={params.d}")
    successes = 0
    for _, (ok, _) in iter_indexed(_conditional_worker, (og, params, y, seed), trials, workers):
        successes += ok
    low, high = wilson_interval(successes, trials)
    return Estimate(successes / trials, trials, low, high, CONDITIONAL_TARGET, low > CONDITIONAL_TARGET)


def _sweep_worker(args, index: int) -> tuple[int, bool]:
    og, params, y, seed, subsets, trials = args
    subset_index, _ = divmod(index, trials)
    rng = stream(seed, index)
    trial = _forced_trial(og, params, y, subsets[subset_index], rng)
    ok, _ = _conditional_outcome(og, params, trial)
    return subset_index, ok


def mc_conditional_sweep(
    og: OrderedGraph,
    params: Params,
    y: int,
    trials: int,
    seed: int,
    cap: int = 4096,
    workers: int = 1,
) -> tuple[Estimate, tuple[int, ...]]:
    """Worst forced subset instead of a uniform one.

    Enumerates every size-ell subset of y's candidate set (rejecting more than
    `cap` of them), estimates the conditional support probability for each
    with `trials` draws, and returns the smallest estimate together with the
    subset achieving it. The support claim is per-subset, so the worst one
    still has to beat 1/5.
    """
    _require_trials(trials)
    _require_compatible(og, params)
    if len(og.graph.adjacency[y]) < params.d:
        raise ValueError(f"vertex {y} has degree below d={params.d}")
    subsets = tuple(combinations(og.candidate_sets[y], params.ell))
    if len(subsets) > cap:
        raise ValueError(f"{len(subsets)} forced subsets exceed the sweep cap {cap}")
    counts = [0] * len(subsets)
    args = (og, params, y, seed, subsets, trials)
    for _, (subset_index, ok) in iter_indexed(_sweep_worker, args, len(subsets) * trials, workers):
        counts[subset_index] += ok
    worst_index = min(range(len(subsets)), key=lambda i: (counts[i], subsets[i]))
    low, high = wilson_interval(counts[worst_index], trials)
    estimate = Estimate(
        counts[worst_index] / trials, trials, low, high, CONDITIONAL_TARGET,
        low > CONDITIONAL_TARGET,
    )
    return estimate, subsets[worst_index]


def mc_markov_bound(
    og: OrderedGraph, params: Params, y: int, trials: int, seed: int, workers: int = 1
) -> MarkovBound:
    """Attrition statistics of the forced subset under the same conditioning."""
    _require_trials(trials)
    _require_compatible(og, params)
    total_missing = 0
    high_missing = 0
    cutoff = 0.9 * params.ell
    for _, (_, missing) in iter_indexed(_conditional_worker, (og, params, y, seed), trials, workers):
        total_missing += missing
        if missing >= cutoff:
            high_missing += 1
    return MarkovBound(total_missing / trials, high_missing / trials, params.ell, trials)


def _survival_worker(args, index: int) -> int:
    og, params, x, seed = args
    rng = stream(seed, index)
    d = params.d
    for _w in og.left_neighbors[x]:
        if rng.randrange(d) == 0:
            return 0
    return 1


def mc_per_vertex_survival(
    og: OrderedGraph, params: Params, x: int, trials: int, seed: int, workers: int = 1
) -> Estimate:
    """P(sampled vertex x keeps no sampled left-neighbor).

    The target is the exact closed form (1 - 1/d)^(left-degree of x); passing
    means the interval contains it. A vertex with zero left-neighbors always
    survives, so the estimate is exactly 1 there.
    """
    _require_trials(trials)
    _require_compatible(og, params)
    successes = 0
    for _, r in iter_indexed(_survival_worker, (og, params, x, seed), trials, workers):
        successes += r
    low, high = wilson_interval(successes, trials)
    target = survival_probability(params.d, exposures=len(og.left_neighbors[x]))
    return Estimate(successes / trials, trials, low, high, target, low <= target <= high)


def _edge_identity_worker(args, index: int) -> int:
    og, params, seed = args
    rng = stream(seed, index)
    g = og.graph
    d, ell = params.d, params.ell
    sampled = [v for v in range(g.n) if rng.randrange(d) == 0]
    hits = [0] * g.n
    for x in sampled:
        for y in og.candidate_index[x]:
            hits[y] += 1
    layer = [y for y in range(g.n) if hits[y] == ell]
    return g.edges_within(layer)


def mc_edge_identity(
    og: OrderedGraph, params: Params, trials: int, seed: int, workers: int = 1
) -> Estimate:
    """Mean layer-internal edge count versus the independence target q^2 * m.

    Refuses graphs with triangles: adjacent vertices must have disjoint
    candidate sets for layer membership to be pairwise independent.
    """
    _require_trials(trials)
    _require_compatible(og, params)
    if not og.graph.is_triangle_free():
        raise ValueError("edge identity requires a triangle-free graph")
    values = [
        float(v)
        for _, v in iter_indexed(_edge_identity_worker, (og, params, seed), trials, workers)
    ]
    mu, low, high = mean_interval(values)
    target = float(params.q * params.q * og.graph.m)
    return Estimate(mu, trials, low, high, target, low <= target <= high)


def _potential_worker(args, index: int):
    og, params, seed = args
    return sample_trial(og, params, stream(seed, index)).potential


def mc_potential(
    og: OrderedGraph, params: Params, trials: int, seed: int, workers: int = 1
) -> tuple[Estimate, float]:
    """(Estimate of the mean potential, fraction of trials with potential > 0).

    The acceptance argument needs a strictly positive mean, so the estimate
    passes when the interval is clear of zero.
    """
    _require_trials(trials)
    _require_compatible(og, params)
    potentials = [v for _, v in iter_indexed(_potential_worker, (og, params, seed), trials, workers)]
    successes = sum(1 for v in potentials if v > 0)
    mu, low, high = mean_interval([float(v) for v in potentials])
    estimate = Estimate(mu, trials, low, high, 0.0, low > 0.0)
    return estimate, successes / trials


__all__ = [
    "CONDITIONAL_TARGET",
    "ConditionalTrial",
    "Estimate",
    "MarkovBound",
    "QBoundCheck",
    "Z95",
    "check_q_bound",
    "derive_params",
    "draw_conditional_trial",
    "exact_q",
    "log_spaced_ints",
    "mc_conditional",
    "mc_conditional_sweep",
    "mc_edge_identity",
    "mc_markov_bound",
    "mc_per_vertex_survival",
    "mc_potential",
    "mean_interval",
    "survival_probability",
    "wilson_interval",
]
