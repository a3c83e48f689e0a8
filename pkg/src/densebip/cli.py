"""Command-line interface binding generators, reduction, extraction, the exact
oracle, and the distribution checks into reproducible runs.

Exit codes: 0 success, 1 verified failure (extraction failed, a claim check
did not pass, a candidate pair is invalid), 2 usage or input errors. JSON
output is byte-identical for identical inputs, seeds, and flags regardless of
the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .extractor import (
    DEGREE_FLOOR_DENOM,
    ExtractionError,
    ParamsError,
    Params,
    SIZE_RATIO_BOUND,
    derive_params,
    extract,
)
from .generators import (
    binomial_triangle_scrubbed,
    c5_blowup,
    complete_bipartite,
    random_bipartite,
)
from .graph import (
    Graph,
    GraphError,
    bipartite_pair_report,
    canonical_sha256,
    format_edge_list,
    load_graph,
)
from .oracle import DEFAULT_CAP, max_induced_bipartite_average_degree
from .reducer import EmptyCoreError, OrderingError, reduce_and_order
from .stats import (
    Estimate,
    check_q_bound,
    mc_conditional,
    mc_edge_identity,
    mc_per_vertex_survival,
    mc_potential,
)

SEED_ENV_VAR = "DENSEBIP_SEED"

_DEFAULT_TRIALS = {
    "conditional": 10_000,
    "survival": 10_000,
    "edge-identity": 10_000,
    "potential": 1_000,
}


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    return int(os.environ.get(SEED_ENV_VAR, "0"))


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _params_payload(params: Params) -> dict:
    return {
        "d": params.d,
        "ell": params.ell,
        "p": _rational(params.p),
        "p_float": float(params.p),
        "q": _rational(params.q),
        "q_float": float(params.q),
        "threshold": params.threshold,
        "guarantee": params.guarantee,
    }


def _estimate_payload(est: Estimate) -> dict:
    return {
        "mean": est.mean,
        "trials": est.trials,
        "ci_low": est.ci_low,
        "ci_high": est.ci_high,
        "target": est.target,
        "passed": est.passed,
    }


def _parse_id_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"bad vertex list {text!r}, expected comma-separated ids") from None


def _positive_int(label: str, value: int) -> int:
    if value < 1:
        raise ValueError(f"{label} must be at least 1")
    return value


def cmd_gen(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    family = args.family
    p = args.params
    if family == "complete-bipartite":
        if len(p) != 2:
            raise ValueError("complete-bipartite needs two integers: A B")
        g = complete_bipartite(int(p[0]), int(p[1]))
    elif family == "random-bipartite":
        if len(p) != 3:
            raise ValueError("random-bipartite needs: N1 N2 RHO")
        g = random_bipartite(int(p[0]), int(p[1]), float(p[2]), seed)
    elif family == "c5-blowup":
        if len(p) != 1:
            raise ValueError("c5-blowup needs one integer: T")
        g = c5_blowup(int(p[0]))
    elif family == "binomial-scrubbed":
        if len(p) != 2:
            raise ValueError("binomial-scrubbed needs: N RHO")
        g = binomial_triangle_scrubbed(int(p[0]), float(p[1]), seed)
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(f"unknown family {family!r}")
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    g = load_graph(args.infile)
    seed = _resolve_seed(args.seed)
    _positive_int("--max-retries", args.max_retries)
    _positive_int("--workers", args.workers)
    params = derive_params(args.d, args.guarantee)
    og, mapping = reduce_and_order(g, args.d)
    inverse = {new: old for old, new in mapping.items()}
    try:
        result = extract(og, params, seed, args.max_retries, args.workers)
    except ExtractionError as exc:
        payload = {
            "error": str(exc),
            "diagnostics": exc.diagnostics,
            "input_sha256": canonical_sha256(g),
            "seed": seed,
            "params": _params_payload(params),
        }
        if args.json:
            _emit(payload)
        else:
            print(f"extraction failed: {exc}", file=sys.stderr)
        return 1
    side_i = sorted(inverse[v] for v in result.I)
    side_j = sorted(inverse[v] for v in result.J)
    report = bipartite_pair_report(g, side_i, side_j)
    payload = {
        "input_sha256": canonical_sha256(g),
        "seed": seed,
        "params": _params_payload(params),
        "reduced_n": og.graph.n,
        "reduced_m": og.graph.m,
        "trials_used": result.trials_used,
        "I": side_i,
        "J": side_j,
        "I_size": len(side_i),
        "J_size": len(side_j),
        "cross_edges": report.cross_edges,
        "average_degree": _rational(report.average_degree),
        "average_degree_float": float(report.average_degree),
        "valid": report.valid,
    }
    failed = not report.valid
    if params.guarantee:
        floor = Fraction(params.ell, DEGREE_FLOOR_DENOM)
        meets_floor = report.average_degree >= floor
        ratio_ok = len(side_i) <= SIZE_RATIO_BOUND * len(side_j)
        payload["guarantee_checks"] = {
            "average_degree_floor": _rational(floor),
            "meets_floor": meets_floor,
            "size_ratio_bound": SIZE_RATIO_BOUND,
            "size_ratio_ok": ratio_ok,
        }
        failed = failed or not (meets_floor and ratio_ok)
    if args.json:
        _emit(payload)
    else:
        print(f"pair sizes |I|={len(side_i)} |J|={len(side_j)}")
        print(f"cross edges {report.cross_edges}")
        print(f"average degree {_rational(report.average_degree)}"
              f" ({float(report.average_degree):.4f})")
        print(f"trials used {result.trials_used}; valid={report.valid}")
    return 1 if failed else 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = load_graph(args.infile)
    result = max_induced_bipartite_average_degree(g, args.cap)
    _emit(
        {
            "input_sha256": canonical_sha256(g),
            "best_value": _rational(result.best_value),
            "best_value_float": float(result.best_value),
            "witness_I": list(result.witness_I),
            "witness_J": list(result.witness_J),
        }
    )
    return 0


def _translate_vertex(mapping: dict[int, int], vertex: int | None, default_local: int) -> int:
    if vertex is None:
        return default_local
    local = mapping.get(vertex)
    if local is None:
        raise ValueError(f"vertex {vertex} was dropped by the reduction")
    return local


def cmd_stats(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    _positive_int("--workers", args.workers)
    if args.check == "check-q":
        result = check_q_bound(args.d)
        _emit(
            {
                "check": "check-q",
                "d": result.d,
                "ell": result.ell,
                "ratio": result.ratio,
                "passed": result.passed,
            }
        )
        return 0 if result.passed else 1
    if not args.infile:
        raise ValueError(f"stats {args.check} needs --in FILE")
    trials = args.trials if args.trials is not None else _DEFAULT_TRIALS[args.check]
    _positive_int("--trials", trials)
    g = load_graph(args.infile)
    params = derive_params(args.d, args.guarantee)
    og, mapping = reduce_and_order(g, args.d)
    inverse = {new: old for old, new in mapping.items()}
    payload: dict = {
        "check": args.check,
        "input_sha256": canonical_sha256(g),
        "seed": seed,
        "trials": trials,
        "params": _params_payload(params),
    }
    if args.check == "conditional":
        y = _translate_vertex(mapping, args.y, 0)
        est = mc_conditional(og, params, y, trials, seed, args.workers)
        payload["vertex"] = inverse[y]
        payload["estimate"] = _estimate_payload(est)
        passed = est.passed
    elif args.check == "survival":
        default_x = max(range(og.graph.n), key=lambda v: (len(og.left_neighbors[v]), -v))
        x = _translate_vertex(mapping, args.x, default_x)
        est = mc_per_vertex_survival(og, params, x, trials, seed, args.workers)
        payload["vertex"] = inverse[x]
        payload["left_degree"] = len(og.left_neighbors[x])
        payload["estimate"] = _estimate_payload(est)
        passed = est.passed
    elif args.check == "edge-identity":
        est = mc_edge_identity(og, params, trials, seed, args.workers)
        payload["estimate"] = _estimate_payload(est)
        passed = est.passed
    elif args.check == "potential":
        est, rate = mc_potential(og, params, trials, seed, args.workers)
        payload["estimate"] = _estimate_payload(est)
        payload["success_rate"] = rate
        passed = est.passed and rate > 0.0
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(f"unknown check {args.check!r}")
    payload["passed"] = passed
    _emit(payload)
    return 0 if passed else 1


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.infile)
    side_i = _parse_id_list(args.I)
    side_j = _parse_id_list(args.J)
    report = bipartite_pair_report(g, side_i, side_j)
    _emit(
        {
            "input_sha256": canonical_sha256(g),
            "I": list(report.I),
            "J": list(report.J),
            "I_size": len(report.I),
            "J_size": len(report.J),
            "cross_edges": report.cross_edges,
            "average_degree": _rational(report.average_degree),
            "average_degree_float": float(report.average_degree),
            "valid": report.valid,
            "reason": report.reason,
        }
    )
    return 0 if report.valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="densebip",
        description="Extract and verify dense induced bipartite subgraphs of triangle-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated instance in edge-list form")
    gen.add_argument(
        "family",
        choices=["complete-bipartite", "random-bipartite", "c5-blowup", "binomial-scrubbed"],
    )
    gen.add_argument("params", nargs="*", help="family parameters, e.g. 200 200")
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--out", help="output file (default: stdout)")
    gen.set_defaults(func=cmd_gen)

    ext = sub.add_parser("extract", help="reduce the input and extract a verified pair")
    ext.add_argument("--in", dest="infile", required=True)
    ext.add_argument("--d", type=int, required=True, help="minimum-degree parameter")
    ext.add_argument("--guarantee", action="store_true",
                     help="enforce the d>=16 constants and the ell/2310 floor")
    ext.add_argument("--seed", type=int, default=None)
    ext.add_argument("--max-retries", type=int, default=1000)
    ext.add_argument("--workers", type=int, default=1)
    ext.add_argument("--json", action="store_true", help="machine-readable report")
    ext.set_defaults(func=cmd_extract)

    orc = sub.add_parser("oracle", help="exact best induced bipartite average degree")
    orc.add_argument("--in", dest="infile", required=True)
    orc.add_argument("--cap", type=int, default=DEFAULT_CAP)
    orc.set_defaults(func=cmd_oracle)

    st = sub.add_parser("stats", help="run one distributional check")
    st.add_argument(
        "check",
        choices=["check-q", "conditional", "edge-identity", "potential", "survival"],
    )
    st.add_argument("--in", dest="infile", default=None)
    st.add_argument("--d", type=int, required=True)
    st.add_argument("--trials", type=int, default=None)
    st.add_argument("--seed", type=int, default=None)
    st.add_argument("--workers", type=int, default=1)
    st.add_argument("--guarantee", action="store_true")
    st.add_argument("--y", type=int, default=None, help="conditioned vertex (original id)")
    st.add_argument("--x", type=int, default=None, help="survival vertex (original id)")
    st.set_defaults(func=cmd_stats)

    ver = sub.add_parser("verify", help="validate a candidate pair")
    ver.add_argument("--in", dest="infile", required=True)
    ver.add_argument("--I", required=True, help="comma-separated vertex ids")
    ver.add_argument("--J", required=True, help="comma-separated vertex ids")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExtractionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, EmptyCoreError, OrderingError, ParamsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
