"""Command-line front end.

Exit codes: 0 success, 1 bound violated or computation failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import io
from .errors import InvalidInput, RayleighError
from .measures import DEFAULT_BUDGET

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(args, payload: dict, text_lines: list[str] | None = None) -> None:
    if args.format == "json":
        out = io.dumps(payload)
    else:
        lines = text_lines if text_lines is not None else [f"{k}: {payload[k]}" for k in sorted(payload)]
        out = "\n".join(lines) + "\n"
    if args.out:
        io.write_atomic(args.out, out)
    else:
        sys.stdout.write(out)


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InvalidInput("missing required option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_verify_identity(args) -> int:
    from .charpoly import verify_identity

    if args.random:
        import random

        from .instances import random_distribution, random_vectors

        rng = random.Random(args.seed)
        cases = []
        for _ in range(args.trials):
            kind, dist = random_distribution(rng, args.m)
            cases.append((kind, dist, random_vectors(rng, dist.m, args.d)))
    else:
        _need(args, "dist", "vectors")
        cases = [("file", io.read_distribution(args.dist), io.read_vectors(args.vectors))]
    report, ok = [], True
    for kind, dist, vs in cases:
        try:
            res = verify_identity(dist, vs)
            entry = {
                "kind": kind,
                "enum": res["enum"].to_string(),
                "operator": res["operator"].to_string(),
                "closed_form": res["closed_form"].to_string(),
                "real_rooted": res["real_rooted"],
                "ok": True,
            }
        except RayleighError as exc:
            if exc.exit_code == EXIT_INPUT:
                raise
            entry = {"kind": kind, "ok": False, "error": str(exc)}
            ok = False
        report.append(entry)
    _emit(args, {"instances": report, "ok": ok})
    return EXIT_OK if ok else EXIT_FAIL


def _vectors(args):
    vs = io.read_vectors(args.vectors)
    return vs.whiten() if getattr(args, "whiten", False) else vs


def cmd_descend(args) -> int:
    from .charpoly import descend

    _need(args, "dist", "vectors")
    cert = descend(io.read_distribution(args.dist), _vectors(args), args.tol)
    payload = cert.to_json()
    _emit(args, payload)
    return EXIT_OK if cert.bound_holds and cert.barrier_holds else EXIT_FAIL


def cmd_certificate(args) -> int:
    from .charpoly import main_certificate

    _need(args, "dist", "vectors")
    cert = main_certificate(io.read_distribution(args.dist), _vectors(args), args.tol)
    _emit(args, cert.to_json())
    return EXIT_OK


def _parse_target(text: str) -> list[float]:
    try:
        return [float(Fraction(t)) for t in text.split(",")]
    except ValueError as exc:
        raise InvalidInput(f"cannot parse target {text!r}") from exc


def cmd_maxent(args) -> int:
    from .graphlab import edge_vectors, read_edge_list
    from .maxent import fit_lambda

    _need(args, "target")
    if args.graph:
        vs = edge_vectors(read_edge_list(args.graph)).system
    else:
        _need(args, "vectors")
        vs = io.read_vectors(args.vectors)
    model = fit_lambda(vs, _parse_target(args.target), tol=min(args.tol, 1e-8))
    _emit(args, model.to_json())
    return EXIT_OK


def cmd_thintree(args) -> int:
    from .graphlab import read_edge_list, thin_tree_pipeline

    g = read_edge_list(args.graph)
    edges = None if args.edges is None else [int(e) for e in args.edges.split(",") if e.strip()]
    d_mat = io.read_matrix(args.D) if args.D else None
    cert = thin_tree_pipeline(
        g, edges, d_mat, eps_target=args.eps_target, tol=args.tol, budget=args.budget, seed=args.seed, samples=args.samples
    )
    _emit(args, cert.to_json())
    return EXIT_OK


def cmd_resistance(args) -> int:
    from .graphlab import effective_resistances, read_edge_list

    g = read_edge_list(args.graph)
    res = effective_resistances(g)
    payload = {"edges": [[u, v] for u, v, _ in g.edges], "resistance": res}
    lines = [f"{u} {v} {r:.6f}" for (u, v, _), r in zip(g.edges, res)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ksr(args) -> int:
    from .charpoly import ksr_partition

    res = ksr_partition(_vectors(args), args.r, args.tol, args.budget)
    _emit(args, res.to_json())
    return EXIT_OK


def cmd_sample(args) -> int:
    from .measures import sample

    _need(args, "dist")
    dist = io.read_distribution(args.dist)
    if args.count < 0:
        raise InvalidInput("count must be nonnegative")
    rng = np.random.default_rng(args.seed)
    draws = [list(sample(dist, rng)) for _ in range(args.count)]
    counts: dict[str, int] = {}
    for s in draws:
        key = ",".join(map(str, s))
        counts[key] = counts.get(key, 0) + 1
    _emit(args, {"samples": draws, "counts": counts, "seed": args.seed})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--tol", type=float, default=1e-9, help="numerical tolerance (default 1e-9)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget (default 10^6)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="rayleigh-ks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-identity", parents=[common], help="check the three mixed-polynomial routes agree")
    p.add_argument("--dist")
    p.add_argument("--vectors")
    p.add_argument("--random", action="store_true", help="use seeded random instances")
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_verify_identity)

    for name, func, text in (
        ("descend", cmd_descend, "interlacing descent to a low-norm support set"),
        ("certificate", cmd_certificate, "descent plus the isotropic-position bounds"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--dist")
        p.add_argument("--vectors")
        p.add_argument("--whiten", action="store_true", help="bring the vectors into isotropic position first")
        p.set_defaults(func=func)

    p = sub.add_parser("maxent", parents=[common], help="fit max-entropy weights to target marginals")
    p.add_argument("--vectors")
    p.add_argument("--graph", help="edge list; use its edge vectors")
    p.add_argument("--target", help="comma-separated marginals, e.g. 2/3,2/3,2/3")
    p.set_defaults(func=cmd_maxent)

    p = sub.add_parser("thintree", parents=[common], help="find and certify a thin spanning tree")
    p.add_argument("graph")
    p.add_argument("--edges", help="comma-separated edge indices of F (default: all)")
    p.add_argument("--D", help="matrix file for the positive definite D")
    p.add_argument("--eps-target", type=float, default=0.1)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_thintree)

    p = sub.add_parser("resistance", parents=[common], help="effective resistance of every edge")
    p.add_argument("graph")
    p.set_defaults(func=cmd_resistance)

    p = sub.add_parser("ksr", parents=[common], help="r-partition with small part norms")
    p.add_argument("vectors")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--whiten", action="store_true", help="bring the vectors into isotropic position first")
    p.set_defaults(func=cmd_ksr)

    p = sub.add_parser("sample", parents=[common], help="draw seeded samples from a distribution")
    p.add_argument("--dist")
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except RayleighError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
