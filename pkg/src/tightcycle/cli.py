"""Command-line front end.

Subcommands: gen, analyze, find-cycle, witness, verify, extremal.  Exit code
protocol: 0 = found/valid/exact, 1 = negative result (no walk, refutation,
invalid certificate, budget exhausted), 2 = usage or input error,
3 = gadget stages inconclusive (witness --stages gadget only).

Every JSON output embeds a manifest (subcommand, input paths, flags, seed,
tool version); wall time lives in a separate top-level "timing" object so
diffs can exclude exactly one path.  Re-running a command on identical
inputs reproduces identical JSON apart from "timing".
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .constructions import complete_hypergraph, k4_minus_fixture, z3_construction
from .extremal import SearchConfig, ex2_exact
from .hypergraph import parse_h3, serialize_h3
from .structure import (
    apex_digraph,
    base_graph,
    check_degree_implications,
    check_edge_claim,
    check_no_2cycles,
    count_k4minus,
)
from .walks import find_closed_tight_walk, find_injective_tight_cycle
from .witness import (
    WalkCertificate,
    certificate_from_json,
    certificate_to_obj,
    find_hom_c11,
    verify_certificate,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_INCONCLUSIVE = 3


def _manifest(subcommand: str, inputs: list[str], flags: dict) -> dict:
    return {
        "subcommand": subcommand,
        "inputs": inputs,
        "flags": {k: flags[k] for k in sorted(flags)},
        "seed": None,
        "version": __version__,
    }


def _emit(obj: dict, started: float, out_path: str | None = None) -> None:
    obj["timing"] = {"wall_ms": round((time.perf_counter() - started) * 1000.0, 3)}
    text = json.dumps(obj, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _load_h3(path: str):
    with open(path) as fh:
        return parse_h3(fh.read())


# -- subcommands -----------------------------------------------------------


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "k4minus":
        h = k4_minus_fixture()
        comments: list[str] = []
    else:
        if args.n is None:
            raise ValueError(f"gen {kind} requires --n")
        if kind == "z3":
            h, coloring = z3_construction(args.n)
            comments = coloring.comment_lines()
        else:
            h = complete_hypergraph(args.n)
            comments = []
    text = serialize_h3(h, comments=comments)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_analyze(args, started: float) -> int:
    h = _load_h3(args.path)
    d = apex_digraph(h)
    b = base_graph(h)
    delta2 = h.min_codegree()
    report = {
        "n": h.n,
        "m": h.num_edges,
        "delta2": delta2,
        "strict_threshold": 3 * delta2 > h.n,
        "k4minus_count": count_k4minus(h),
        "arc_count": d.arc_count,
        "base_edge_count": b.edge_count,
        "claims": None,
    }
    if args.claims:
        threshold = args.threshold if args.threshold is not None else delta2
        report["claims"] = {
            "threshold": threshold,
            "edge_claim": [list(e) for e in check_edge_claim(h, d, b)],
            "two_cycles": [list(p) for p in check_no_2cycles(d)],
            "degree_implications": [
                {"vertex": v.vertex, "rule": v.rule, "degree": v.degree,
                 "threshold": v.threshold}
                for v in check_degree_implications(h, d, b, threshold)
            ],
        }
    report["manifest"] = _manifest(
        "analyze", [args.path], {"claims": args.claims, "threshold": args.threshold}
    )
    _emit(report, started)
    return EXIT_OK


def _cmd_find_cycle(args, started: float) -> int:
    if args.length < 4:
        raise ValueError(f"--length must be >= 4, got {args.length}")
    h = _load_h3(args.path)
    if args.mode == "hom":
        walk = find_closed_tight_walk(h, args.length)
    else:
        walk = find_injective_tight_cycle(h, args.length)
    result = {
        "length": args.length,
        "mode": args.mode,
        "found": walk is not None,
        "walk": None if walk is None else list(walk),
        "manifest": _manifest(
            "find-cycle", [args.path], {"length": args.length, "mode": args.mode}
        ),
    }
    _emit(result, started)
    return EXIT_OK if walk is not None else EXIT_NEGATIVE


def _cmd_witness(args, started: float) -> int:
    h = _load_h3(args.path)
    cert = find_hom_c11(h, stages=args.stages)
    if cert is None:
        print("gadget stages inconclusive", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    obj = certificate_to_obj(cert)
    obj["manifest"] = _manifest(
        "witness", [args.path], {"stages": args.stages, "out": args.out}
    )
    _emit(obj, started, out_path=args.out)
    return EXIT_OK if isinstance(cert, WalkCertificate) else EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    h = _load_h3(args.h3_path)
    with open(args.cert_path) as fh:
        cert = certificate_from_json(fh.read())
    ok, diagnostic = verify_certificate(h, cert, full=args.full)
    if not ok:
        print(f"invalid certificate: {diagnostic}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_extremal(args, started: float) -> int:
    cfg = SearchConfig(
        n=args.n,
        length=args.length,
        mode=args.mode,
        workers=args.workers,
        node_budget=args.budget,
    )
    result = ex2_exact(cfg)
    obj = {
        "n": args.n,
        "ell": args.length,
        "mode": args.mode,
        "value": result.value,
        "status": result.status,
        "witness_h3": None if result.witness is None else serialize_h3(result.witness),
        "stats": {"nodes": result.stats.nodes, "prunings": result.stats.prunings},
        "manifest": _manifest(
            "extremal", [],
            {"n": args.n, "length": args.length, "mode": args.mode,
             "workers": args.workers, "budget": args.budget},
        ),
    }
    _emit(obj, started)
    return EXIT_OK if result.status == "exact" else EXIT_NEGATIVE


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tightcycle",
        description="Codegree structure, tight-walk certificates and exact "
                    "codegree Turan numbers for 3-uniform hypergraphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated hypergraph as .h3")
    p.add_argument("kind", choices=["z3", "complete", "k4minus"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("analyze", help="codegree and K4-minus structure report")
    p.add_argument("path")
    p.add_argument("--claims", action="store_true",
                   help="include structural claim violation lists")
    p.add_argument("--threshold", type=int, default=None,
                   help="degree implication threshold (default: min codegree)")

    p = sub.add_parser("find-cycle", help="search for a closed tight walk")
    p.add_argument("path")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--mode", choices=["hom", "injective"], default="hom")

    p = sub.add_parser("witness", help="walk certificate or refutation for length 11")
    p.add_argument("path")
    p.add_argument("--out", default=None, help="also write the certificate here")
    p.add_argument("--stages", choices=["gadget", "all"], default="all")

    p = sub.add_parser("verify", help="check a certificate against a hypergraph")
    p.add_argument("h3_path")
    p.add_argument("cert_path")
    p.add_argument("--full", action="store_true",
                   help="refutations: also re-run the length-11 search")

    p = sub.add_parser("extremal", help="exact codegree Turan number at small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--length", type=int, default=11)
    p.add_argument("--mode", choices=["hom", "injective"], default="hom")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=None, help="node budget")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    started = time.perf_counter()
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "analyze":
            return _cmd_analyze(args, started)
        if args.command == "find-cycle":
            return _cmd_find_cycle(args, started)
        if args.command == "witness":
            return _cmd_witness(args, started)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "extremal":
            return _cmd_extremal(args, started)
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
