"""Command-line entry point: ``pancake-embed <command> ...``."""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import embedding as emb
from .formats import (
    FormatError,
    edges_csv,
    edges_dot,
    histogram_csv,
    load_embedding,
    report_to_dict,
    save_embedding,
)
from .perm_core import format_permutation, identity, parse_permutation
from .representation import (
    left_count_decode,
    left_count_encode,
    rule_r_decode,
    rule_r_encode,
)
from .routing import validate_path
from .suite import run_suite
from .topology import GraphKind, edge_count, format_label, parse_label, vertex_count
from .verify import DEFAULT_CAP, ResourceRefusal, bfs_from_identity, check_hamiltonian, measure

# guest -> host -> (builder, declared dilation bound)
SUPPORTED = {
    "ring": {"pancake": (lambda a: emb.embed_ring(a.k, a.n), 1)},
    "line": {"pancake": (lambda a: emb.embed_line(a.length or math.factorial(a.n), a.n), 1)},
    "grid2d-nfact": {"pancake": (lambda a: emb.embed_grid_nfact(a.n), 7)},
    "grid-family": {"pancake": (lambda a: emb.embed_grid_family(a.p, a.n), 4)},
    "mixed_grid": {
        "pancake": (lambda a: emb.embed_mixed_grid_pancake(a.n), 6),
        "star": (lambda a: emb.embed_mixed_grid_star(a.n), 3),
    },
    "hypercube": {
        "pancake": (lambda a: emb.embed_hypercube_via_mixed_grid(a.n), 6),
        "star": (lambda a: emb.embed_hypercube_via_mixed_grid(a.n, "star"), 3),
    },
    "qd": {
        "pancake": (lambda a: emb.embed_qd_via_ghc(a.n), 8),
        "star": (lambda a: emb.embed_qd_via_ghc(a.n, "star"), 4),
    },
    "ghc": {
        "pancake": (lambda a: emb.embed_ghc_pancake(a.n), 8),
        "star": (lambda a: emb.embed_ghc_star(a.n), 4),
    },
}

CODINGS = {
    "left-count": (left_count_encode, left_count_decode),
    "rule-r": (rule_r_encode, rule_r_decode),
}


class UsageError(Exception):
    pass


def _out(args):
    return open(args.out, "w") if args.out else sys.stdout


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _topology(args) -> GraphKind:
    text = args.topology
    if "(" not in text:
        if args.n is None:
            raise UsageError("--n is required unless --topology carries its parameters")
        text = f"{text}({args.n})"
    g = GraphKind.parse(text)
    if g.kind in ("pancake", "star", "mixed_grid", "ghc") and g.n > args.cap:
        raise UsageError(f"{g} exceeds dimension cap {args.cap}; pass --cap to raise it")
    return g


def cmd_gen(args) -> int:
    g = _topology(args)
    text = edges_dot(g) if args.format == "dot" else edges_csv(g)
    _write(args, text)
    print(f"vertices: {vertex_count(g)}")
    print(f"edges: {edge_count(g)}")
    return 0


def cmd_hamilton(args) -> int:
    n = args.n
    k = args.k or n
    if not 3 <= k <= n <= args.cap:
        raise UsageError(f"need 3 <= k <= n <= cap (got k={k}, n={n}, cap={args.cap})")
    order = emb.hamiltonian_cycle(identity(n), k)
    _write(args, "".join(format_permutation(p) + "\n" for p in order))
    if args.check:
        result = check_hamiltonian(identity(n), k)
        print(f"check: {'pass' if result else 'fail ' + result.detail}", file=sys.stderr)
        return 0 if result else 1
    return 0


def cmd_rep(args) -> int:
    encode, decode = CODINGS[args.mode]
    if args.direction == "encode":
        print(format_label(encode(parse_permutation(args.value))))
    else:
        print(format_permutation(decode(parse_label(args.value))))
    return 0


def cmd_embed(args) -> int:
    host = args.host or "pancake"
    try:
        builder, bound = SUPPORTED[args.guest][host]
    except KeyError:
        combos = ", ".join(f"{g}->{h}" for g, hs in SUPPORTED.items() for h in hs)
        raise UsageError(f"unsupported guest/host {args.guest}->{host}; supported: {combos}") from None
    if args.n is None:
        raise UsageError("--n is required")
    if args.guest == "ring" and args.k is None:
        args.k = args.n
    if args.guest == "grid-family" and args.p is None:
        raise UsageError("--p is required for grid-family")
    if args.n > args.cap:
        raise UsageError(f"n={args.n} exceeds dimension cap {args.cap}")
    e = builder(args)
    with _out(args) as fh:
        save_embedding(e, fh, bound)
    routes = "no routes" if e.routes is None else f"{len(e.routes)} routes"
    print(f"{e.guest} -> {e.host}: {len(e.map)} map entries, {routes}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.embedding) as fh:
            e, bound = load_embedding(fh)
        errors = emb.embedding_errors(e)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if errors:
        for err in errors:
            print(f"error: {err}", file=sys.stderr)
        return 2
    if e.routes is not None:
        bad = [k for k, r in e.routes.items() if not validate_path(r, e.host)]
        if bad:
            print(f"error: {len(bad)} routes are not host paths", file=sys.stderr)
            return 2
    table = bfs_from_identity(e.host, args.cap)
    report = measure(e, table, bound)
    if args.format == "csv":
        _write(args, histogram_csv(report))
    else:
        _write(args, json.dumps(report_to_dict(report), indent=1) + "\n")
    print(
        f"{e.guest} -> {e.host}: dilation {report.dilation}, congestion {report.congestion}"
        f" ({report.congestion_routing}), bound {bound}, violations {len(report.violations)}",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


def _n_range(text: str) -> range:
    for sep in ("..", "-"):
        if sep in text:
            lo, hi = text.split(sep)
            return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def cmd_suite(args) -> int:
    ns = _n_range(args.n or "3..5")
    if ns.start < 3 or ns.stop - 1 > args.cap:
        raise UsageError(f"suite range must lie in [3, cap={args.cap}]")
    rows = run_suite(ns, seed=args.seed, cap=args.cap)
    lines = [f"{'claim':<44} {'n':>2} {'measured':>9} {'bound':>6}  result"]
    for r in rows:
        lines.append(f"{r.claim:<44} {r.n:>2} {str(r.measured):>9} {str(r.bound):>6}  "
                     f"{'PASS' if r.passed else 'FAIL'}  {r.detail}".rstrip())
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} claims passed")
    _write(args, "\n".join(lines) + "\n")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pancake-embed", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest host dimension allowed")
        return p

    p = common(sub.add_parser("gen", help="write the edge list of a topology"))
    p.add_argument("--topology", required=True, help="kind name (with --n) or e.g. 'grid2d(3,4)'")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("csv", "dot"), default="csv")
    p.set_defaults(func=cmd_gen)

    p = common(sub.add_parser("hamilton", help="list the pancake-sequence order"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_hamilton)

    p = sub.add_parser("rep", help="convert between permutations and labels")
    p.add_argument("--mode", choices=sorted(CODINGS), required=True)
    p.add_argument("direction", choices=("encode", "decode"))
    p.add_argument("value")
    p.set_defaults(func=cmd_rep)

    p = common(sub.add_parser("embed", help="build an embedding file"))
    p.add_argument("--guest", required=True, choices=sorted(SUPPORTED))
    p.add_argument("--host", choices=("pancake", "star"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, help="ring order (ring size k!)")
    p.add_argument("--p", type=int, help="grid-family parameter")
    p.add_argument("--length", type=int, help="line length (default n!)")
    p.set_defaults(func=cmd_embed)

    p = common(sub.add_parser("verify", help="measure an embedding file"))
    p.add_argument("embedding")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("suite", help="check every claim for a range of n"))
    p.add_argument("--n", help="dimension or range such as 3..5")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ResourceRefusal, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
