"""JSON/CSV/DOT documents for embeddings, reports and edge lists."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import IO

from .embedding import Embedding
from .routing import HostPath
from .topology import GraphKind, format_vertex, guest_edges, guest_vertices, parse_vertex
from .verify import EmbedReport

FORMAT_VERSION = "1.0"


class FormatError(ValueError):
    pass


def _check_version(doc: dict) -> None:
    version = str(doc.get("format_version", ""))
    if version.split(".")[0] != FORMAT_VERSION.split(".")[0]:
        raise FormatError(f"unsupported format_version {version!r}")


def embedding_to_dict(e: Embedding, bound: int | None = None) -> dict:
    g, h = e.guest, e.host
    doc = {
        "format_version": FORMAT_VERSION,
        "guest": str(g),
        "host": str(h),
        "map": [[format_vertex(g, v), format_vertex(h, e.map[v])] for v in guest_vertices(g)],
    }
    if bound is not None:
        doc["bound"] = bound
    if e.routes is not None:
        doc["routes"] = [
            [[format_vertex(g, u), format_vertex(g, v)], [format_vertex(h, p) for p in r.vertices]]
            for (u, v), r in e.routes.items()
        ]
    if e.notes:
        doc["notes"] = list(e.notes)
    return doc


def _moves(vertices, host_kind: str) -> tuple[int, ...]:
    """Recover generator indices from consecutive route vertices (0 if none fits)."""
    moves = []
    for a, b in zip(vertices, vertices[1:]):
        diff = [k for k in range(len(a)) if a[k] != b[k]]
        if not diff:
            moves.append(0)
        elif host_kind == "pancake":
            moves.append(diff[-1] + 1)
        else:
            moves.append(diff[-1] + 1 if diff[0] == 0 else 0)
    return tuple(moves)


def embedding_from_dict(doc: dict) -> tuple[Embedding, int | None]:
    _check_version(doc)
    try:
        g = GraphKind.parse(doc["guest"])
        h = GraphKind.parse(doc["host"])
        vmap = {parse_vertex(g, a): parse_vertex(h, b) for a, b in doc["map"]}
        routes = None
        if "routes" in doc:
            routes = {}
            for (u, v), verts in doc["routes"]:
                vs = tuple(parse_vertex(h, t) for t in verts)
                routes[(parse_vertex(g, u), parse_vertex(g, v))] = HostPath(vs, _moves(vs, h.kind), h.kind)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed embedding document: {exc}") from exc
    if not h.is_host:
        raise FormatError(f"host {h} is not a pancake or star network")
    return Embedding(g, h, vmap, routes, list(doc.get("notes", []))), doc.get("bound")


def save_embedding(e: Embedding, fh: IO[str], bound: int | None = None) -> None:
    json.dump(embedding_to_dict(e, bound), fh, indent=1)
    fh.write("\n")


def load_embedding(fh: IO[str]) -> tuple[Embedding, int | None]:
    try:
        doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not a JSON document: {exc}") from exc
    return embedding_from_dict(doc)


def report_to_dict(r: EmbedReport) -> dict:
    g, h = r.guest, r.host
    fmt = lambda v: format_vertex(g, v)  # noqa: E731
    return {
        "format_version": FORMAT_VERSION,
        "guest": str(g),
        "host": str(h),
        "dilation": r.dilation,
        "congestion": r.congestion,
        "congestion_routing": r.congestion_routing,
        "route_dilation": r.route_dilation,
        "expansion": {"numerator": r.expansion.numerator, "denominator": r.expansion.denominator},
        "histogram": {str(k): v for k, v in r.histogram.items()},
        "bound": r.bound,
        "violations": [
            {"edge": [fmt(u), fmt(v)], "measure": what, "value": value}
            for u, v, what, value in r.violations
        ],
        "fallbacks": [[fmt(u), fmt(v)] for u, v in r.fallbacks],
    }


def report_from_dict(doc: dict) -> dict:
    """Validate a report document and return it with the expansion as a Fraction."""
    _check_version(doc)
    out = dict(doc)
    exp = doc["expansion"]
    out["expansion"] = Fraction(exp["numerator"], exp["denominator"])
    out["histogram"] = {int(k): v for k, v in doc["histogram"].items()}
    return out


def histogram_csv(r: EmbedReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["hops", "edges"])
    for k, v in r.histogram.items():
        w.writerow([k, v])
    return buf.getvalue()


def edges_csv(g: GraphKind) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["u", "v"])
    for u, v in guest_edges(g):
        w.writerow([format_vertex(g, u), format_vertex(g, v)])
    return buf.getvalue()


def edges_dot(g: GraphKind) -> str:
    lines = [f'graph "{g}" {{']
    for v in guest_vertices(g):
        lines.append(f'  "{format_vertex(g, v)}";')
    for u, v in guest_edges(g):
        lines.append(f'  "{format_vertex(g, u)}" -- "{format_vertex(g, v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
