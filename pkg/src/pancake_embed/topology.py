"""Implicit host and guest graphs.

Hosts (pancake, star) are Cayley graphs on S_n and are never materialized;
guests are small enough that vertex and edge enumeration is done on demand.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Hashable, Iterator

from .perm_core import (
    Perm,
    format_permutation,
    parse_permutation,
    prefix_reverse,
    star_swap,
)

Vertex = Hashable

_ARITY = {
    "pancake": 1,
    "star": 1,
    "ring": 1,
    "line": 1,
    "grid2d": 2,
    "mixed_grid": 1,
    "hypercube": 1,
    "ghc": 1,
}
_MINIMA = {
    "pancake": (2,),
    "star": (2,),
    "ring": (3,),
    "line": (1,),
    "grid2d": (1, 1),
    "mixed_grid": (2,),
    "hypercube": (1,),
    "ghc": (2,),
}


class InvalidGraph(ValueError):
    pass


@dataclass(frozen=True)
class GraphKind:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise InvalidGraph(f"unknown graph kind {self.kind!r}")
        if len(self.params) != _ARITY[self.kind]:
            raise InvalidGraph(f"{self.kind} takes {_ARITY[self.kind]} parameter(s)")
        for value, low in zip(self.params, _MINIMA[self.kind]):
            if value < low:
                raise InvalidGraph(f"{self} requires parameters >= {_MINIMA[self.kind]}")

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"

    @classmethod
    def parse(cls, text: str) -> "GraphKind":
        m = re.fullmatch(r"\s*(\w+)\((\s*\d+\s*(?:,\s*\d+\s*)*)\)\s*", text)
        if not m:
            raise InvalidGraph(f"cannot parse graph kind {text!r}")
        return cls(m.group(1), tuple(int(v) for v in m.group(2).split(",")))

    @property
    def is_host(self) -> bool:
        return self.kind in ("pancake", "star")

    @property
    def n(self) -> int:
        return self.params[0]


def pancake(n: int) -> GraphKind:
    return GraphKind("pancake", (n,))


def star(n: int) -> GraphKind:
    return GraphKind("star", (n,))


def ring(size: int) -> GraphKind:
    return GraphKind("ring", (size,))


def line(length: int) -> GraphKind:
    return GraphKind("line", (length,))


def grid2d(rows: int, cols: int) -> GraphKind:
    return GraphKind("grid2d", (rows, cols))


def mixed_grid(n: int) -> GraphKind:
    return GraphKind("mixed_grid", (n,))


def hypercube(d: int) -> GraphKind:
    return GraphKind("hypercube", (d,))


def ghc(n: int) -> GraphKind:
    return GraphKind("ghc", (n,))


# -- host adjacency ---------------------------------------------------------

def pancake_neighbors(p: Perm) -> list[Perm]:
    if len(p) < 2:
        raise InvalidGraph("pancake needs n >= 2")
    return [prefix_reverse(p, i) for i in range(2, len(p) + 1)]


def star_neighbors(p: Perm) -> list[Perm]:
    if len(p) < 2:
        raise InvalidGraph("star needs n >= 2")
    return [star_swap(p, i) for i in range(2, len(p) + 1)]


def host_neighbors(host: GraphKind):
    """Adjacency function for a host kind."""
    if host.kind == "pancake":
        return pancake_neighbors
    if host.kind == "star":
        return star_neighbors
    raise InvalidGraph(f"{host} is not a host network")


def subpancake_of(p: Perm) -> int:
    """Last symbol of ``p``; identifies the (n-1)-subpancake containing it."""
    return p[-1]


# -- vertex and edge enumeration -------------------------------------------

def label_ranges(n: int) -> list[range]:
    """Digit ranges of a_2..a_n: a_i in [0, i-1]."""
    return [range(i) for i in range(2, n + 1)]


def vertex_count(g: GraphKind) -> int:
    k, ps = g.kind, g.params
    if k in ("pancake", "star", "mixed_grid", "ghc"):
        return math.factorial(ps[0])
    if k in ("ring", "line"):
        return ps[0]
    if k == "grid2d":
        return ps[0] * ps[1]
    return 2 ** ps[0]


def guest_vertices(g: GraphKind) -> Iterator[Vertex]:
    k, ps = g.kind, g.params
    if k in ("pancake", "star"):
        yield from itertools.permutations(range(1, ps[0] + 1))
    elif k in ("ring", "line"):
        yield from range(ps[0])
    elif k == "grid2d":
        yield from itertools.product(range(ps[0]), range(ps[1]))
    elif k in ("mixed_grid", "ghc"):
        yield from itertools.product(*label_ranges(ps[0]))
    elif k == "hypercube":
        yield from itertools.product((0, 1), repeat=ps[0])


def _edge(u, v):
    return (u, v) if u <= v else (v, u)


def guest_edges(g: GraphKind) -> Iterator[tuple[Vertex, Vertex]]:
    """Each undirected edge once, smaller endpoint first."""
    k, ps = g.kind, g.params
    if k in ("pancake", "star"):
        nbrs = host_neighbors(g)
        for p in guest_vertices(g):
            for q in nbrs(p):
                if p < q:
                    yield p, q
    elif k == "ring":
        for j in range(ps[0]):
            yield _edge(j, (j + 1) % ps[0])
    elif k == "line":
        for j in range(ps[0] - 1):
            yield j, j + 1
    elif k == "grid2d":
        rows, cols = ps
        for r, c in guest_vertices(g):
            if c + 1 < cols:
                yield (r, c), (r, c + 1)
            if r + 1 < rows:
                yield (r, c), (r + 1, c)
    elif k == "mixed_grid":
        for lab in guest_vertices(g):
            for pos, i in enumerate(range(2, ps[0] + 1)):
                if lab[pos] + 1 < i:
                    yield lab, lab[:pos] + (lab[pos] + 1,) + lab[pos + 1:]
    elif k == "ghc":
        for lab in guest_vertices(g):
            for pos, i in enumerate(range(2, ps[0] + 1)):
                for v in range(lab[pos] + 1, i):
                    yield lab, lab[:pos] + (v,) + lab[pos + 1:]
    elif k == "hypercube":
        for bits in guest_vertices(g):
            for pos, b in enumerate(bits):
                if b == 0:
                    yield bits, bits[:pos] + (1,) + bits[pos + 1:]


def edge_count(g: GraphKind) -> int:
    return sum(1 for _ in guest_edges(g))


# -- textual forms ------------------------------------------------------------

def format_label(digits: tuple[int, ...]) -> str:
    if all(d <= 9 for d in digits) and len(digits) <= 9:
        return "".join(map(str, digits))
    return ",".join(map(str, digits))


def parse_label(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse label {text!r}")
    return tuple(int(c) for c in text)


def format_vertex(g: GraphKind, v: Vertex) -> str:
    k = g.kind
    if k in ("pancake", "star"):
        return format_permutation(v)
    if k in ("ring", "line"):
        return str(v)
    if k == "grid2d":
        return f"{v[0]}:{v[1]}"
    if k == "hypercube":
        return "".join(map(str, v))
    return format_label(v)


def parse_vertex(g: GraphKind, text: str) -> Vertex:
    k = g.kind
    if k in ("pancake", "star"):
        p = parse_permutation(text)
        if len(p) != g.n:
            raise ValueError(f"{text!r} is not a vertex of {g}")
        return p
    if k in ("ring", "line"):
        v = int(text)
        if not 0 <= v < g.params[0]:
            raise ValueError(f"{text!r} is not a vertex of {g}")
        return v
    if k == "grid2d":
        r, c = (int(t) for t in text.split(":"))
        if not (0 <= r < g.params[0] and 0 <= c < g.params[1]):
            raise ValueError(f"{text!r} is not a vertex of {g}")
        return r, c
    if k == "hypercube":
        bits = tuple(int(c) for c in text.strip())
        if len(bits) != g.params[0] or set(bits) - {0, 1}:
            raise ValueError(f"{text!r} is not a vertex of {g}")
        return bits
    lab = parse_label(text)
    if len(lab) != g.n - 1 or any(not 0 <= a < i for a, i in zip(lab, range(2, g.n + 1))):
        raise ValueError(f"{text!r} is not a vertex of {g}")
    return lab
