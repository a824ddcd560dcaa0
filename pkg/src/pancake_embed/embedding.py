"""Guest-to-host vertex maps (and, where a constructive router exists, routes)."""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .perm_core import (
    Perm,
    apply_gen_seq,
    compose,
    cyclic_shift_word,
    identity,
    prefix_reverse,
)
from .representation import left_count_decode, rule_r_decode
from .routing import ROUTERS, HostPath
from .topology import (
    GraphKind,
    Vertex,
    ghc,
    grid2d,
    guest_edges,
    guest_vertices,
    host_neighbors,
    hypercube,
    line,
    mixed_grid,
    pancake,
    ring,
    star,
)


class EmbeddingError(ValueError):
    pass


@dataclass
class Embedding:
    guest: GraphKind
    host: GraphKind
    map: dict[Vertex, Perm]
    routes: dict[tuple[Vertex, Vertex], HostPath] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def expansion(self) -> Fraction:
        return Fraction(math.factorial(self.host.n), len(self.map))

    @property
    def fallbacks(self) -> list[tuple[Vertex, Vertex]]:
        if not self.routes:
            return []
        return [e for e, r in self.routes.items() if r.fallback]


def embedding_errors(e: Embedding) -> list[str]:
    """Type-invariant violations of ``e`` (empty when the embedding is sound)."""
    errors = []
    n = e.host.n
    for v in guest_vertices(e.guest):
        if v not in e.map:
            errors.append(f"guest vertex {v} unmapped")
    if len(set(e.map.values())) != len(e.map):
        errors.append("vertex map is not injective")
    for v, p in e.map.items():
        if sorted(p) != list(range(1, n + 1)):
            errors.append(f"image of {v} is not a vertex of {e.host}")
    if e.routes is not None:
        nbrs = host_neighbors(e.host)
        for (u, v), r in e.routes.items():
            if u not in e.map or v not in e.map:
                continue
            if {r.start, r.end} != {e.map[u], e.map[v]}:
                errors.append(f"route for {(u, v)} has wrong endpoints")
            for a, b in zip(r.vertices, r.vertices[1:]):
                if b not in nbrs(a):
                    errors.append(f"route for {(u, v)} steps {a} -> {b} off the host")
                    break
    return errors


# -- pancake sequence and Hamiltonian cycles --------------------------------------

@lru_cache(maxsize=None)
def _pancake_sequence(k: int) -> tuple[int, ...]:
    if k == 2:
        return (2,)
    inner = _pancake_sequence(k - 1)
    out = list(inner)
    for _ in range(k - 1):
        out.append(k)
        out.extend(inner)
    return tuple(out)


def pancake_sequence(k: int) -> list[int]:
    """G_k: k copies of G_{k-1} separated by g_k; length k! - 1."""
    if k < 2:
        raise ValueError(f"pancake sequence order {k} < 2")
    return list(_pancake_sequence(k))


def hamiltonian_cycle(start: Perm, k: int) -> list[Perm]:
    if not 3 <= k <= len(start):
        raise ValueError(f"order {k} outside [3, {len(start)}]")
    return apply_gen_seq(start, _pancake_sequence(k))


def _single_edge(a: Perm, b: Perm) -> HostPath:
    for i in range(2, len(a) + 1):
        if prefix_reverse(a, i) == b:
            return HostPath((a, b), (i,))
    raise EmbeddingError(f"{a} and {b} are not pancake-adjacent")


def _edge_routes(guest: GraphKind, vmap: dict, route: Callable) -> dict:
    return {(u, v): route(vmap[u], vmap[v]) for u, v in guest_edges(guest)}


# -- rings and lines ---------------------------------------------------------------

def embed_ring(k: int, n: int) -> Embedding:
    cycle = hamiltonian_cycle(identity(n), k)
    g = ring(len(cycle))
    vmap = dict(enumerate(cycle))
    return Embedding(g, pancake(n), vmap, _edge_routes(g, vmap, _single_edge))


def embed_line(length: int, n: int) -> Embedding:
    if not 1 <= length <= math.factorial(n):
        raise ValueError(f"line length {length} outside [1, {n}!]")
    order = apply_gen_seq(identity(n), _pancake_sequence(n))[:length]
    g = line(length)
    vmap = dict(enumerate(order))
    return Embedding(g, pancake(n), vmap, _edge_routes(g, vmap, _single_edge))


# -- two-dimensional grids -----------------------------------------------------------

def first_row(order: int, n: int) -> list[Perm]:
    """Hamiltonian path of the ``order``-pancake through the identity."""
    if order == 1:
        return [identity(n)]
    return apply_gen_seq(identity(n), _pancake_sequence(order))


def embed_grid_nfact(n: int) -> Embedding:
    """n x (n-1)! grid: node (i, j) -> pi_j * sigma(n, i)."""
    if n < 3:
        raise ValueError("grid embedding needs n >= 3")
    row = first_row(n - 1, n)
    shifts = [cyclic_shift_word(n, i, n) for i in range(n)]
    vmap = {(i, j): compose(pi, shifts[i]) for i in range(n) for j, pi in enumerate(row)}
    return Embedding(grid2d(n, len(row)), pancake(n), vmap)


def grid_family_shifts(p: int, n: int) -> list[tuple[int, int]]:
    """Row shifts (ell, m): identity row, then sigma(n, 1..n-1), ..., sigma(p+1, 1..p)."""
    if not 2 <= p <= n - 1:
        raise ValueError(f"p={p} outside [2, {n - 1}]")
    rows = [(n, 0)]
    for ell in range(n, p, -1):
        rows.extend((ell, m) for m in range(1, ell))
    return rows


def embed_grid_family(p: int, n: int) -> Embedding:
    rows = grid_family_shifts(p, n)
    cols = first_row(p, n)
    vmap = {}
    for i, (ell, m) in enumerate(rows):
        word = cyclic_shift_word(ell, m, n)
        for j, pi in enumerate(cols):
            vmap[(i, j)] = compose(pi, word)
    return Embedding(grid2d(len(rows), len(cols)), pancake(n), vmap)


# -- mixed-radix grid and generalized hypercube -----------------------------------------

def _host(kind: str, n: int) -> GraphKind:
    if kind == "pancake":
        return pancake(n)
    if kind == "star":
        return star(n)
    raise ValueError(f"unknown host kind {kind!r}")


def _label_embedding(guest: GraphKind, host_kind: str, decode, coding: str) -> Embedding:
    n = guest.n
    if n < 3:
        raise ValueError("label embeddings need n >= 3")
    vmap = {lab: decode(lab) for lab in guest_vertices(guest)}
    route = ROUTERS[(coding, host_kind)]
    return Embedding(guest, _host(host_kind, n), vmap, _edge_routes(guest, vmap, route))


def embed_mixed_grid_pancake(n: int) -> Embedding:
    return _label_embedding(mixed_grid(n), "pancake", left_count_decode, "mixed_grid")


def embed_mixed_grid_star(n: int) -> Embedding:
    return _label_embedding(mixed_grid(n), "star", left_count_decode, "mixed_grid")


def embed_ghc_pancake(n: int) -> Embedding:
    return _label_embedding(ghc(n), "pancake", rule_r_decode, "ghc")


def embed_ghc_star(n: int) -> Embedding:
    return _label_embedding(ghc(n), "star", rule_r_decode, "ghc")


def _relabel(guest: GraphKind, host_kind: str, n: int, to_label, decode, coding: str) -> Embedding:
    if n < 3:
        raise ValueError("hypercube embeddings need n >= 3")
    vmap = {b: decode(to_label(b)) for b in guest_vertices(guest)}
    route = ROUTERS[(coding, host_kind)]
    return Embedding(guest, _host(host_kind, n), vmap, _edge_routes(guest, vmap, route))


def hypercube_bits_to_mixed_label(bits: tuple[int, ...]) -> tuple[int, ...]:
    """Bit for coordinate i becomes digit a_i (values 0/1 always fit)."""
    return tuple(bits)


def embed_hypercube_via_mixed_grid(n: int, host: str = "pancake") -> Embedding:
    """Q_{n-1} as the {0,1}-corner of the 2 x 3 x ... x n grid."""
    return _relabel(hypercube(n - 1), host, n, hypercube_bits_to_mixed_label,
                    left_count_decode, "mixed_grid")


def qd_dimension(n: int) -> int:
    return sum(i.bit_length() - 1 for i in range(2, n + 1))


def hypercube_bits_to_ghc_label(bits: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Split ``bits`` into floor(lg i)-bit groups for i = 2..n, MSB first."""
    digits, t = [], 0
    for i in range(2, n + 1):
        w = i.bit_length() - 1
        v = 0
        for b in bits[t:t + w]:
            v = 2 * v + b
        digits.append(v)
        t += w
    return tuple(digits)


def embed_qd_via_ghc(n: int, host: str = "pancake") -> Embedding:
    d = qd_dimension(n)
    return _relabel(hypercube(d), host, n, lambda b: hypercube_bits_to_ghc_label(b, n),
                    rule_r_decode, "ghc")

