"""Exhaustive measurement of host distances and embedding quality."""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import Embedding, _pancake_sequence
from .perm_core import Perm, apply_gen_seq, compose, identity, invert, prefix_reverse
from .topology import GraphKind, guest_edges, host_neighbors, pancake

DEFAULT_CAP = 8


class ResourceRefusal(RuntimeError):
    """Requested host is larger than the configured dimension cap."""


@dataclass(frozen=True)
class DistanceTable:
    host: GraphKind
    source: Perm
    dist: dict[Perm, int]

    @property
    def eccentricity(self) -> int:
        return max(self.dist.values())


def bfs_from_identity(host: GraphKind, cap: int = DEFAULT_CAP) -> DistanceTable:
    if host.n > cap:
        raise ResourceRefusal(f"{host} exceeds dimension cap {cap}; raise the cap explicitly")
    nbrs = host_neighbors(host)
    src = identity(host.n)
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in nbrs(u):
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return DistanceTable(host, src, dist)


def cayley_distance(u: Perm, v: Perm, table: DistanceTable) -> int:
    """Host distance via left translation: d(u, v) = d(I, u^-1 v)."""
    if len(u) != table.host.n or len(v) != table.host.n:
        raise ValueError(f"permutations do not belong to {table.host}")
    return table.dist[compose(invert(u), v)]


def shortest_route(u: Perm, v: Perm, table: DistanceTable) -> list[Perm]:
    """Deterministic shortest path: always step to the smallest closer neighbour."""
    nbrs = host_neighbors(table.host)
    path = [u]
    d = cayley_distance(u, v, table)
    while d:
        u = min(w for w in nbrs(u) if cayley_distance(w, v, table) == d - 1)
        path.append(u)
        d -= 1
    return path


@dataclass
class EmbedReport:
    guest: GraphKind
    host: GraphKind
    dilation: int
    congestion: int | None
    expansion: Fraction
    histogram: dict[int, int]
    violations: list[tuple] = field(default_factory=list)
    congestion_routing: str | None = None
    route_dilation: int | None = None
    fallbacks: list[tuple] = field(default_factory=list)
    bound: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def _edge_load(paths) -> int:
    load: Counter = Counter()
    for path in paths:
        for a, b in zip(path, path[1:]):
            load[(a, b) if a < b else (b, a)] += 1
    return max(load.values(), default=0)


def measure(
    e: Embedding,
    table: DistanceTable,
    bound: int | None = None,
    bfs_congestion: bool = True,
) -> EmbedReport:
    """Dilation from exact host distances; congestion from the embedding's routes.

    Embeddings without routes get congestion under :func:`shortest_route`
    (``congestion_routing == "bfs-shortest"``) unless ``bfs_congestion`` is off.
    """
    if table.host != e.host:
        raise ValueError(f"distance table is for {table.host}, embedding host is {e.host}")
    hist: Counter = Counter()
    violations = []
    edges = list(guest_edges(e.guest))
    for u, v in edges:
        try:
            d = cayley_distance(e.map[u], e.map[v], table)
        except KeyError as exc:
            raise ValueError(f"guest vertex {exc.args[0]} is unmapped") from None
        hist[d] += 1
        if bound is not None and d > bound:
            violations.append((u, v, "distance", d))
    congestion = routing = route_dil = None
    if e.routes is not None:
        routes = [e.routes[edge] for edge in edges]
        congestion, routing = _edge_load(r.vertices for r in routes), "constructive"
        route_dil = max((len(r) for r in routes), default=0)
        if bound is not None:
            violations += [(u, v, "route", len(r)) for (u, v), r in zip(edges, routes) if len(r) > bound]
    elif bfs_congestion:
        routes = [shortest_route(e.map[u], e.map[v], table) for u, v in edges]
        congestion, routing = _edge_load(routes), "bfs-shortest"
    return EmbedReport(
        guest=e.guest,
        host=e.host,
        dilation=max(hist, default=0),
        congestion=congestion,
        expansion=e.expansion,
        histogram=dict(sorted(hist.items())),
        violations=violations,
        congestion_routing=routing,
        route_dilation=route_dil,
        fallbacks=e.fallbacks,
        bound=bound,
    )


@dataclass(frozen=True)
class Check:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_hamiltonian(start: Perm, k: int, seq=None) -> Check:
    """Check that ``(start, G_k)`` (or ``seq``) is a Hamiltonian cycle of the k-pancake."""
    n = len(start)
    if not 3 <= k <= n:
        return Check(False, f"order {k} outside [3, {n}]")
    seq = _pancake_sequence(k) if seq is None else seq
    try:
        order = apply_gen_seq(start, seq)
    except ValueError as exc:
        return Check(False, str(exc))
    if len(order) != math.factorial(k):
        return Check(False, f"{len(order)} entries, expected {math.factorial(k)}")
    if len(set(order)) != len(order):
        return Check(False, "repeated vertex")
    tail = start[k:]
    members = {p[:k] for p in order}
    if any(p[k:] != tail for p in order) or members != set(itertools.permutations(start[:k])):
        return Check(False, "entries do not cover the k-pancake containing start")
    if prefix_reverse(order[-1], k) != start:
        return Check(False, f"closing edge {order[-1]} -> {start} is not g_{k}")
    # Each (k-1)-subpancake, identified by the symbol at position k, is one run.
    runs = [p[k - 1] for p in order]
    changes = sum(1 for a, b in zip(runs, runs[1:]) if a != b)
    if changes != k - 1 or len(set(runs)) != k:
        return Check(False, "subpancake visits are not contiguous")
    return Check(True)


def check_no_4cycle(n: int) -> Check:
    """No two distinct generator pairs (g_i, g_k), i != k, have the same product."""
    if n > 6:
        return Check(False, "generator-product check limited to n <= 6")
    seen: dict[Perm, tuple[int, int]] = {}
    for i in range(2, n + 1):
        for k in range(2, n + 1):
            if i == k:
                continue
            prod = prefix_reverse(prefix_reverse(identity(n), i), k)
            if prod in seen:
                return Check(False, f"g_{i} g_{k} = g_{seen[prod][0]} g_{seen[prod][1]}")
            seen[prod] = (i, k)
    return Check(True)


def find_4cycle(adjacency: dict) -> tuple | None:
    """Brute-force search for a 4-cycle in an explicit adjacency map."""
    for u, nu in adjacency.items():
        for a, b in itertools.combinations(sorted(nu), 2):
            common = (set(adjacency[a]) & set(adjacency[b])) - {u}
            if common:
                return u, a, min(common), b
    return None


def check_generator_identity(n: int, repeats=None) -> Check:
    """(g_i g_{i+1}) applied i+1 times returns to the start, for every i in [2, n-1].

    ``repeats`` overrides the repetition count (a function of i) for negative controls.
    """
    if n < 3:
        return Check(False, "needs n >= 3")
    start = identity(n)
    for i in range(2, n):
        reps = i + 1 if repeats is None else repeats(i)
        end = apply_gen_seq(start, (i, i + 1) * reps)[-1]
        if end != start:
            return Check(False, f"i={i}: ended at {end}")
    return Check(True)


def pancake_adjacency(n: int) -> dict[Perm, list[Perm]]:
    nbrs = host_neighbors(pancake(n))
    return {p: nbrs(p) for p in itertools.permutations(range(1, n + 1))}
