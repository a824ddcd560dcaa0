"""Constructive host paths for the embeddings.

Each router spells out a fixed chain of prefix reversals (pancake) or
position-1 transpositions (star) computed from block lengths.  Moves that
would reverse a prefix of length < 2, or swap position 1 with itself, are
dropped.  Every chain is checked against its target; if it misses, the router
substitutes a BFS shortest path and marks the result with ``fallback=True``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .perm_core import (
    Perm,
    compose,
    cyclic_shift_word,
    invert,
    prefix_reverse,
    star_swap,
)
from .representation import NotUnitDifference, diff3_decompose, left_count_encode, rule_r_encode
from .topology import GraphKind

log = logging.getLogger(__name__)


class NotAdjacent(ValueError):
    """The two permutations are not adjacent in the guest structure."""


@dataclass(frozen=True)
class HostPath:
    vertices: tuple[Perm, ...]
    moves: tuple[int, ...]
    host_kind: str = "pancake"
    fallback: bool = False

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def start(self) -> Perm:
        return self.vertices[0]

    @property
    def end(self) -> Perm:
        return self.vertices[-1]

    def reversed(self) -> "HostPath":
        # Both generator families are involutions.
        return HostPath(self.vertices[::-1], self.moves[::-1], self.host_kind, self.fallback)


def _apply(host_kind: str):
    return prefix_reverse if host_kind == "pancake" else star_swap


def _chain(x: Perm, moves: Sequence[int], host_kind: str) -> HostPath:
    step = _apply(host_kind)
    verts = [x]
    kept = []
    for i in moves:
        if i < 2:
            continue
        verts.append(step(verts[-1], i))
        kept.append(i)
    return HostPath(tuple(verts), tuple(kept), host_kind)


def shortest_path(x: Perm, y: Perm, host_kind: str = "pancake") -> HostPath:
    """Plain BFS between two vertices; generators tried in ascending order."""
    step = _apply(host_kind)
    n = len(x)
    parent: dict[Perm, tuple[Perm, int] | None] = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for i in range(2, n + 1):
            w = step(u, i)
            if w not in parent:
                parent[w] = (u, i)
                queue.append(w)
    verts, moves = [y], []
    while parent[verts[-1]] is not None:
        u, i = parent[verts[-1]]
        verts.append(u)
        moves.append(i)
    return HostPath(tuple(verts[::-1]), tuple(moves[::-1]), host_kind)


def _checked(path: HostPath, target: Perm, what: str) -> HostPath:
    if path.end == target:
        return path
    log.warning("%s chain from %s missed %s; using BFS path", what, path.start, target)
    bfs = shortest_path(path.start, target, path.host_kind)
    return HostPath(bfs.vertices, bfs.moves, bfs.host_kind, fallback=True)


def path_error(path: HostPath, host: GraphKind | None = None) -> str | None:
    """Describe the first invalid step of ``path``, or return None."""
    kind = host.kind if host is not None else path.host_kind
    if kind not in ("pancake", "star"):
        return f"{kind} is not a host network"
    if len(path.moves) != len(path.vertices) - 1:
        return "number of moves does not match number of vertices"
    step = _apply(kind)
    for t, (u, i) in enumerate(zip(path.vertices, path.moves)):
        if host is not None and len(u) != host.n:
            return f"step {t}: vertex {u} has wrong dimension"
        if not 2 <= i <= len(u):
            return f"step {t}: move {i} is not a generator"
        if step(u, i) != path.vertices[t + 1]:
            return f"step {t}: move {i} does not take {u} to {path.vertices[t + 1]}"
    return None


def validate_path(path: HostPath, host: GraphKind | None = None) -> bool:
    return path_error(path, host) is None


# -- cyclic shifts -------------------------------------------------------------

def route_sigma(p: Perm, ell: int, m: int) -> HostPath:
    """Path from ``p`` to ``p * sigma(ell, m)``: reverse A, reverse AB, reverse B."""
    target = compose(p, cyclic_shift_word(ell, m, len(p)))
    if m in (0, ell):
        return HostPath((p,), ())
    path = _chain(p, (ell - m, ell, m), "pancake")
    return _checked(path, target, "sigma")


def route_grid_family_step(x: Perm, k: int) -> HostPath:
    """Path from ``base * sigma(k, k-1)`` (= ``x``) to ``base * sigma(k-1, 1)``."""
    n = len(x)
    if not 3 <= k <= n:
        raise ValueError(f"block order {k} outside [3, {n}]")
    base = compose(x, invert(cyclic_shift_word(k, k - 1, n)))
    target = compose(base, cyclic_shift_word(k - 1, 1, n))
    path = _chain(x, (k - 1, k, k - 2, k - 1), "pancake")
    return _checked(path, target, "grid-family")


# -- mixed-radix grid ------------------------------------------------------------

def _mixed_grid_pair(x: Perm, y: Perm) -> tuple[Perm, Perm, bool]:
    """Order (x, y) so the first has the larger digit; report whether swapped."""
    rx, ry = left_count_encode(x), left_count_encode(y)
    diff = [t for t in range(len(rx)) if rx[t] != ry[t]]
    if len(diff) != 1 or abs(rx[diff[0]] - ry[diff[0]]) != 1:
        raise NotAdjacent(f"{x} and {y} are not adjacent in the mixed-radix grid")
    t = diff[0]
    if rx[t] > ry[t]:
        return x, y, False
    return y, x, True


def _transposition_blocks(x: Perm, y: Perm) -> tuple[int, int]:
    """Lengths of A and B in x = A u B v C, y = A v B u C."""
    pos = [k for k in range(len(x)) if x[k] != y[k]]
    if len(pos) != 2:
        raise NotAdjacent(f"{x} and {y} do not differ by a transposition")
    return pos[0], pos[1] - pos[0] - 1


def _transposition_moves(a: int, b: int) -> tuple[int, ...]:
    # A u B v C -> u A' B v C -> v B' A u C -> B v A u C -> B' v A u C
    #          -> A' v B u C -> A v B u C
    return (a + 1, a + b + 2, b + 1, b, a + b + 1, a)


def route_mixed_grid_pancake(x: Perm, y: Perm) -> HostPath:
    src, dst, swapped = _mixed_grid_pair(x, y)
    a, b = _transposition_blocks(src, dst)
    path = _checked(_chain(src, _transposition_moves(a, b), "pancake"), dst, "mixed-grid")
    return path.reversed() if swapped else path


def route_mixed_grid_star(x: Perm, y: Perm) -> HostPath:
    _mixed_grid_pair(x, y)
    a, b = _transposition_blocks(x, y)
    p1, p2 = a + 1, a + b + 2
    moves = (p2,) if p1 == 1 else (p2, p1, p2)
    return _checked(_chain(x, moves, "star"), y, "mixed-grid star")


# -- generalized hypercube ----------------------------------------------------------

def _ghc_diff(x: Perm, y: Perm):
    rx, ry = rule_r_encode(x), rule_r_encode(y)
    if sum(1 for s, t in zip(rx, ry) if s != t) != 1:
        raise NotAdjacent(f"{x} and {y} are not adjacent in the generalized hypercube")
    try:
        return diff3_decompose(x, y)
    except NotUnitDifference as exc:
        raise NotAdjacent(str(exc)) from exc


def route_ghc_pancake(x: Perm, y: Perm) -> HostPath:
    d = _ghc_diff(x, y)
    if len(d.positions) == 2:
        a, b = len(d.blocks[0]), len(d.blocks[1])
        return _checked(_chain(x, _transposition_moves(a, b), "pancake"), y, "ghc")
    src, dst = (x, y) if d.rotated_right else (y, x)
    a, b, c = (len(blk) for blk in d.blocks[:3])
    # A x B y C z D -> z C' y B' x A' D -> x B y C z A' D -> B' x y C z A' D
    # -> B x y C z A' D -> C' y x B' z A' D -> C y x B' z A' D
    # -> y C' x B' z A' D -> A z B x C y D
    whole = a + b + c + 3
    moves = (whole, b + c + 3, b + 1, b, b + c + 2, c, c + 1, whole)
    path = _checked(_chain(src, moves, "pancake"), dst, "ghc")
    return path if d.rotated_right else path.reversed()


def route_ghc_star(x: Perm, y: Perm) -> HostPath:
    d = _ghc_diff(x, y)
    if len(d.positions) == 2:
        p1, p2 = d.positions
        moves = (p2,) if p1 == 1 else (p2, p1, p2)
        return _checked(_chain(x, moves, "star"), y, "ghc star")
    src, dst = (x, y) if d.rotated_right else (y, x)
    p1, p2, p3 = d.positions
    moves = (p2, p3) if p1 == 1 else (p2, p3, p1, p2)
    path = _checked(_chain(src, moves, "star"), dst, "ghc star")
    return path if d.rotated_right else path.reversed()


ROUTERS = {
    ("mixed_grid", "pancake"): route_mixed_grid_pancake,
    ("mixed_grid", "star"): route_mixed_grid_star,
    ("ghc", "pancake"): route_ghc_pancake,
    ("ghc", "star"): route_ghc_star,
}
