"""Run every embedding claim for a range of dimensions and tabulate the results."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import lru_cache

from . import embedding as emb
from .perm_core import compose, cyclic_shift_word, identity
from .representation import (
    diff3_decompose,
    left_count_decode,
    left_count_encode,
    rule_r_decode,
    rule_r_encode,
)
from .routing import route_grid_family_step, route_sigma, shortest_path, validate_path
from .topology import format_vertex, guest_vertices, mixed_grid, pancake, star
from .verify import (
    DEFAULT_CAP,
    bfs_from_identity,
    cayley_distance,
    check_generator_identity,
    check_hamiltonian,
    check_no_4cycle,
    measure,
)


@dataclass
class SuiteRow:
    claim: str
    n: int
    measured: int | str
    bound: int | str
    passed: bool
    detail: str = ""


@lru_cache(maxsize=None)
def _table(kind: str, n: int, cap: int):
    return bfs_from_identity(pancake(n) if kind == "pancake" else star(n), cap)


def _bool_row(claim: str, n: int, check) -> SuiteRow:
    return SuiteRow(claim, n, "pass" if check else "fail", "pass", bool(check), getattr(check, "detail", ""))


def _witness(e, table, value) -> str:
    for u, v in e.routes or {}:
        if cayley_distance(e.map[u], e.map[v], table) == value:
            return f"witness {format_vertex(e.guest, u)}-{format_vertex(e.guest, v)}"
    return ""


def _embedding_rows(claim: str, n: int, e, table, bound: int) -> list[SuiteRow]:
    r = measure(e, table, bound, bfs_congestion=False)
    rows = [SuiteRow(f"{claim} dilation", n, r.dilation, bound, r.dilation <= bound,
                     _witness(e, table, r.dilation))]
    if r.route_dilation is not None:
        bad = [k for k, p in e.routes.items() if not validate_path(p, e.host)]
        rows.append(SuiteRow(f"{claim} route length", n, r.route_dilation, bound,
                             r.route_dilation <= bound and not bad,
                             f"{len(bad)} invalid, {len(r.fallbacks)} BFS fallbacks"))
    return rows


def bijection_ok(n: int, encode, decode) -> bool:
    perms = list(itertools.permutations(range(1, n + 1)))
    if any(decode(encode(p)) != p for p in perms):
        return False
    labels = list(guest_vertices(mixed_grid(n)))
    return all(encode(decode(r)) == r for r in labels)


def lemma2_violations(n: int) -> int:
    """Unit rule-R neighbours whose words are not a <=3-position cyclic difference."""
    bad = 0
    for p in itertools.permutations(range(1, n + 1)):
        r = rule_r_encode(p)
        for t, i in enumerate(range(2, n + 1)):
            for a in range(r[t] + 1, i):
                q = rule_r_decode(r[:t] + (a,) + r[t + 1:])
                try:
                    d = diff3_decompose(p, q)
                    ok = d.reconstruct() == (p, q)
                except ValueError:
                    ok = False
                bad += not ok
    return bad


def sigma_route_lengths(n: int) -> tuple[int, int]:
    """Max route_sigma length overall and over m in {1, ell-1}."""
    worst = worst_edge = 0
    start = identity(n)
    for ell in range(2, n + 1):
        for m in range(1, ell):
            path = route_sigma(start, ell, m)
            if not validate_path(path) or path.end != compose(start, cyclic_shift_word(ell, m, n)):
                return 99, 99
            worst = max(worst, len(path))
            if m in (1, ell - 1):
                worst_edge = max(worst_edge, len(path))
    return worst, worst_edge


def grid_family_transition_lengths(p: int, n: int) -> int:
    """Longest constructive route across the row-block boundaries of the Thm 3 grid."""
    e = emb.embed_grid_family(p, n)
    rows = emb.grid_family_shifts(p, n)
    worst = 0
    for i in range(1, len(rows) - 1):
        ell, next_ell = rows[i][0], rows[i + 1][0]
        if next_ell != ell:
            for j in range(e.guest.params[1]):
                path = route_grid_family_step(e.map[(i, j)], ell)
                if not validate_path(path) or path.end != e.map[(i + 1, j)] or path.fallback:
                    return 99
                worst = max(worst, len(path))
    return worst


def cayley_cross_check(n: int, pairs: int, seed: int, cap: int = DEFAULT_CAP) -> int:
    """Number of sampled pairs where left-translated distance != direct BFS distance."""
    rng = random.Random(seed)
    table = _table("pancake", n, cap)
    mismatches = 0
    for _ in range(pairs):
        u = tuple(rng.sample(range(1, n + 1), n))
        v = tuple(rng.sample(range(1, n + 1), n))
        mismatches += cayley_distance(u, v, table) != len(shortest_path(u, v))
    return mismatches


def run_suite(ns, seed: int = 0, cap: int = DEFAULT_CAP, sample_pairs: int = 200) -> list[SuiteRow]:
    rows: list[SuiteRow] = []
    for n in ns:
        tp, ts = _table("pancake", n, cap), _table("star", n, cap)
        rows.append(_bool_row("Prop1 generator identity", n, check_generator_identity(n)))
        for k in range(3, n + 1):
            rows.append(_bool_row(f"Prop2 Hamiltonian k={k}", n, check_hamiltonian(identity(n), k)))
        for k in range(3, n + 1):
            r = measure(emb.embed_ring(k, n), tp, 1)
            rows.append(SuiteRow(f"Thm1 ring({math.factorial(k)}) dilation", n, r.dilation, 1, r.dilation == 1))
            rows.append(SuiteRow(f"Thm1 ring({math.factorial(k)}) congestion", n, r.congestion, 1,
                                 r.congestion == 1))
        for length in sorted({1, 7, math.factorial(n)}):
            if length > math.factorial(n):
                continue
            r = measure(emb.embed_line(length, n), tp, 1)
            ok = r.dilation <= 1 and (r.congestion or 0) <= 1
            rows.append(SuiteRow(f"Cor line({length}) dilation/congestion", n,
                                 f"{r.dilation}/{r.congestion}", "1/1", ok))
        if n <= 6:
            rows.append(_bool_row("No 4-cycle", n, check_no_4cycle(n)))
        worst, worst_edge = sigma_route_lengths(n)
        rows.append(SuiteRow("Lemma1 sigma route length", n, worst, 3, worst <= 3))
        rows.append(SuiteRow("Lemma1 sigma route length m in {1,l-1}", n, worst_edge, 2, worst_edge <= 2))
        r = measure(emb.embed_grid_nfact(n), tp, 7, bfs_congestion=False)
        rows.append(SuiteRow("Thm2 dilation", n, r.dilation, 7, r.dilation <= 7))
        for p in range(2, n):
            r = measure(emb.embed_grid_family(p, n), tp, 4, bfs_congestion=False)
            rows.append(SuiteRow(f"Thm3 dilation p={p}", n, r.dilation, 4, r.dilation <= 4,
                                 f"{len(r.violations)} edges over bound"))
            if p + 2 <= n:
                t = grid_family_transition_lengths(p, n)
                rows.append(SuiteRow(f"Thm3 transition route p={p}", n, t, 4, t <= 4))
        rows += _embedding_rows("Thm4 mixed grid->pancake", n, emb.embed_mixed_grid_pancake(n), tp, 6)
        rows += _embedding_rows("Thm5 mixed grid->star", n, emb.embed_mixed_grid_star(n), ts, 3)
        rows += _embedding_rows("Cor Q_(n-1)->pancake", n, emb.embed_hypercube_via_mixed_grid(n), tp, 6)
        rows += _embedding_rows("Thm6 GHC->pancake", n, emb.embed_ghc_pancake(n), tp, 8)
        rows += _embedding_rows("Cor Q_d->pancake", n, emb.embed_qd_via_ghc(n), tp, 8)
        rows += _embedding_rows("Thm7 GHC->star", n, emb.embed_ghc_star(n), ts, 4)
        rows.append(SuiteRow("left-count bijection", n, "pass" if bijection_ok(
            n, left_count_encode, left_count_decode) else "fail", "pass",
            bijection_ok(n, left_count_encode, left_count_decode)))
        rr = bijection_ok(n, rule_r_encode, rule_r_decode)
        rows.append(SuiteRow("rule-R bijection", n, "pass" if rr else "fail", "pass", rr))
        if n <= 6:
            bad = lemma2_violations(n)
            rows.append(SuiteRow("Lemma2 unit rule-R difference", n, bad, 0, bad == 0, "violating pairs"))
        mism = cayley_cross_check(n, sample_pairs, seed + n, cap)
        rows.append(SuiteRow("Cayley distance vs BFS", n, mism, 0, mism == 0, f"{sample_pairs} seeded pairs"))
    return rows
