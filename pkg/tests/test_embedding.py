import math
from fractions import Fraction

import pytest

from pancake_embed import embedding as emb
from pancake_embed.perm_core import compose, cyclic_shift_word, identity, prefix_reverse
from pancake_embed.perm_core import parse_permutation as P
from pancake_embed.topology import (
    ghc,
    guest_edges,
    mixed_grid,
    pancake_neighbors,
    parse_label as L,
    subpancake_of,
)
from pancake_embed.representation import left_count_encode, rule_r_decode, rule_r_encode

PAPER_P4_ORDER = (
    "1234 2134 3124 1324 2314 3214 4123 1423 2413 4213 1243 2143 "
    "3412 4312 1342 3142 4132 1432 2341 3241 4231 2431 3421 4321"
).split()


def test_pancake_sequence():
    assert emb.pancake_sequence(2) == [2]
    assert emb.pancake_sequence(3) == [2, 3, 2, 3, 2]
    for k in range(2, 8):
        assert len(emb.pancake_sequence(k)) == math.factorial(k) - 1
    with pytest.raises(ValueError):
        emb.pancake_sequence(1)


def test_hamiltonian_cycle_matches_paper_order():
    assert emb.hamiltonian_cycle(identity(4), 4) == [P(w) for w in PAPER_P4_ORDER]
    assert emb.hamiltonian_cycle(P("123"), 3) == [P(w) for w in "123 213 312 132 231 321".split()]


def test_hamiltonian_cycle_inside_subpancake():
    cyc = emb.hamiltonian_cycle(P("2341"), 3)
    assert len(set(cyc)) == 6
    assert {subpancake_of(p) for p in cyc} == {1}
    assert prefix_reverse(cyc[-1], 3) == cyc[0]
    with pytest.raises(ValueError):
        emb.hamiltonian_cycle(P("1234"), 2)


def test_ring_embedding():
    e = emb.embed_ring(3, 4)
    assert list(e.map.values()) == [P(w) for w in "1234 2134 3124 1324 2314 3214".split()]
    assert e.expansion == 4
    full = emb.embed_ring(4, 4)
    assert [full.map[j] for j in range(24)] == [P(w) for w in PAPER_P4_ORDER]
    assert full.expansion == 1
    for n in range(3, 7):
        for k in range(3, n + 1):
            e = emb.embed_ring(k, n)
            assert not emb.embedding_errors(e)
            used = [tuple(sorted((r.start, r.end))) for r in e.routes.values()]
            assert all(len(r) == 1 for r in e.routes.values())
            assert len(used) == len(set(used))


def test_line_embedding():
    assert [emb.embed_line(24, 4).map[j] for j in range(24)] == [P(w) for w in PAPER_P4_ORDER]
    single = emb.embed_line(1, 4)
    assert single.map == {0: identity(4)} and single.routes == {}
    assert list(emb.embed_line(7, 4).map.values()) == [P(w) for w in PAPER_P4_ORDER[:7]]
    with pytest.raises(ValueError):
        emb.embed_line(25, 4)


def test_grid_nfact():
    e = emb.embed_grid_nfact(4)
    assert e.guest.params == (4, 6)
    assert e.map[(0, 0)] == identity(4)
    assert e.map[(1, 0)] == P("4123")
    for n in (3, 4, 5):
        e = emb.embed_grid_nfact(n)
        assert len(set(e.map.values())) == n * math.factorial(n - 1)
        assert {p[-1] for j, p in enumerate(e.map[(0, j)] for j in range(e.guest.params[1]))} == {n}
    with pytest.raises(ValueError):
        emb.embed_grid_nfact(2)


def test_grid_family_shapes():
    e = emb.embed_grid_family(2, 4)
    assert e.guest.params == (6, 2)
    assert len(set(e.map.values())) == 12
    row0 = [e.map[(0, j)] for j in range(2)]
    assert [e.map[(4, j)] for j in range(2)] == [compose(pi, cyclic_shift_word(3, 1, 4)) for pi in row0]
    for n in (4, 5, 6):
        assert emb.embed_grid_family(n - 1, n).map == emb.embed_grid_nfact(n).map
        for p in range(2, n):
            e = emb.embed_grid_family(p, n)
            assert e.guest.params == (1 + sum(k - 1 for k in range(p + 1, n + 1)), math.factorial(p))
            assert not emb.embedding_errors(e)
    with pytest.raises(ValueError):
        emb.embed_grid_family(4, 4)


def test_mixed_grid_embeddings():
    e = emb.embed_mixed_grid_pancake(5)
    assert e.map[L("1234")] == P("12345")
    assert e.map[L("0000")] == P("54321")
    assert e.expansion == 1
    s = emb.embed_mixed_grid_star(5)
    assert s.map[L("0203")] == P("42153")
    assert s.map[L("1234")] == identity(5)
    assert len(set(s.map.values())) == 120


def test_hypercube_via_mixed_grid():
    e = emb.embed_hypercube_via_mixed_grid(5)
    assert e.guest.params == (4,)
    assert e.map[(0, 0, 0, 0)] == P("54321")
    assert left_count_encode(e.map[(1, 0, 0, 0)]) == L("1000")
    q3 = emb.embed_hypercube_via_mixed_grid(4)
    assert len(set(q3.map.values())) == 8 and q3.expansion == 3
    grid_edges = set(guest_edges(mixed_grid(5)))
    for u, v in guest_edges(e.guest):
        a, b = left_count_encode(e.map[u]), left_count_encode(e.map[v])
        assert (a, b) in grid_edges or (b, a) in grid_edges


def test_ghc_embeddings():
    assert rule_r_decode(L("0200353")) == P("27351864")
    assert emb.embed_ghc_pancake(5).expansion == 1
    assert len(set(emb.embed_ghc_star(5).map.values())) == 120
    assert emb.embed_ghc_pancake(4).map[L("123")] == identity(4)
    assert emb.embed_ghc_star(4).map[L("123")] == identity(4)


def test_qd_via_ghc():
    assert emb.qd_dimension(4) == 4
    assert emb.qd_dimension(5) == 6
    e = emb.embed_qd_via_ghc(4)
    assert e.expansion == Fraction(24, 16)
    e5 = emb.embed_qd_via_ghc(5)
    assert len(set(e5.map.values())) == 64
    assert emb.hypercube_bits_to_ghc_label((0,) * 6, 5) == (0, 0, 0, 0)
    assert emb.hypercube_bits_to_ghc_label((1, 1, 1, 0, 0, 1), 5) == (1, 1, 2, 1)
    ghc_edges = set(guest_edges(ghc(5)))
    for u, v in guest_edges(e5.guest):
        a, b = rule_r_encode(e5.map[u]), rule_r_encode(e5.map[v])
        assert (a, b) in ghc_edges or (b, a) in ghc_edges


ALL_BUILDERS = [
    lambda n: emb.embed_grid_nfact(n),
    lambda n: emb.embed_mixed_grid_pancake(n),
    lambda n: emb.embed_mixed_grid_star(n),
    lambda n: emb.embed_ghc_pancake(n),
    lambda n: emb.embed_ghc_star(n),
    lambda n: emb.embed_hypercube_via_mixed_grid(n),
    lambda n: emb.embed_qd_via_ghc(n),
    lambda n: emb.embed_line(math.factorial(n), n),
]


@pytest.mark.parametrize("build", ALL_BUILDERS)
def test_embedding_invariants(build):
    for n in (3, 4, 5, 6):
        assert emb.embedding_errors(build(n)) == []


def test_embedding_errors_detects_problems():
    e = emb.embed_ring(3, 3)
    e.map[1] = e.map[0]
    assert any("injective" in err for err in emb.embedding_errors(e))
    e = emb.embed_mixed_grid_pancake(4)
    del e.map[L("000")]
    assert any("unmapped" in err for err in emb.embedding_errors(e))


def _guest_squares(e):
    for a in e.map:
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                b = a[:i] + (a[i] + 1,) + a[i + 1:]
                c = a[:j] + (a[j] + 1,) + a[j + 1:]
                d = b[:j] + (b[j] + 1,) + b[j + 1:]
                if b in e.map and c in e.map and d in e.map:
                    yield a, b, d, c


@pytest.mark.parametrize("build", [emb.embed_grid_nfact, emb.embed_mixed_grid_pancake,
                                   emb.embed_ghc_pancake])
def test_no_guest_square_lands_on_a_host_square(build):
    for n in (4, 5):
        e = build(n)
        squares = list(_guest_squares(e))
        assert squares
        for square in squares:
            img = [e.map[c] for c in square]
            assert not all(img[(t + 1) % 4] in pancake_neighbors(img[t]) for t in range(4))
