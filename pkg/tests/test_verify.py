import random

import networkx as nx
import pytest

from conftest import perms
from pancake_embed import embedding as emb
from pancake_embed.perm_core import identity, prefix_reverse, star_swap
from pancake_embed.topology import guest_edges, pancake, star
from pancake_embed.verify import (
    ResourceRefusal,
    bfs_from_identity,
    cayley_distance,
    check_generator_identity,
    check_hamiltonian,
    check_no_4cycle,
    find_4cycle,
    measure,
    pancake_adjacency,
    shortest_route,
)


def nx_host(n, kind):
    g = nx.Graph()
    step = prefix_reverse if kind == "pancake" else star_swap
    for p in perms(n):
        for i in range(2, n + 1):
            g.add_edge(p, step(p, i))
    return g


# eccentricities of the identity from networkx BFS
@pytest.mark.parametrize("kind, n, ecc", [("pancake", 3, 3), ("pancake", 4, 4), ("star", 3, 3),
                                          ("pancake", 5, 5), ("star", 5, 6)])
def test_bfs_eccentricity(kind, n, ecc):
    host = pancake(n) if kind == "pancake" else star(n)
    table = bfs_from_identity(host)
    assert table.eccentricity == ecc
    assert len(table.dist) == len(perms(n))
    assert table.dist[identity(n)] == 0


def test_bfs_matches_networkx():
    for kind in ("pancake", "star"):
        table = bfs_from_identity(pancake(5) if kind == "pancake" else star(5))
        assert table.dist == nx.single_source_shortest_path_length(nx_host(5, kind), identity(5))


def test_distance_table_is_lipschitz(tables):
    for n in range(3, 7):
        for kind in ("pancake", "star"):
            d = tables(kind, n).dist
            for u, v in guest_edges(pancake(n) if kind == "pancake" else star(n)):
                assert abs(d[u] - d[v]) <= 1


def test_cap_refusal():
    with pytest.raises(ResourceRefusal):
        bfs_from_identity(pancake(9))
    assert bfs_from_identity(pancake(4), cap=4).eccentricity == 4


def test_cayley_distance_against_direct_bfs(tables):
    table = tables("pancake", 5)
    g = nx_host(5, "pancake")
    rng = random.Random(11)
    p = (2, 4, 1, 5, 3)
    assert cayley_distance(p, p, table) == 0
    assert cayley_distance(p, prefix_reverse(p, 4), table) == 1
    for _ in range(200):
        u = tuple(rng.sample(range(1, 6), 5))
        v = tuple(rng.sample(range(1, 6), 5))
        assert cayley_distance(u, v, table) == nx.shortest_path_length(g, u, v)
    with pytest.raises(ValueError):
        cayley_distance((1, 2, 3), (1, 2, 3), table)


def test_cayley_distance_symmetric(tables):
    rng = random.Random(5)
    for kind in ("pancake", "star"):
        table = tables(kind, 6)
        for _ in range(500):
            u = tuple(rng.sample(range(1, 7), 6))
            v = tuple(rng.sample(range(1, 7), 6))
            assert cayley_distance(u, v, table) == cayley_distance(v, u, table)


def test_measure_ring(tables):
    r = measure(emb.embed_ring(4, 4), tables("pancake", 4), bound=1)
    assert (r.dilation, r.congestion, r.expansion) == (1, 1, 1)
    assert r.congestion_routing == "constructive"
    assert r.histogram == {1: 24} and r.ok


def test_measure_bounds(tables):
    r = measure(emb.embed_mixed_grid_pancake(5), tables("pancake", 5), bound=6)
    assert r.dilation <= 6 and r.ok
    r = measure(emb.embed_ghc_star(5), tables("star", 5), bound=4)
    assert r.dilation <= 4 and r.ok
    assert sum(r.histogram.values()) == len(list(guest_edges(r.guest)))
    assert r.dilation == max(r.histogram)
    assert r.route_dilation >= r.dilation and r.congestion >= 1


def test_measure_without_routes_uses_bfs_routing(tables):
    e = emb.embed_grid_nfact(4)
    r = measure(e, tables("pancake", 4))
    assert r.congestion_routing == "bfs-shortest" and r.congestion >= 1
    assert measure(e, tables("pancake", 4), bfs_congestion=False).congestion is None


def test_measure_flags_violations(tables):
    e = emb.embed_ring(4, 4)
    images = list(e.map.values())
    random.Random(0).shuffle(images)
    shuffled = emb.Embedding(e.guest, e.host, dict(zip(e.map, images)))
    r = measure(shuffled, tables("pancake", 4), bound=1)
    assert r.violations and not r.ok


def test_measure_errors(tables):
    e = emb.embed_mixed_grid_pancake(4)
    with pytest.raises(ValueError):
        measure(e, tables("star", 4))
    del e.map[(0, 0, 0)]
    with pytest.raises(ValueError, match="unmapped"):
        measure(e, tables("pancake", 4))


def test_shortest_route_is_shortest(tables):
    table = tables("star", 5)
    rng = random.Random(2)
    for _ in range(50):
        u = tuple(rng.sample(range(1, 6), 5))
        v = tuple(rng.sample(range(1, 6), 5))
        path = shortest_route(u, v, table)
        assert path[0] == u and path[-1] == v
        assert len(path) - 1 == cayley_distance(u, v, table)
        assert shortest_route(u, v, table) == path


def test_check_hamiltonian():
    assert check_hamiltonian(identity(4), 4)
    assert check_hamiltonian(identity(3), 3)
    assert check_hamiltonian((2, 3, 4, 1), 3)
    seq = list(emb.pancake_sequence(4))
    seq[5] = 2
    result = check_hamiltonian(identity(4), 4, seq)
    assert not result and result.detail
    assert not check_hamiltonian(identity(4), 2)
    assert not check_hamiltonian(identity(4), 4, seq[:-1])


def test_check_no_4cycle():
    for n in range(3, 7):
        assert check_no_4cycle(n)
    assert find_4cycle(pancake_adjacency(4)) is None
    square = {0: [1, 3], 1: [0, 2], 2: [1, 3], 3: [0, 2]}
    assert find_4cycle(square) is not None
    assert nx.girth(nx_host(4, "pancake")) == 6


def test_check_generator_identity():
    assert check_generator_identity(3)
    assert check_generator_identity(8)
    assert not check_generator_identity(5, repeats=lambda i: i)
