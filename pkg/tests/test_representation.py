import pytest
from hypothesis import given, strategies as st

from conftest import permutations_of, perms
from pancake_embed.perm_core import parse_permutation as P
from pancake_embed.representation import (
    InvalidLabel,
    NotUnitDifference,
    diff3_decompose,
    left_count_decode,
    left_count_encode,
    rule_r_decode,
    rule_r_encode,
)
from pancake_embed.topology import ghc, guest_vertices, parse_label as L


def labels(n):
    return list(guest_vertices(ghc(n)))


@pytest.mark.parametrize("word, label", [("12345", "1234"), ("54321", "0000"), ("42153", "0203")])
def test_left_count_worked_values(word, label):
    assert left_count_encode(P(word)) == L(label)
    assert left_count_decode(L(label)) == P(word)


def test_rule_r_worked_values():
    assert rule_r_encode(P("27351864")) == L("0200353")
    assert rule_r_decode(L("0200353")) == P("27351864")
    assert rule_r_encode(P("12345678")) == L("1234567")
    assert rule_r_decode(L("1234567")) == P("12345678")
    # hand trace: 321 -> a_3 = 0, swap 1 and 3 -> 123, a_2 = 1
    assert rule_r_encode(P("321")) == L("10")


def _left_count_oracle(p):
    return tuple(sum(1 for s in p[: p.index(i)] if s < i) for i in range(2, len(p) + 1))


@given(permutations_of(2, 9))
def test_left_count_matches_definition(p):
    assert left_count_encode(p) == _left_count_oracle(p)


@pytest.mark.parametrize("encode, decode", [(left_count_encode, left_count_decode),
                                            (rule_r_encode, rule_r_decode)])
def test_bijection_exhaustive(encode, decode):
    for n in range(2, 8):
        for p in perms(n):
            assert decode(encode(p)) == p
        for r in labels(n):
            assert encode(decode(r)) == r


def test_rule_r_decode_distinct_n4():
    assert len({rule_r_decode(r) for r in labels(4)}) == 24


@pytest.mark.parametrize("decode", [left_count_decode, rule_r_decode])
def test_decode_rejects_out_of_range(decode):
    with pytest.raises(InvalidLabel):
        decode((2, 0, 0))


def test_diff3_transposition():
    d = diff3_decompose(P("12345"), P("14325"))
    assert d.positions == (2, 4)
    assert d.symbols_x == (2, 4) and d.symbols_y == (4, 2)
    assert d.reconstruct() == (P("12345"), P("14325"))


def test_diff3_three_positions():
    x, y = P("1234567"), P("1632547")
    d = diff3_decompose(x, y)
    assert d.positions == (2, 4, 6)
    assert d.blocks == ((1,), (3,), (5,), (7,))
    assert d.rotated_right
    assert d.reconstruct() == (x, y)
    assert not diff3_decompose(y, x).rotated_right


@pytest.mark.parametrize("x, y", [("12345", "21435"), ("12345", "12345"), ("123456", "234516")])
def test_diff3_rejects(x, y):
    with pytest.raises(NotUnitDifference):
        diff3_decompose(P(x), P(y))


def test_lemma2_unit_digit_change_moves_at_most_three_symbols():
    for n in range(3, 7):
        for p in perms(n):
            r = rule_r_encode(p)
            for t, i in enumerate(range(2, n + 1)):
                for a in range(i):
                    if a == r[t]:
                        continue
                    q = rule_r_decode(r[:t] + (a,) + r[t + 1:])
                    assert sum(u != v for u, v in zip(p, q)) <= 3
                    assert diff3_decompose(p, q).reconstruct() == (p, q)


def test_left_count_unit_change_is_block_swap():
    # A x B i C <-> A i B x C with every symbol of B larger than i
    for n in range(3, 7):
        for p in perms(n):
            r = left_count_encode(p)
            for t, i in enumerate(range(2, n + 1)):
                if r[t] == 0:
                    continue
                q = left_count_decode(r[:t] + (r[t] - 1,) + r[t + 1:])
                diff = [k for k in range(n) if p[k] != q[k]]
                assert len(diff) == 2
                a, b = diff
                assert p[b] == i and q[a] == i and p[a] == q[b] < i
                assert all(s > i for s in p[a + 1:b])


@given(st.integers(2, 9).flatmap(
    lambda n: st.tuples(*[st.integers(0, i - 1) for i in range(2, n + 1)])))
def test_label_round_trip_property(r):
    assert rule_r_encode(rule_r_decode(r)) == r
    assert left_count_encode(left_count_decode(r)) == r
