"""Permutation arithmetic on one-line words.

A permutation is stored as a tuple of symbols ``(x_1, ..., x_n)`` over
``{1..n}``.  Positions and symbols are 1-based in every public function.
Composition follows ``(p*q)(k) = p(q(k))`` so that right-multiplying by the
word of a generator is the same as applying that generator to positions.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


class InvalidPermutation(ValueError):
    pass


class InvalidGenerator(ValueError):
    pass


def as_permutation(word: Iterable[int]) -> Perm:
    """Validate ``word`` and return it as a tuple."""
    p = tuple(int(s) for s in word)
    if not p:
        raise InvalidPermutation("permutation must have at least one symbol")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidPermutation(f"{p} is not a permutation of 1..{len(p)}")
    return p


def identity(n: int) -> Perm:
    if n < 1:
        raise InvalidPermutation(f"invalid dimension {n}")
    return tuple(range(1, n + 1))


def prefix_reverse(p: Perm, i: int) -> Perm:
    if not 2 <= i <= len(p):
        raise InvalidGenerator(f"prefix reversal index {i} outside [2, {len(p)}]")
    return p[i - 1::-1] + p[i:]


def star_swap(p: Perm, i: int) -> Perm:
    if not 2 <= i <= len(p):
        raise InvalidGenerator(f"star swap position {i} outside [2, {len(p)}]")
    q = list(p)
    q[0], q[i - 1] = q[i - 1], q[0]
    return tuple(q)


def compose(p: Perm, q: Perm) -> Perm:
    if len(p) != len(q):
        raise InvalidPermutation(f"dimension mismatch: {len(p)} vs {len(q)}")
    return tuple(p[k - 1] for k in q)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for pos, sym in enumerate(p, start=1):
        inv[sym - 1] = pos
    return tuple(inv)


def generator_word(i: int, n: int) -> Perm:
    """One-line word of the prefix reversal g_i in S_n."""
    return prefix_reverse(identity(n), i)


def cyclic_shift_word(ell: int, m: int, n: int) -> Perm:
    """Word of sigma(ell, m): the first ``ell`` symbols rotated right by ``m``.

    ``m == 0`` and ``m == ell`` both give the identity.
    """
    if not 0 <= m <= ell <= n or ell < 1:
        raise InvalidGenerator(f"invalid cyclic shift ell={ell}, m={m}, n={n}")
    head = list(range(ell - m + 1, ell + 1)) + list(range(1, ell - m + 1))
    return tuple(head) + tuple(range(ell + 1, n + 1))


def apply_gen_seq(p: Perm, seq: Sequence[int]) -> list[Perm]:
    """Return ``[p, p*g_{s1}, p*g_{s1}*g_{s2}, ...]``."""
    out = [p]
    for i in seq:
        p = prefix_reverse(p, i)
        out.append(p)
    return out


def parse_permutation(text: str) -> Perm:
    """Parse ``"2,7,3,5"`` or, for n <= 9, the compact form ``"2735"``."""
    text = text.strip()
    if "," in text:
        return as_permutation(int(t) for t in text.split(","))
    if not text.isdigit():
        raise InvalidPermutation(f"cannot parse permutation {text!r}")
    return as_permutation(int(c) for c in text)


def format_permutation(p: Perm) -> str:
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))
