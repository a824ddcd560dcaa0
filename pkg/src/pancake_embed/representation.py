"""Mixed-radix codings of permutations.

Both codings map S_n onto labels ``(a_2, ..., a_n)`` with ``0 <= a_i <= i-1``.
Labels are plain tuples; ``label[i - 2]`` holds ``a_i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm_core import Perm, identity

Label = tuple[int, ...]


class InvalidLabel(ValueError):
    pass


class NotUnitDifference(ValueError):
    """Raised when two words are not related by a single rule-R digit change."""


def check_label(r: Label) -> Label:
    r = tuple(r)
    for i, a in enumerate(r, start=2):
        if not 0 <= a <= i - 1:
            raise InvalidLabel(f"digit a_{i}={a} outside [0, {i - 1}]")
    return r


def left_count_encode(p: Perm) -> Label:
    """a_i = number of symbols smaller than i to the left of i."""
    seen: set[int] = set()
    digits = [0] * (len(p) - 1)
    for s in p:
        if s >= 2:
            digits[s - 2] = sum(1 for t in seen if t < s)
        seen.add(s)
    return tuple(digits)


def left_count_decode(r: Label) -> Perm:
    r = check_label(r)
    # Insert symbols in increasing order; symbol i goes after exactly a_i of
    # the smaller symbols already placed.
    word = [1]
    for i, a in enumerate(r, start=2):
        word.insert(a, i)
    return tuple(word)


def rule_r_encode(p: Perm) -> Label:
    x = list(p)
    where = {s: k for k, s in enumerate(x, start=1)}
    digits = [0] * (len(x) - 1)
    for k in range(len(x), 1, -1):
        s = x[k - 1]
        digits[k - 2] = s - 1
        if s != k:
            j = where[k]
            x[k - 1], x[j - 1] = k, s
            where[k], where[s] = k, j
    return tuple(digits)


def rule_r_decode(r: Label) -> Perm:
    r = check_label(r)
    x = list(identity(len(r) + 1))
    where = {s: s for s in x}
    for k, a in enumerate(r, start=2):
        s = a + 1
        if s != k:
            i, j = where[s], where[k]
            x[i - 1], x[j - 1] = k, s
            where[s], where[k] = j, i
    return tuple(x)


@dataclass(frozen=True)
class Diff3:
    """Two words X, Y that agree outside ``positions``.

    Three positions: X = A x B y C z D and Y = A z B x C y D, or the
    opposite rotation Y = A y B z C x D (see ``rotated_right``).
    Two positions: X = A x B y C and Y = A y B x C (``symbols_x[2]`` absent).
    ``blocks`` are the segments A, B, C, D as tuples (D empty for two positions).
    """

    positions: tuple[int, ...]
    symbols_x: tuple[int, ...]
    symbols_y: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def rotated_right(self) -> bool:
        """True when Y carries X's differing symbols shifted one slot right."""
        sx, sy = self.symbols_x, self.symbols_y
        return sy == sx[-1:] + sx[:-1]

    def reconstruct(self) -> tuple[Perm, Perm]:
        x: list[int] = []
        y: list[int] = []
        for blk, sx, sy in zip(self.blocks, self.symbols_x + (None,), self.symbols_y + (None,)):
            x += blk
            y += blk
            if sx is not None:
                x.append(sx)
                y.append(sy)
        return tuple(x), tuple(y)


def diff3_decompose(x: Perm, y: Perm) -> Diff3:
    if len(x) != len(y):
        raise NotUnitDifference("dimension mismatch")
    pos = tuple(k for k in range(1, len(x) + 1) if x[k - 1] != y[k - 1])
    if len(pos) not in (2, 3) or sorted(x[k - 1] for k in pos) != sorted(y[k - 1] for k in pos):
        raise NotUnitDifference(f"{x} and {y} are not a rule-R unit difference")
    cuts = (0,) + pos + (len(x) + 1,)
    blocks = tuple(tuple(x[cuts[t]:cuts[t + 1] - 1]) for t in range(len(cuts) - 1))
    return Diff3(
        positions=pos,
        symbols_x=tuple(x[k - 1] for k in pos),
        symbols_y=tuple(y[k - 1] for k in pos),
        blocks=blocks,
    )
