"""Graded Betti tables: convolution under tensor products and text diagrams."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

CELL = 6


class BettiError(ValueError):
    pass


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers keyed by (homological index, internal degree)."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, data: Mapping[tuple[int, int], int]) -> "BettiTable":
        clean = {}
        for (i, j), v in data.items():
            if i < 0 or j < 0 or v < 0:
                raise BettiError(f"negative index or value at ({i}, {j})")
            if v:
                clean[(int(i), int(j))] = int(v)
        return cls(tuple(sorted(clean.items())))

    @classmethod
    def unit(cls) -> "BettiTable":
        return cls.from_dict({(0, 0): 1})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.as_dict().get(ij, 0)


def tensor(a: BettiTable, b: BettiTable) -> BettiTable:
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (i1, j1), v1 in a.entries:
        for (i2, j2), v2 in b.entries:
            out[(i1 + i2, j1 + j2)] += v1 * v2
    return BettiTable.from_dict(out)


def totals(b: BettiTable) -> tuple[int, ...]:
    if not b.entries:
        return ()
    out = [0] * (projective_dimension(b) + 1)
    for (i, _), v in b.entries:
        out[i] += v
    return tuple(out)


def projective_dimension(b: BettiTable) -> int:
    return max((i for (i, _), _ in b.entries), default=0)


def regularity(b: BettiTable) -> int:
    return max((j - i for (i, j), _ in b.entries), default=0)


def render(b: BettiTable) -> str:
    """Diagram with one column per homological index and row ``r`` holding ``beta_{i,i+r}``."""
    pd = projective_dimension(b)
    low = min((j - i for (i, j), _ in b.entries), default=0)
    table = b.as_dict()
    cols = range(pd + 1)
    rule = "-" * (CELL * (pd + 2))
    lines = [" " * CELL + "".join(f"{i:>{CELL}}" for i in cols), rule]
    for r in range(low, regularity(b) + 1):
        cells = "".join(f"{table.get((i, i + r), 0) or '-':>{CELL}}" for i in cols)
        lines.append(f"{r:>{CELL - 1}}:" + cells)
    lines.append(rule)
    lines.append("total:" + "".join(f"{t:>{CELL}}" for t in totals(b) or (0,)))
    return "\n".join(lines)


def parse_betti(lines: Iterable[str]) -> BettiTable:
    """Read ``i j value`` triples; ``#`` starts a comment."""
    data: dict[tuple[int, int], int] = {}
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise BettiError(f"line {num}: expected 'i j value'")
        try:
            i, j, v = (int(x) for x in parts)
        except ValueError as exc:
            raise BettiError(f"line {num}: {exc}") from None
        if (i, j) in data:
            raise BettiError(f"line {num}: duplicate entry ({i}, {j})")
        data[(i, j)] = v
    return BettiTable.from_dict(data)


def format_betti(b: BettiTable) -> str:
    return "\n".join(f"{i} {j} {v}" for (i, j), v in b.entries)
