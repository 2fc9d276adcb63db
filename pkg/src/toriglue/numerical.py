"""Gluing numerical semigroups: selfgluing and iterated gluing."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .binomials import (
    Binomial, Budget, DEFAULT_BUDGET, RingContext, make_binomial,
)
from .gluing import SplitReport, check_splitting
from .linalg import IntMatrix, content

PART_PREFIXES = ("x", "y", "z", "u", "v", "w", "s", "r")


class MembershipError(ValueError):
    """A multiplier is not in the semigroup it has to belong to."""


def _gens(a) -> list[int]:
    if isinstance(a, IntMatrix):
        if a.rows != 1:
            raise ValueError("numerical semigroups are given as 1-row matrices")
        return list(a.row(0))
    return [int(x) for x in a]


def semigroup_representation(k: int, gens: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Exponents ``c`` with ``sum(c_i * g_i) == k``, or None if ``k`` is not in ``<gens>``.

    Among all representations the one with fewest summands is returned,
    ties going to the lexicographically largest exponent vector.
    """
    if k < 0:
        return None
    n = len(gens)
    best: list[Optional[tuple[int, ...]]] = [None] * (k + 1)
    best[0] = (0,) * n

    def better(a, b):
        if b is None:
            return True
        sa, sb = sum(a), sum(b)
        return sa < sb or (sa == sb and a > b)

    for v in range(1, k + 1):
        for i, g in enumerate(gens):
            if 0 < g <= v and best[v - g] is not None:
                cand = list(best[v - g])
                cand[i] += 1
                cand = tuple(cand)
                if better(cand, best[v]):
                    best[v] = cand
    return best[k]


def in_semigroup(k: int, gens: Sequence[int]) -> bool:
    return semigroup_representation(k, gens) is not None


@dataclass(frozen=True)
class NumericalGluing:
    """Result of one or more numerical gluings.

    ``parts`` pairs each input semigroup with the ring names of its
    columns; merged columns share a name. ``glue_binomials`` are the
    nonlinear gluing binomials (linear ones vanish after merging).
    """

    matrix: IntMatrix
    ring: RingContext
    parts: tuple[tuple[IntMatrix, tuple[str, ...]], ...]
    glue_binomials: tuple[Binomial, ...]
    merged: tuple[bool, ...]

    @property
    def splits(self) -> bool:
        return all(self.merged)


class _Builder:
    """Tracks columns by (part, index) labels until names are assigned."""

    def __init__(self, first: Sequence[int]):
        self.parts = [list(first)]
        self.values = list(first)
        self.labels = [(0, i) for i in range(len(first))]
        self.alias: dict = {}
        self.glues: list[tuple[dict, dict]] = []
        self.merged: list[bool] = []

    def root(self, lab):
        while lab in self.alias:
            lab = self.alias[lab]
        return lab

    def glue(self, part: Sequence[int], k: int, k_new: int):
        acc = self.values
        if not in_semigroup(k, part):
            raise MembershipError(f"{k} is not in <{', '.join(map(str, part))}>")
        if not in_semigroup(k_new, acc):
            raise MembershipError(f"{k_new} is not in <{', '.join(map(str, acc))}>")
        if gcd(k, k_new) != 1:
            raise MembershipError(f"gcd({k}, {k_new}) != 1")
        t = len(self.parts)
        self.parts.append(list(part))
        new_vals = [k * v for v in acc]
        scaled = [k_new * v for v in part]
        hit = next(((i, j) for i, v in enumerate(new_vals)
                    for j, w in enumerate(scaled) if v == w), None)
        if hit is not None:
            i, j = hit
            self.alias[(t, j)] = self.root(self.labels[i])
            keep = [jj for jj in range(len(part)) if jj != j]
            self.merged.append(True)
        else:
            rep_acc = semigroup_representation(k_new, acc)
            rep_new = semigroup_representation(k, part)
            left = {self.labels[i]: e for i, e in enumerate(rep_acc) if e}
            right = {(t, j): e for j, e in enumerate(rep_new) if e}
            self.glues.append((left, right))
            keep = list(range(len(part)))
            self.merged.append(False)
        self.values = new_vals + [scaled[jj] for jj in keep]
        self.labels = self.labels + [(t, jj) for jj in keep]

    def build(self) -> NumericalGluing:
        merge_roots = sorted({self.root(lab) for lab in self.alias})
        names = {}
        for idx, r in enumerate(merge_roots):
            names[r] = "z" if idx == 0 else f"z_{idx + 1}"

        def name(lab):
            r = self.root(lab)
            if r in names:
                return names[r]
            prefix = PART_PREFIXES[lab[0]] if lab[0] < len(PART_PREFIXES) else f"p{lab[0] + 1}_"
            return f"{prefix}{lab[1] + 1}"

        ring = RingContext(tuple(name(lab) for lab in self.labels))
        parts = tuple(
            (IntMatrix.from_rows([vals]), tuple(name((t, j)) for j in range(len(vals))))
            for t, vals in enumerate(self.parts))
        glues = []
        for left, right in self.glues:
            a = [0] * ring.nvars
            b = [0] * ring.nvars
            for lab, e in left.items():
                a[ring.index(name(lab))] += e
            for lab, e in right.items():
                b[ring.index(name(lab))] += e
            glues.append(make_binomial(ring, a, b))
        return NumericalGluing(IntMatrix.from_rows([self.values]), ring, parts,
                               tuple(glues), tuple(self.merged))


def _check_part(gens: Sequence[int]):
    if not gens or any(g <= 0 for g in gens):
        raise ValueError("numerical semigroup generators must be positive")
    if content(gens) != 1:
        raise ValueError(f"generators {list(gens)} are not coprime")


def glue_numerical(a1, a2, k1: int, k2: int) -> NumericalGluing:
    """``k1 * A1`` together with ``k2 * A2``; needs ``k1 in <A2>``, ``k2 in <A1>``."""
    g1, g2 = _gens(a1), _gens(a2)
    _check_part(g1)
    _check_part(g2)
    b = _Builder(g1)
    b.glue(g2, k1, k2)
    return b.build()


def self_glue_numerical(a, k1: int, k2: int) -> NumericalGluing:
    """Glue ``<A>`` with a copy of itself via ``k1 * A`` and ``k2 * A``.

    When ``k1 * a_i == k2 * a_j`` the two columns are merged into ``z``
    and the ideal splits; otherwise the gluing binomial expresses ``k2`` in
    the first copy and ``k1`` in the second.
    """
    return glue_numerical(a, a, k1, k2)


def iterate_glue(parts: Sequence, multipliers: Sequence[tuple[int, int]]) -> NumericalGluing:
    """Left fold of numerical gluing.

    Step ``t`` replaces the accumulated semigroup ``C`` by ``k * C`` together
    with ``k' * A_{t+1}`` for ``(k, k') = multipliers[t]``.
    """
    gens = [_gens(p) for p in parts]
    if not gens:
        raise ValueError("no parts")
    if len(multipliers) != len(gens) - 1:
        raise ValueError("need one multiplier pair per gluing step")
    for g in gens:
        _check_part(g)
    b = _Builder(gens[0])
    for part, (k, k_new) in zip(gens[1:], multipliers):
        b.glue(part, k, k_new)
    return b.build()


def verify_numerical(result: NumericalGluing, budget: Budget = DEFAULT_BUDGET,
                     jobs: int = 1) -> SplitReport:
    """``I_C`` against the embedded part ideals plus the gluing binomials."""
    return check_splitting(result.matrix, result.ring, result.parts,
                           result.glue_binomials, budget, jobs)
