"""Exact integer and rational linear algebra.

Everything here works on plain Python integers (arbitrary precision) or
:class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence


class MatrixError(ValueError):
    """Malformed matrix input."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; columns are the semigroup generators."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise MatrixError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise MatrixError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        if not cols:
            raise MatrixError("no columns")
        return cls.from_rows(zip(*cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, p: int) -> "IntMatrix":
        return cls.from_rows([[0] * p for _ in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(zip(*self.entries))

    def select_columns(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows([[row[j] for j in idx] for row in self.entries])

    def select_rows(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows([self.entries[i] for i in idx])

    def drop_column(self, j: int) -> "IntMatrix":
        return self.select_columns([k for k in range(self.cols) if k != j])

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise MatrixError("row count mismatch in hstack")
        return IntMatrix.from_rows(a + b for a, b in zip(self.entries, other.entries))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise MatrixError("column count mismatch in vstack")
        return IntMatrix(self.entries + other.entries)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product ``M v``."""
        if len(v) != self.cols:
            raise MatrixError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def min_entry(self) -> int:
        return min(min(row) for row in self.entries)

    def is_nonnegative(self) -> bool:
        return self.min_entry() >= 0

    def __str__(self) -> str:
        return format_matrix(self)


def format_matrix(m: IntMatrix) -> str:
    """Render in the text format: ``rows cols`` header, then one row per line."""
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.entries)
    return "\n".join(lines)


def rank(m: IntMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m.entries]
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for k in range(c + 1, ncols):
                # exact by Sylvester's identity
                row_i[k] = (p * row_i[k] - f * row_r[k]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def hermite_normal_form(rows: Sequence[Sequence[int]], with_transform: bool = False):
    """Row-style Hermite normal form.

    Returns ``H`` (list of lists, zero rows last) or ``(H, U)`` with ``U``
    unimodular and ``U @ rows == H``. Pivots are positive and entries above
    each pivot lie in ``[0, pivot)``.
    """
    h = [list(r) for r in rows]
    n = len(h)
    width = len(h[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)] if with_transform else None

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def addmul(dst, src, q):
        # row dst -= q * row src
        if q == 0:
            return
        hs, hd = h[src], h[dst]
        for k in range(width):
            if hs[k]:
                hd[k] -= q * hs[k]
        if u is not None:
            us, ud = u[src], u[dst]
            for k in range(n):
                if us[k]:
                    ud[k] -= q * us[k]

    def negate(i):
        h[i] = [-x for x in h[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    r = 0
    for c in range(width):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if h[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(h[i][c]), i))
            swap(r, best)
            done = True
            for i in range(r + 1, n):
                if h[i][c]:
                    addmul(i, r, h[i][c] // h[r][c])
                    if h[i][c]:
                        done = False
            if done:
                break
        if all(h[i][c] == 0 for i in range(r, n)):
            continue
        if h[r][c] < 0:
            negate(r)
        piv = h[r][c]
        for i in range(r):
            addmul(i, r, h[i][c] // piv)
        r += 1
    if with_transform:
        return h, u
    return h


def kernel_lattice_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the saturated lattice ``{v in Z^cols : M v = 0}``.

    Computed from a unimodular transform bringing ``M^T`` to Hermite form,
    then put in Hermite form itself so the basis is unique for the lattice.
    """
    mt = m.transpose().to_lists()
    h, u = hermite_normal_form(mt, with_transform=True)
    basis = [u[i] for i in range(len(h)) if not any(h[i])]
    if not basis:
        return []
    hb = hermite_normal_form(basis)
    return [tuple(row) for row in hb if any(row)]


@dataclass(frozen=True)
class HomogeneityCertificate:
    """Integer witness ``lam^T M = degree * (1,...,1)`` with ``degree > 0``."""

    lam: tuple[int, ...]
    degree: int

    def check(self, m: IntMatrix) -> bool:
        if self.degree <= 0 or len(self.lam) != m.rows:
            return False
        return all(
            sum(l * a for l, a in zip(self.lam, m.column(j))) == self.degree
            for j in range(m.cols)
        )


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[Fraction]]:
    """One solution of ``a x = b`` over Q, free variables set to zero.

    Pivots are taken as the first nonzero entry scanning rows top-down in
    each column, so the returned solution is deterministic.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return x


def homogeneity_certificate(m: IntMatrix) -> Optional[HomogeneityCertificate]:
    """Canonical ``(lam, d)`` with ``lam^T M = d * 1``, or None.

    Solves ``lam^T M = 1`` over Q and clears denominators; the result has
    ``d > 0`` and ``gcd(lam, d) = 1``. Such witnesses are never unique.
    """
    sol = solve_rational(m.transpose().to_lists(), [1] * m.cols)
    if sol is None:
        return None
    den = 1
    for x in sol:
        den = den * x.denominator // gcd(den, x.denominator)
    lam = [int(x * den) for x in sol]
    g = den
    for x in lam:
        g = gcd(g, x)
    return HomogeneityCertificate(tuple(x // g for x in lam), den // g)


def is_homogeneous(m: IntMatrix) -> bool:
    return homogeneity_certificate(m) is not None


def content(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
