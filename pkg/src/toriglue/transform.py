"""Row operations that preserve toric ideals, and the normal forms built from them."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .binomials import (
    BinomialIdeal, Budget, DEFAULT_BUDGET, RingContext, ideal_equals, toric_ideal,
)
from .linalg import (
    HomogeneityCertificate, IntMatrix, content, homogeneity_certificate,
)

OP_KINDS = (
    "scale", "simplify", "add_multiple", "shift", "shift_all",
    "append_constant_row", "swap_rows", "permute_columns",
)


class IllegalOperation(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class RowOperation:
    """One step of an equivalence derivation.

    ``row``/``src`` are 0-based row indices; ``value`` is the factor, shift
    or constant; ``perm`` is used by ``permute_columns`` (new column k is
    old column ``perm[k]``) and by ``swap_rows`` (the two rows).
    """

    kind: str
    row: int = 0
    value: int = 0
    src: int = 0
    perm: tuple[int, ...] = ()
    note: str = ""

    def __post_init__(self):
        if self.kind not in OP_KINDS:
            raise IllegalOperation(f"unknown row operation {self.kind!r}")

    def describe(self) -> str:
        r = self.row + 1
        if self.kind == "scale":
            return f"scale row {r} by {self.value}"
        if self.kind == "simplify":
            return f"divide row {r} by {self.value}"
        if self.kind == "add_multiple":
            return f"add {self.value} * row {self.src + 1} to row {r}"
        if self.kind == "shift":
            return f"add {self.value} to every entry of row {r}"
        if self.kind == "shift_all":
            return f"add {self.value} to every entry"
        if self.kind == "append_constant_row":
            return f"append a row of {self.value}s"
        if self.kind == "swap_rows":
            return f"swap rows {self.perm[0] + 1} and {self.perm[1] + 1}"
        return "reorder columns as " + " ".join(str(k + 1) for k in self.perm)


@dataclass(frozen=True)
class EquivalenceTrace:
    start: IntMatrix
    ops: tuple[RowOperation, ...]
    end: IntMatrix
    certificate: Optional[HomogeneityCertificate] = None

    def replay(self) -> IntMatrix:
        m, cert = self.start, self.certificate or homogeneity_certificate(self.start)
        for op in self.ops:
            m, cert = apply_tracked(op, m, cert)
        return m

    def column_order(self) -> tuple[int, ...]:
        """Original column index of each final column."""
        order = tuple(range(self.start.cols))
        for op in self.ops:
            if op.kind == "permute_columns":
                order = tuple(order[k] for k in op.perm)
        return order

    def format(self) -> str:
        if not self.ops:
            return "(no operations)"
        return "\n".join(f"{k}. {op.describe()}" for k, op in enumerate(self.ops, 1))


def _normalize_cert(lam: Sequence[int], d: int) -> Optional[HomogeneityCertificate]:
    if d == 0:
        return None
    if d < 0:
        lam, d = [-x for x in lam], -d
    g = gcd(d, content(lam))
    return HomogeneityCertificate(tuple(x // g for x in lam), d // g)


def _row_map(m: IntMatrix, i: int, f) -> IntMatrix:
    rows = list(m.entries)
    rows[i] = tuple(f(x) for x in rows[i])
    return IntMatrix(tuple(rows))


def apply(op: RowOperation, m: IntMatrix,
          cert: Optional[HomogeneityCertificate] = None) -> IntMatrix:
    """Apply one operation; shifts require a certificate satisfying the guard."""
    return apply_tracked(op, m, cert)[0]


def apply_tracked(op: RowOperation, m: IntMatrix, cert: Optional[HomogeneityCertificate]):
    """Apply ``op`` and carry the homogeneity certificate along."""
    lam = list(cert.lam) if cert else None
    d = cert.degree if cert else None
    k = op.kind
    if k in ("scale", "simplify", "shift", "add_multiple") and not 0 <= op.row < m.rows:
        raise IllegalOperation(f"row {op.row} out of range")
    if k == "scale":
        if op.value == 0:
            raise IllegalOperation("scale factor must be nonzero")
        out = _row_map(m, op.row, lambda x: x * op.value)
        if lam is not None:
            lam = [x * op.value for x in lam]
            lam[op.row] = cert.lam[op.row]
            d = d * op.value
    elif k == "simplify":
        c = op.value
        if c == 0 or any(x % c for x in m.row(op.row)):
            raise IllegalOperation(f"{c} does not divide every entry of row {op.row + 1}")
        out = _row_map(m, op.row, lambda x: x // c)
        if lam is not None:
            lam[op.row] *= c
    elif k == "add_multiple":
        if not 0 <= op.src < m.rows or op.src == op.row:
            raise IllegalOperation("bad source row")
        src = m.row(op.src)
        rows = list(m.entries)
        rows[op.row] = tuple(a + op.value * b for a, b in zip(rows[op.row], src))
        out = IntMatrix(tuple(rows))
        if lam is not None:
            lam[op.src] -= op.value * lam[op.row]
    elif k == "shift":
        if cert is None:
            raise IllegalOperation("shifting a row needs a homogeneity certificate")
        if d + lam[op.row] * op.value == 0:
            raise IllegalOperation(
                f"guard violated: {d} + {lam[op.row]}*{op.value} = 0")
        out = _row_map(m, op.row, lambda x: x + op.value)
        d = d + lam[op.row] * op.value
    elif k == "shift_all":
        if cert is None:
            raise IllegalOperation("shifting needs a homogeneity certificate")
        if d + op.value * sum(lam) == 0:
            raise IllegalOperation(f"guard violated: {d} + {op.value}*{sum(lam)} = 0")
        out = IntMatrix(tuple(tuple(x + op.value for x in row) for row in m.entries))
        d = d + op.value * sum(lam)
    elif k == "append_constant_row":
        out = m.vstack(IntMatrix.from_rows([[op.value] * m.cols]))
        if lam is not None:
            lam.append(0)
    elif k == "swap_rows":
        i, j = op.perm
        rows = list(m.entries)
        rows[i], rows[j] = rows[j], rows[i]
        out = IntMatrix(tuple(rows))
        if lam is not None:
            lam[i], lam[j] = lam[j], lam[i]
    else:
        if sorted(op.perm) != list(range(m.cols)):
            raise IllegalOperation("not a column permutation")
        out = m.select_columns(op.perm)
    new_cert = _normalize_cert(lam, d) if lam is not None else None
    return out, new_cert


def normalize_nonnegative(m: IntMatrix, cert: Optional[HomogeneityCertificate] = None):
    """Shift all entries by the least ``z >= 0`` making them nonnegative.

    ``z`` is bumped while ``d + z * sum(lam) == 0``. Returns the new matrix
    and its trace.
    """
    cert = cert or homogeneity_certificate(m)
    if cert is None or not cert.check(m):
        raise NotHomogeneous("nonnegativization needs a homogeneous matrix")
    z = max(0, -m.min_entry())
    if z == 0:
        return m, EquivalenceTrace(m, (), m)
    while cert.degree + z * sum(cert.lam) == 0:
        z += 1
    op = RowOperation("shift_all", value=z)
    out = apply(op, m, cert)
    return out, EquivalenceTrace(m, (op,), out, cert)


def homogenize(m: IntMatrix) -> IntMatrix:
    """Append a row of ones."""
    return m.vstack(IntMatrix.from_rows([[1] * m.cols]))


def homogeneous_sift(m: IntMatrix, ring: Optional[RingContext] = None,
                     budget: Budget = DEFAULT_BUDGET) -> BinomialIdeal:
    """Largest standard-homogeneous subideal of ``I_M``, i.e. the toric ideal of ``M^H``."""
    return toric_ideal(homogenize(m), ring, budget)


def equivalent(a: IntMatrix, b: IntMatrix, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Same toric ideal under the positional identification of columns."""
    if a.cols != b.cols:
        raise ValueError(f"column counts differ: {a.cols} vs {b.cols}")
    ring = RingContext.indexed("x", a.cols)
    return ideal_equals(toric_ideal(a, ring, budget), toric_ideal(b, ring, budget), budget)


def is_two_dim_normal_form(m: IntMatrix) -> bool:
    if m.rows != 2:
        return False
    top, bottom = m.row(0), m.row(1)
    return (all(x == 1 for x in top) and bottom[0] == 0
            and all(x <= y for x, y in zip(bottom, bottom[1:])))


def two_dim_normal_form(m: IntMatrix):
    """Reduce a homogeneous 2-row matrix to ``[[1,...,1],[0,a_1,...]]``.

    Returns ``(normal_form, trace)``. The second row comes out
    nondecreasing; the trace's last step may reorder columns (ties keep
    the original order), see :meth:`EquivalenceTrace.column_order`.
    """
    if m.rows != 2:
        raise ValueError(f"expected 2 rows, got {m.rows}")
    cert = homogeneity_certificate(m)
    if cert is None:
        raise NotHomogeneous("matrix is not homogeneous")
    ops: list[RowOperation] = []
    cur = m

    def push(op):
        nonlocal cur, cert
        ops.append(op)
        cur, cert = apply_tracked(op, cur, cert)

    for i in range(2):
        c = content(cur.row(i))
        if c > 1:
            push(RowOperation("simplify", row=i, value=c))
    if cert.lam[0] == 0:
        push(RowOperation("swap_rows", perm=(0, 1)))
    l1, l2, d = cert.lam[0], cert.lam[1], cert.degree
    if l1 != 1:
        push(RowOperation("scale", row=0, value=l1))
    if l2 != 0:
        push(RowOperation("add_multiple", row=0, src=1, value=l2))
    if d != 1:
        push(RowOperation("simplify", row=0, value=d))
    assert all(x == 1 for x in cur.row(0))
    low = min(cur.row(1))
    if low != 0:
        push(RowOperation("shift", row=1, value=-low))
    c = content(cur.row(1))
    if c > 1:
        push(RowOperation("simplify", row=1, value=c))
    perm = tuple(sorted(range(cur.cols), key=lambda j: (cur[1, j], j)))
    if perm != tuple(range(cur.cols)):
        push(RowOperation("permute_columns", perm=perm))
    return cur, EquivalenceTrace(m, tuple(ops), cur, homogeneity_certificate(m))
