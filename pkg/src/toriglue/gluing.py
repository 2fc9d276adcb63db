"""Gluing homogeneous semigroups and checking the resulting splittings."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .binomials import (
    Binomial, BinomialIdeal, Budget, BudgetExceeded, DEFAULT_BUDGET, GroebnerBasis,
    RingContext, extend_ring, ideal_contains, ideal_equals, ideal_sum, make_binomial,
    toric_ideal,
)
from .linalg import HomogeneityCertificate, IntMatrix, homogeneity_certificate, rank
from .transform import NotHomogeneous, homogenize, is_two_dim_normal_form

STATUS_OK = "ok"
STATUS_FAIL = "fail"
STATUS_BUDGET = "unverified-budget"


class GluingError(ValueError):
    pass


@dataclass(frozen=True)
class GluingSpec:
    """Which columns to identify (0-based); None means last of A / first of B."""

    col_a: Optional[int] = None
    col_b: Optional[int] = None


@dataclass(frozen=True)
class GluedResult:
    a_prime: IntMatrix
    b_prime: IntMatrix
    c_tilde: IntMatrix
    c: IntMatrix
    e: int
    delta: int
    glue_binomial: Binomial
    ring_tilde: RingContext
    ring_c: RingContext
    a_columns: tuple[int, ...]
    b_columns: tuple[int, ...]
    row_perm_a: tuple[int, ...]
    row_perm_b: tuple[int, ...]
    cert_a: HomogeneityCertificate
    cert_b: HomogeneityCertificate
    a_np: int
    b_11: int

    @property
    def p(self) -> int:
        return self.a_prime.cols

    @property
    def q(self) -> int:
        return self.b_prime.cols


@dataclass
class SplitReport:
    """Outcome of comparing a toric ideal with a sum of smaller ones.

    ``lhs`` is the toric ideal of the big matrix, ``rhs`` the embedded sum
    (plus any gluing binomials). ``checks`` holds every individual identity
    that was tested.
    """

    status: str
    lhs: Optional[GroebnerBasis] = None
    rhs: Optional[GroebnerBasis] = None
    heights: tuple[int, ...] = ()
    ranks: tuple[int, ...] = ()
    checks: dict = field(default_factory=dict)
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


def _pick_row(col: Sequence[int], lam: Sequence[int], preferred: int) -> int:
    def good(i):
        return col[i] > 0 and lam[i] > 0

    if good(preferred):
        return preferred
    for i in range(len(col)):
        if good(i):
            return i
    raise GluingError("no row has a positive entry in the glue column and positive multiplier")


def _certificate(m: IntMatrix, what: str) -> HomogeneityCertificate:
    if not m.is_nonnegative():
        raise GluingError(f"{what} has negative entries; nonnegativize it first")
    ones = HomogeneityCertificate((1,) * m.rows, sum(m.column(0)))
    if ones.check(m):
        return ones
    cert = homogeneity_certificate(m)
    if cert is None:
        raise NotHomogeneous(f"{what} is not homogeneous")
    return cert


def glue_homogeneous(a: IntMatrix, b: IntMatrix, spec: GluingSpec = GluingSpec()) -> GluedResult:
    """Embed ``A`` and ``B`` in ``n+m-1`` rows so that ``(A'|B')`` is a gluing.

    The chosen column of ``A`` is moved last and the chosen column of ``B``
    first. Rows are rearranged only when needed so that the glue entries
    and the corresponding certificate multipliers are positive.
    """
    cert_a = _certificate(a, "A")
    cert_b = _certificate(b, "B")
    n, p = a.shape
    m, q = b.shape
    ia = p - 1 if spec.col_a is None else spec.col_a
    jb = 0 if spec.col_b is None else spec.col_b
    if not (0 <= ia < p and 0 <= jb < q):
        raise GluingError("glue column out of range")
    a_cols = tuple([k for k in range(p) if k != ia] + [ia])
    b_cols = tuple([jb] + [k for k in range(q) if k != jb])
    a1 = a.select_columns(a_cols)
    b1 = b.select_columns(b_cols)
    if not any(a1.column(p - 1)) or not any(b1.column(0)):
        raise GluingError("glue column is zero")

    ra = _pick_row(a1.column(p - 1), cert_a.lam, n - 1)
    row_perm_a = tuple([i for i in range(n) if i != ra] + [ra])
    rb = _pick_row(b1.column(0), cert_b.lam, 0)
    row_perm_b = tuple([rb] + [i for i in range(m) if i != rb])
    a1 = a1.select_rows(row_perm_a)
    b1 = b1.select_rows(row_perm_b)
    lam_a = tuple(cert_a.lam[i] for i in row_perm_a)
    lam_b = tuple(cert_b.lam[i] for i in row_perm_b)
    cert_a = HomogeneityCertificate(lam_a, cert_a.degree)
    cert_b = HomogeneityCertificate(lam_b, cert_b.degree)

    a_np, b_11 = a1[n - 1, p - 1], b1[0, 0]
    e = a_np - b_11
    delta = -1 if e <= 0 else 0
    a_rows = [list(a1.row(i)) for i in range(n - 1)]
    a_rows.append([x + delta * e for x in a1.row(n - 1)])
    a_rows.extend([b1[i, 0]] * p for i in range(1, m))
    b_rows = [[a1[i, p - 1]] * q for i in range(n - 1)]
    b_rows.append([x + (1 + delta) * e for x in b1.row(0)])
    b_rows.extend(list(b1.row(i)) for i in range(1, m))
    a_prime = IntMatrix.from_rows(a_rows)
    b_prime = IntMatrix.from_rows(b_rows)
    c_tilde = a_prime.hstack(b_prime)
    c = c_tilde.drop_column(p)

    xs = [f"x{k + 1}" for k in a_cols]
    ys = [f"y{k + 1}" for k in b_cols]
    ring_tilde = RingContext(tuple(xs + ys))
    ring_c = RingContext(tuple(xs[:-1] + ["z"] + ys[1:]))
    lead = [0] * (p + q)
    lead[p - 1] = 1
    trail = [0] * (p + q)
    trail[p] = 1
    glue = make_binomial(ring_tilde, lead, trail)
    return GluedResult(a_prime, b_prime, c_tilde, c, e, delta, glue, ring_tilde, ring_c,
                       a_cols, b_cols, row_perm_a, row_perm_b, cert_a, cert_b, a_np, b_11)


# -- verification ------------------------------------------------------------

def _toric_task(args):
    m, names, order, budget = args
    return toric_ideal(m, RingContext(tuple(names), order), budget)


def _toric_many(tasks, jobs: int):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_toric_task, tasks))
    return [_toric_task(t) for t in tasks]


def check_splitting(
    big: IntMatrix,
    ring: RingContext,
    parts: Sequence[tuple[IntMatrix, Sequence[str]]],
    extra: Sequence[Binomial] = (),
    budget: Budget = DEFAULT_BUDGET,
    jobs: int = 1,
) -> SplitReport:
    """Compare ``I_big`` with the sum of the parts' toric ideals embedded by name.

    ``parts`` pairs each matrix with the names its columns receive in
    ``ring``; ``extra`` holds gluing binomials already living in ``ring``.
    """
    tasks = [(big, ring.names, ring.order, budget)]
    tasks += [(pm, tuple(names), ring.order, budget) for pm, names in parts]
    try:
        ideals = _toric_many(tasks, jobs)
        lhs = ideals[0]
        pieces = [extend_ring(ideal, ring) for ideal in ideals[1:]]
        rhs = ideal_sum(*pieces, BinomialIdeal.from_binomials(ring, extra))
        equal = ideal_equals(lhs, rhs, budget)
        report = SplitReport(STATUS_OK if equal else STATUS_FAIL,
                             lhs.groebner(budget), rhs.groebner(budget))
        report.checks["ideal_equality"] = equal
        if not equal:
            report.checks["sum_contained"] = ideal_contains(lhs, rhs, budget)
    except BudgetExceeded as exc:
        report = SplitReport(STATUS_BUDGET, message=str(exc))
    r_big = rank(big)
    part_ranks = [rank(pm) for pm, _ in parts]
    report.ranks = tuple(part_ranks) + (r_big,)
    report.heights = tuple(pm.cols - r for (pm, _), r in zip(parts, part_ranks)) + (
        big.cols - r_big,)
    return report


def _fold(report: SplitReport, name: str, value: bool) -> SplitReport:
    report.checks[name] = value
    if not value and report.status == STATUS_OK:
        report.status = STATUS_FAIL
    return report


def verify_gluing(a: IntMatrix, b: IntMatrix, g: GluedResult,
                  budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> SplitReport:
    """Check rank(C~) = rank A + rank B - 1 and I_C~ = I_A + I_B + <x_p - y_1>."""
    p = g.p
    names = g.ring_tilde.names
    parts = [(a.select_columns(g.a_columns), names[:p]),
             (b.select_columns(g.b_columns), names[p:])]
    report = check_splitting(g.c_tilde, g.ring_tilde, parts, [g.glue_binomial], budget, jobs)
    r, s, rc = report.ranks
    _fold(report, "rank_identity", rc == r + s - 1)
    _fold(report, "duplicate_column", g.c_tilde.column(p - 1) == g.c_tilde.column(p))
    _fold(report, "overlap_identity", overlap_ok(g))
    return report


def overlap_ok(g: GluedResult) -> bool:
    """``a_np + delta*e == b_11 + (1+delta)*e`` and both sit in the shared row."""
    n = len(g.row_perm_a)
    left = g.a_np + g.delta * g.e
    right = g.b_11 + (1 + g.delta) * g.e
    return left == right == g.a_prime[n - 1, g.p - 1] == g.b_prime[n - 1, 0]


def split_parts(a: IntMatrix, b: IntMatrix, g: GluedResult):
    """The two parts of a splitting with their column names in ``g.ring_c``."""
    p = g.p
    names = g.ring_c.names
    return [(a.select_columns(g.a_columns), names[:p]),
            (b.select_columns(g.b_columns), names[p - 1:])]


def split_sum(a: IntMatrix, b: IntMatrix, spec: GluingSpec = GluingSpec(),
              budget: Budget = DEFAULT_BUDGET, jobs: int = 1):
    """Glue, drop the duplicate column, and check ``I_C = I_A' + I_B'``.

    Returns ``(glued, report)``. Besides ideal equality the report checks
    rank(C) = r + s - 1 and height(I_C) = height(I_A) + height(I_B).
    """
    g = glue_homogeneous(a, b, spec)
    report = check_splitting(g.c, g.ring_c, split_parts(a, b, g), (), budget, jobs)
    r, s, rc = report.ranks
    ha, hb, hc = report.heights
    _fold(report, "rank_identity", rc == r + s - 1)
    _fold(report, "height_identity", hc == ha + hb)
    return g, report


# -- two-dimensional and non-homogeneous gluing ------------------------------

def glue_2d(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Glue two 2-row normal forms into a 3-row matrix.

    The zero column of each factor becomes the shared middle column.
    """
    if not (is_two_dim_normal_form(a) and is_two_dim_normal_form(b)):
        raise GluingError("inputs must be in two-dimensional normal form")
    p, q = a.cols, b.cols
    top = list(a.row(1)[1:]) + [0] * q
    ones = [1] * (p + q - 1)
    bottom = [0] * p + list(b.row(1)[1:])
    return IntMatrix.from_rows([top, ones, bottom])


def split_2d(a: IntMatrix, b: IntMatrix, budget: Budget = DEFAULT_BUDGET, jobs: int = 1):
    c = glue_2d(a, b)
    p, q = a.cols, b.cols
    ring = RingContext(tuple([f"x{k}" for k in range(1, p)] + ["z"]
                             + [f"y{k}" for k in range(2, q + 1)]))
    a_re = a.select_columns(list(range(1, p)) + [0])
    parts = [(a_re, ring.names[:p]), (b, ring.names[p - 1:])]
    report = check_splitting(c, ring, parts, (), budget, jobs)
    r, s, rc = report.ranks
    _fold(report, "rank_identity", rc == r + s - 1)
    return c, report


def glue_sifts(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Block matrix gluing the homogenizations of two matrices over N.

    ``(m+n+1) x (p+q-1)``: ``A`` with its last column repeated over ``B``'s
    remaining columns, a row of ones, then ``B`` with its first column
    repeated over ``A``'s first ``p-1`` columns.
    """
    p, q = a.cols, b.cols
    a_p = a.column(p - 1)
    b_1 = b.column(0)
    rows = [list(a.row(i)) + [a_p[i]] * (q - 1) for i in range(a.rows)]
    rows.append([1] * (p + q - 1))
    rows.extend([b_1[i]] * (p - 1) + list(b.row(i)) for i in range(b.rows))
    return IntMatrix.from_rows(rows)


def sift_ring(p: int, q: int) -> RingContext:
    return RingContext(tuple([f"x{k}" for k in range(1, p)] + ["z"]
                             + [f"y{k}" for k in range(2, q + 1)]))


def sift_split(a: IntMatrix, b: IntMatrix, budget: Budget = DEFAULT_BUDGET, jobs: int = 1):
    """``I_C = I_{A^H}|_{x_p=z} + I_{B^H}|_{y_1=z}`` for ``C = glue_sifts(A, B)``."""
    c = glue_sifts(a, b)
    ring = sift_ring(a.cols, b.cols)
    parts = [(homogenize(a), ring.names[:a.cols]), (homogenize(b), ring.names[a.cols - 1:])]
    report = check_splitting(c, ring, parts, (), budget, jobs)
    ha, hb, hc = report.heights
    _fold(report, "height_identity", hc == ha + hb)
    return c, report
