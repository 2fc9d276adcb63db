"""Binomial ideals: monomial orders, Buchberger, saturation, toric ideals.

Monomials are exponent tuples. Every polynomial handled here is a
binomial ``x^a - x^b`` with coefficients +1/-1; S-polynomials and
reductions of binomials are again binomials, so no coefficient field
ever shows up. ``x^b`` may be the constant monomial 1 (all-zero tuple).
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .linalg import IntMatrix, kernel_lattice_basis, homogeneity_certificate

Monomial = tuple[int, ...]
Key = Callable[[Monomial], tuple]

ORDERS = ("grevlex", "lex")


class BudgetExceeded(RuntimeError):
    """A Groebner computation ran past its step or degree budget."""


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Budget:
    max_reductions: int = 50_000
    max_degree: int = 60


DEFAULT_BUDGET = Budget()


# -- monomial orders ---------------------------------------------------------

def grevlex_key(n: int) -> Key:
    rev = tuple(range(n - 1, -1, -1))

    def key(m):
        return (sum(m),) + tuple(-m[i] for i in rev)
    return key


def lex_key(n: int) -> Key:
    return lambda m: m


def weighted_revlex_key(weights: Sequence[int], last: int) -> Key:
    """Weight first, then reverse lex with variable ``last`` the cheapest.

    With positive weights and an ideal homogeneous for them, the Groebner
    basis divided by the highest power of ``last`` is a Groebner basis of
    the saturation by ``last``.
    """
    n = len(weights)
    w = tuple(weights)
    rev = (last,) + tuple(i for i in range(n - 1, -1, -1) if i != last)

    def key(m):
        return (sum(a * b for a, b in zip(w, m)),) + tuple(-m[i] for i in rev)
    return key


def elimination_key(n: int, eliminate: Sequence[int]) -> Key:
    """Block order: grevlex on ``eliminate`` first, then grevlex on the rest."""
    first = list(eliminate)
    rest = [i for i in range(n) if i not in set(first)]
    k1 = grevlex_key(len(first))
    k2 = grevlex_key(len(rest))

    def key(m):
        return k1(tuple(m[i] for i in first)) + k2(tuple(m[i] for i in rest))
    return key


@lru_cache(maxsize=None)
def order_key(order: str, n: int) -> Key:
    if order == "grevlex":
        return grevlex_key(n)
    if order == "lex":
        return lex_key(n)
    raise ValueError(f"unknown monomial order {order!r}; expected one of {ORDERS}")


# -- monomial arithmetic -----------------------------------------------------

def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _shift(m: Monomial, sub: Monomial, add: Monomial) -> Monomial:
    return tuple(x - s + t for x, s, t in zip(m, sub, add))


# -- Buchberger on raw exponent pairs ----------------------------------------

class _Reducer:
    """Divisor lookup over a growing list of (lead, tail) pairs."""

    def __init__(self, n: int):
        self.leads: list[Monomial] = []
        self.tails: list[Monomial] = []
        self.degs: list[int] = []
        self.active: list[int] = []

    def add(self, lead, tail) -> int:
        self.leads.append(lead)
        self.tails.append(tail)
        self.degs.append(sum(lead))
        return len(self.leads) - 1

    def find(self, m: Monomial, skip: int = -1) -> int:
        d = sum(m)
        leads, degs = self.leads, self.degs
        for i in self.active:
            if i != skip and degs[i] <= d and _divides(leads[i], m):
                return i
        return -1


def _reduce_pair(a: Monomial, b: Monomial, red: _Reducer, key: Key, full: bool):
    """Reduce binomial ``a - b``; returns oriented (lead, tail) or None for zero."""
    if a == b:
        return None
    if key(a) < key(b):
        a, b = b, a
    while True:
        i = red.find(a)
        if i >= 0:
            a = _shift(a, red.leads[i], red.tails[i])
            if a == b:
                return None
            if key(a) < key(b):
                a, b = b, a
            continue
        if not full:
            return a, b
        j = red.find(b)
        if j < 0:
            return a, b
        b = _shift(b, red.leads[j], red.tails[j])
        if a == b:
            return None
        if key(a) < key(b):
            a, b = b, a


def groebner_pairs(
    gens: Iterable[tuple[Monomial, Monomial]],
    key: Key,
    budget: Budget = DEFAULT_BUDGET,
    degree: Callable[[Monomial], int] = sum,
) -> list[tuple[Monomial, Monomial]]:
    """Reduced Groebner basis of the binomials ``a - b`` under ``key``.

    Buchberger with the Gebauer-Moeller pair criteria and normal selection
    strategy. Output is sorted by descending leading term. ``degree``
    measures leading terms against ``budget.max_degree``.
    """
    gens = list(gens)
    if not gens:
        return []
    n = len(gens[0][0])
    red = _Reducer(n)
    heap: list = []
    counter = 0
    steps = 0

    def lcm_of(i, j):
        return _lcm(red.leads[i], red.leads[j])

    def update(h: int):
        nonlocal counter, heap
        lt_h = red.leads[h]
        # Gebauer-Moeller: new pairs (h, g)
        cands = [(g, lcm_of(h, g)) for g in red.active]
        keep = []
        for idx, (g, l) in enumerate(cands):
            if _coprime(lt_h, red.leads[g]):
                keep.append((g, l, True))
                continue
            redundant = False
            for jdx, (g2, l2) in enumerate(cands):
                if jdx == idx:
                    continue
                if _divides(l2, l) and (l2 != l or jdx < idx):
                    redundant = True
                    break
            if not redundant:
                keep.append((g, l, False))
        new_pairs = [(g, l) for g, l, cop in keep if not cop]
        # drop old pairs made redundant by h
        kept_heap = []
        for item in heap:
            _, _, i, j, l = item
            if _divides(lt_h, l) and lcm_of(i, h) != l and lcm_of(j, h) != l:
                continue
            kept_heap.append(item)
        for g, l in new_pairs:
            counter += 1
            kept_heap.append((key(l), counter, g, h, l))
        heapq.heapify(kept_heap)
        heap = kept_heap
        red.active = [g for g in red.active if not _divides(lt_h, red.leads[g])]
        red.active.append(h)

    def add_poly(a, b):
        r = _reduce_pair(a, b, red, key, full=False)
        if r is None:
            return
        lead, tail = r
        if degree(lead) > budget.max_degree:
            raise BudgetExceeded(
                f"degree {degree(lead)} exceeds budget {budget.max_degree}")
        h = red.add(lead, tail)
        update(h)

    for a, b in gens:
        add_poly(a, b)

    while heap:
        _, _, i, j, l = heapq.heappop(heap)
        steps += 1
        if steps > budget.max_reductions:
            raise BudgetExceeded(f"more than {budget.max_reductions} S-pair reductions")
        s1 = _shift(l, red.leads[i], red.tails[i])
        s2 = _shift(l, red.leads[j], red.tails[j])
        add_poly(s1, s2)

    return _interreduce(red, key)


def _interreduce(red: _Reducer, key: Key):
    active = list(red.active)
    # minimal basis: drop elements whose lead another lead divides
    minimal = []
    for i in active:
        if any(j != i and _divides(red.leads[j], red.leads[i])
               and (red.leads[j] != red.leads[i] or j < i) for j in active):
            continue
        minimal.append(i)
    red.active = minimal
    out = []
    for i in minimal:
        lead, tail = red.leads[i], red.tails[i]
        while True:
            j = red.find(tail, skip=i)
            if j < 0:
                break
            tail = _shift(tail, red.leads[j], red.tails[j])
        out.append((lead, tail))
    # reduced tails are final; only write back after all are computed
    for (lead, tail), i in zip(out, minimal):
        red.tails[i] = tail
    out.sort(key=lambda p: key(p[0]), reverse=True)
    return out


def normal_form_pair(a: Monomial, b: Monomial, basis, key: Key):
    red = _Reducer(len(a))
    for lead, tail in basis:
        red.active.append(red.add(lead, tail))
    return _reduce_pair(a, b, red, key, full=True)


# -- public types ------------------------------------------------------------

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


@dataclass(frozen=True)
class RingContext:
    """Polynomial ring ``k[names]`` with a monomial order."""

    names: tuple[str, ...]
    order: str = "grevlex"

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for nm in self.names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"bad variable name {nm!r}")
        order_key(self.order, len(self.names))

    @classmethod
    def indexed(cls, prefix: str, n: int, order: str = "grevlex") -> "RingContext":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)), order)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def key(self) -> Key:
        return order_key(self.order, len(self.names))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def with_order(self, order: str) -> "RingContext":
        return RingContext(self.names, order)

    def rename(self, mapping: dict[str, str]) -> "RingContext":
        return RingContext(tuple(mapping.get(nm, nm) for nm in self.names), self.order)


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus`` with ``plus`` the larger term in its ring's order."""

    plus: Monomial
    minus: Monomial

    @property
    def degree(self) -> int:
        return max(sum(self.plus), sum(self.minus))

    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def has_disjoint_support(self) -> bool:
        return _coprime(self.plus, self.minus)

    def is_standard_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)


def make_binomial(ring: RingContext, a: Sequence[int], b: Sequence[int]) -> Optional[Binomial]:
    """Oriented binomial ``x^a - x^b`` in ``ring``, or None when ``a == b``."""
    a, b = tuple(a), tuple(b)
    if len(a) != ring.nvars or len(b) != ring.nvars:
        raise RingMismatch("exponent length does not match ring")
    if min(a + b, default=0) < 0:
        raise ValueError("negative exponent")
    if a == b:
        return None
    k = ring.key
    return Binomial(a, b) if k(a) > k(b) else Binomial(b, a)


def binomial_from_vector(ring: RingContext, v: Sequence[int]) -> Optional[Binomial]:
    """``x^{v+} - x^{v-}`` for an integer vector ``v``."""
    plus = tuple(x if x > 0 else 0 for x in v)
    minus = tuple(-x if x < 0 else 0 for x in v)
    return make_binomial(ring, plus, minus)


def parse_binomial(ring: RingContext, text: str) -> Optional[Binomial]:
    """Parse ``x1*x4 - x3^2*x5`` (the print format) into a binomial."""
    parts = text.split("-")
    if len(parts) != 2:
        raise ValueError(f"not a binomial: {text!r}")
    return make_binomial(ring, _parse_monomial(ring, parts[0]), _parse_monomial(ring, parts[1]))


def _parse_monomial(ring: RingContext, text: str) -> Monomial:
    exps = [0] * ring.nvars
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        factor = factor.strip()
        name, _, e = factor.partition("^")
        try:
            exps[ring.index(name.strip())] += int(e) if e else 1
        except ValueError:
            raise ValueError(f"unknown variable or bad factor {factor!r}") from None
    return tuple(exps)


def format_monomial(ring: RingContext, m: Monomial) -> str:
    factors = []
    for nm, e in zip(ring.names, m):
        if e == 1:
            factors.append(nm)
        elif e > 1:
            factors.append(f"{nm}^{e}")
    return "*".join(factors) if factors else "1"


def format_binomial(ring: RingContext, b: Binomial) -> str:
    return f"{format_monomial(ring, b.plus)} - {format_monomial(ring, b.minus)}"


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    elements: tuple[Binomial, ...]

    def pairs(self):
        return [(b.plus, b.minus) for b in self.elements]

    def __len__(self):
        return len(self.elements)

    def format(self) -> str:
        return "\n".join(format_binomial(self.ring, b) for b in self.elements)


@dataclass(frozen=True)
class BinomialIdeal:
    """Ideal generated by binomials in a fixed ring."""

    ring: RingContext
    generators: tuple[Binomial, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @classmethod
    def from_binomials(cls, ring: RingContext, gens: Iterable[Optional[Binomial]]) -> "BinomialIdeal":
        seen = []
        for g in gens:
            if g is None:
                continue
            if len(g.plus) != ring.nvars:
                raise RingMismatch("generator length does not match ring")
            g = make_binomial(ring, g.plus, g.minus)
            if g is not None and g not in seen:
                seen.append(g)
        return cls(ring, tuple(seen))

    @classmethod
    def parse(cls, ring: RingContext, lines: Iterable[str]) -> "BinomialIdeal":
        return cls.from_binomials(
            ring, (parse_binomial(ring, ln) for ln in lines if ln.strip()))

    def is_zero(self) -> bool:
        return not self.generators

    def groebner(self, budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
        gb = self._cache.get(("gb", self.ring.order))
        if gb is None:
            gb = buchberger(self, budget=budget)
            self._cache[("gb", self.ring.order)] = gb
        return gb

    def format(self) -> str:
        return "\n".join(format_binomial(self.ring, b) for b in self.generators)

    def __len__(self):
        return len(self.generators)


# -- operations --------------------------------------------------------------

def buchberger(ideal: BinomialIdeal, order: Optional[str] = None,
               budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` (ring order unless ``order`` given)."""
    ring = ideal.ring if order is None else ideal.ring.with_order(order)
    pairs = groebner_pairs(((g.plus, g.minus) for g in ideal.generators), ring.key, budget)
    return GroebnerBasis(ring, tuple(Binomial(a, b) for a, b in pairs))


def normal_form(b: Optional[Binomial], gb: GroebnerBasis,
                ring: Optional[RingContext] = None) -> Optional[Binomial]:
    """Remainder of ``b`` on division by ``gb``; None stands for zero."""
    if b is None:
        return None
    if ring is not None and ring.names != gb.ring.names:
        raise RingMismatch("binomial and basis live in different rings")
    if len(b.plus) != gb.ring.nvars:
        raise RingMismatch("binomial length does not match basis ring")
    r = normal_form_pair(b.plus, b.minus, gb.pairs(), gb.ring.key)
    return None if r is None else Binomial(*r)


def contains(ideal: BinomialIdeal, b: Optional[Binomial], budget: Budget = DEFAULT_BUDGET) -> bool:
    return normal_form(b, ideal.groebner(budget)) is None


def _check_same_ring(i: BinomialIdeal, j: BinomialIdeal):
    if i.ring.names != j.ring.names:
        raise RingMismatch(f"rings differ: {i.ring.names} vs {j.ring.names}")


def ideal_equals(i: BinomialIdeal, j: BinomialIdeal, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Equality of ideals by comparing reduced Groebner bases."""
    _check_same_ring(i, j)
    if i.ring.order != j.ring.order:
        j = BinomialIdeal(i.ring, j.generators)
    return i.groebner(budget).elements == j.groebner(budget).elements


def ideal_contains(big: BinomialIdeal, small: BinomialIdeal, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True iff every generator of ``small`` lies in ``big``."""
    _check_same_ring(big, small)
    gb = big.groebner(budget)
    return all(normal_form(g, gb) is None for g in small.generators)


def ideal_sum(*ideals: BinomialIdeal) -> BinomialIdeal:
    if not ideals:
        raise ValueError("ideal_sum needs at least one ideal")
    for other in ideals[1:]:
        _check_same_ring(ideals[0], other)
    ring = ideals[0].ring
    return BinomialIdeal.from_binomials(ring, (g for i in ideals for g in i.generators))


def substitute(ideal: BinomialIdeal, mapping: dict[str, str]) -> BinomialIdeal:
    """Rename variables (e.g. ``{"x5": "z"}``); exponents are untouched."""
    for old in mapping:
        ideal.ring.index(old)
    ring = ideal.ring.rename(mapping)
    return BinomialIdeal.from_binomials(ring, ideal.generators)


def extend_ring(ideal: BinomialIdeal, ring: RingContext,
                mapping: Optional[dict[str, str]] = None) -> BinomialIdeal:
    """Embed ``ideal`` into ``ring``; variables map by name unless ``mapping`` given."""
    mapping = mapping or {}
    targets = [mapping.get(nm, nm) for nm in ideal.ring.names]
    if len(set(targets)) != len(targets):
        raise ValueError("variable injection is not injective")
    try:
        pos = [ring.index(t) for t in targets]
    except ValueError:
        missing = [t for t in targets if t not in ring.names]
        raise ValueError(f"variables {missing} missing from target ring") from None

    def lift(m):
        out = [0] * ring.nvars
        for p, e in zip(pos, m):
            out[p] = e
        return tuple(out)

    return BinomialIdeal.from_binomials(
        ring, (Binomial(lift(g.plus), lift(g.minus)) for g in ideal.generators))


def is_standard_homogeneous(ideal: BinomialIdeal) -> bool:
    return all(g.is_standard_homogeneous() for g in ideal.generators)


# -- saturation --------------------------------------------------------------

def _positive_grading(pairs, n: int, hint: Optional[Sequence[int]]) -> Optional[tuple[int, ...]]:
    cands = []
    if hint is not None:
        cands.append(tuple(hint))
    cands.append((1,) * n)
    for w in cands:
        if len(w) == n and all(x > 0 for x in w) and all(
                sum(wi * (x - y) for wi, x, y in zip(w, a, b)) == 0 for a, b in pairs):
            return w
    return None


def _scaled_degree(weights: Sequence[int]) -> Callable[[Monomial], int]:
    # weighted degree on the scale of standard degree, so one cap fits all orders
    total, n = sum(weights), len(weights)
    return lambda m: sum(w * e for w, e in zip(weights, m)) * n // total


def _saturate_var_graded(pairs, var: int, weights, budget: Budget):
    key = weighted_revlex_key(weights, var)
    gb = groebner_pairs(pairs, key, budget, _scaled_degree(weights))
    out, changed = [], False
    for a, b in gb:
        k = min(a[var], b[var])
        if k:
            changed = True
            a = a[:var] + (a[var] - k,) + a[var + 1:]
            b = b[:var] + (b[var] - k,) + b[var + 1:]
        out.append((a, b))
    return out, changed


def _saturate_var_eliminate(pairs, var: int, budget: Budget):
    # (I + <t*x_var - 1>) intersected with k[x], t placed first
    n = len(pairs[0][0]) if pairs else 0
    ext = [((0,) + a, (0,) + b) for a, b in pairs]
    tx = [0] * (n + 1)
    tx[0] = 1
    tx[var + 1] = 1
    ext.append((tuple(tx), (0,) * (n + 1)))
    gb = groebner_pairs(ext, elimination_key(n + 1, [0]), budget)
    out = [(a[1:], b[1:]) for a, b in gb if a[0] == 0 and b[0] == 0]
    return out, True


def _saturate_pairs(pairs, n: int, budget: Budget, weights=None):
    pairs = [p for p in pairs if p[0] != p[1]]
    if not pairs:
        return []
    w = _positive_grading(pairs, n, weights)
    for _ in range(n + 1):
        changed_any = False
        for var in range(n):
            if w is not None:
                pairs, changed = _saturate_var_graded(pairs, var, w, budget)
            else:
                pairs, changed = _saturate_var_eliminate(pairs, var, budget)
            changed_any = changed_any or changed
        # each pass saturates every variable; a second pass only confirms
        if not changed_any or all(_coprime(a, b) for a, b in pairs):
            break
    return pairs


def saturate_all_variables(ideal: BinomialIdeal, budget: Budget = DEFAULT_BUDGET,
                           weights: Optional[Sequence[int]] = None) -> BinomialIdeal:
    """``I : (x_1 ... x_n)^inf`` one variable at a time.

    Uses a weighted reverse-lex order with the saturating variable last when
    the generators are homogeneous for a positive grading (``weights`` or the
    standard one); otherwise eliminates ``t`` from ``I + <t x_i - 1>``.
    """
    n = ideal.ring.nvars
    pairs = _saturate_pairs([(g.plus, g.minus) for g in ideal.generators], n, budget, weights)
    return BinomialIdeal.from_binomials(ideal.ring, (Binomial(a, b) for a, b in pairs))


# -- toric ideals ------------------------------------------------------------

def size_reduce(basis: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Greedy pairwise length reduction of a lattice basis.

    Subtracts integer multiples of one vector from another while the
    squared length strictly drops; the lattice spanned is unchanged.
    """
    vecs = [list(v) for v in basis]
    norms = [sum(x * x for x in v) for v in vecs]
    improved = True
    while improved:
        improved = False
        for i in range(len(vecs)):
            for j in range(len(vecs)):
                if i == j or not norms[j]:
                    continue
                dot = sum(a * b for a, b in zip(vecs[i], vecs[j]))
                q = round(Fraction(dot, norms[j]))
                if q == 0:
                    continue
                cand = [a - q * b for a, b in zip(vecs[i], vecs[j])]
                cn = sum(x * x for x in cand)
                if cn < norms[i]:
                    vecs[i], norms[i] = cand, cn
                    improved = True
    order = sorted(range(len(vecs)), key=lambda i: (norms[i], vecs[i]))
    return [tuple(vecs[i]) for i in order]


def toric_grading(m: IntMatrix) -> Optional[tuple[int, ...]]:
    """A positive grading making every binomial of ``I_M`` homogeneous."""
    if m.is_nonnegative():
        w = tuple(sum(col) for col in m.columns())
        if all(x > 0 for x in w):
            return w
    if homogeneity_certificate(m) is not None:
        return (1,) * m.cols
    return None


def lattice_ideal_generators(ring: RingContext, basis) -> BinomialIdeal:
    return BinomialIdeal.from_binomials(ring, (binomial_from_vector(ring, v) for v in basis))


def toric_ideal(m: IntMatrix, ring: Optional[RingContext] = None,
                budget: Budget = DEFAULT_BUDGET, prefix: str = "x") -> BinomialIdeal:
    """Toric ideal of ``m``: kernel lattice, lattice ideal, saturation.

    The returned ideal is generated by its reduced Groebner basis in the
    ring's order.
    """
    if ring is None:
        ring = RingContext.indexed(prefix, m.cols)
    if ring.nvars != m.cols:
        raise RingMismatch(f"ring has {ring.nvars} variables, matrix has {m.cols} columns")
    basis = size_reduce(kernel_lattice_basis(m))
    pairs = []
    for v in basis:
        pairs.append((tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v)))
    sat = _saturate_pairs(pairs, m.cols, budget, toric_grading(m))
    gb_pairs = groebner_pairs(sat, ring.key, budget) if sat else []
    gb = GroebnerBasis(ring, tuple(Binomial(a, b) for a, b in gb_pairs))
    ideal = BinomialIdeal(ring, gb.elements)
    ideal._cache[("gb", ring.order)] = gb
    return ideal


def toric_height(m: IntMatrix) -> int:
    """Height of ``I_M``: number of columns minus rank."""
    from .linalg import rank
    return m.cols - rank(m)


# -- minimal generators ------------------------------------------------------

def minimal_generators(ideal: BinomialIdeal, grading: IntMatrix,
                       budget: Budget = DEFAULT_BUDGET) -> list[Binomial]:
    """A minimal generating set for an ideal graded by the columns of ``grading``.

    Candidates (the reduced Groebner basis) are scanned by increasing degree
    under a positive grading; each is kept iff it is not already in the
    ideal of the kept ones.
    """
    if grading.cols != ideal.ring.nvars:
        raise RingMismatch("grading has wrong number of columns")
    for g in ideal.generators:
        if any(grading.apply(g.vector())):
            raise ValueError(f"generator {format_binomial(ideal.ring, g)} is not homogeneous")
    w = toric_grading(grading)
    if w is None:
        raise ValueError("grading matrix does not induce a positive grading")
    cands = list(ideal.groebner(budget).elements)

    def wdeg(b):
        return sum(x * y for x, y in zip(w, b.plus))

    cands.sort(key=lambda b: (wdeg(b), ideal.ring.key(b.plus)))
    kept: list[Binomial] = []
    kept_gb: list = []
    key = ideal.ring.key
    for b in cands:
        if kept and normal_form_pair(b.plus, b.minus, kept_gb, key) is None:
            continue
        kept.append(b)
        kept_gb = groebner_pairs([(k.plus, k.minus) for k in kept], key, budget)
    return kept


def ring_of(names: Iterable[str], order: str = "grevlex") -> RingContext:
    return RingContext(tuple(names), order)


def all_pairs_in_fiber(monomials: Sequence[Monomial]):
    """Pairs of distinct monomials (used by brute-force oracles)."""
    return combinations(monomials, 2)
