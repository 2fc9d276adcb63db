"""Graphs and 3-uniform hypergraphs as sources of toric ideals.

Vertices are ``0..n-1`` internally; files and printed output are 1-based.
Incidence matrices have one row per vertex and one column per edge, so
every column sums to 2 (3 for hypergraphs).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import networkx as nx

from .binomials import BinomialIdeal, Budget, DEFAULT_BUDGET, RingContext, toric_ideal
from .gluing import (
    STATUS_BUDGET, STATUS_FAIL, STATUS_OK, GluedResult, GluingSpec, SplitReport,
    check_splitting, glue_homogeneous, split_sum,
)
from .linalg import IntMatrix, rank

TAG_SPLIT = "split"
TAG_NO_SPLIT = "no-split"
TAG_HYPERGRAPH = "hypergraph-split"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u + 1}, {v + 1}) uses a missing vertex")
            if u == v:
                raise GraphError(f"loop at vertex {u + 1}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"repeated edge ({u + 1}, {v + 1})")
            seen.add(key)
        if self.labels and len(self.labels) != len(self.edges):
            raise GraphError("one label per edge")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("edge labels must be unique")

    @property
    def p(self) -> int:
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def edge_index(self, edge) -> int:
        """Index of an edge given as an index, a label, or a vertex pair."""
        if isinstance(edge, int):
            if not 0 <= edge < self.p:
                raise GraphError(f"edge index {edge} out of range")
            return edge
        if isinstance(edge, str):
            if edge not in self.labels:
                raise GraphError(f"no edge labelled {edge!r}")
            return self.labels.index(edge)
        key = frozenset(edge)
        for k, e in enumerate(self.edges):
            if frozenset(e) == key:
                return k
        raise GraphError(f"no edge between {tuple(edge)}")


@dataclass(frozen=True)
class Hypergraph3:
    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for e in self.edges:
            if len(set(e)) != 3 or not all(0 <= v < self.n for v in e):
                raise GraphError(f"bad hyperedge {tuple(v + 1 for v in e)}")

    @property
    def p(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class EdgeGluingSpec:
    """Glue edge ``e1`` of the first graph to ``e2`` of the second.

    Without ``flip`` the first endpoint of ``e1`` meets the first endpoint
    of ``e2``; ``flip`` uses the other pairing. ``None`` picks the last
    edge of the first graph and the first edge of the second.
    """

    e1: Optional[int] = None
    e2: Optional[int] = None
    flip: bool = False

    def resolve(self, g1: Graph, g2: Graph) -> tuple[int, int]:
        e1 = g1.p - 1 if self.e1 is None else g1.edge_index(self.e1)
        e2 = 0 if self.e2 is None else g2.edge_index(self.e2)
        return e1, e2


def incidence_matrix(g: Graph) -> IntMatrix:
    if g.p == 0:
        raise GraphError("graph has no edges")
    cols = []
    for u, v in g.edges:
        col = [0] * g.n
        col[u] = col[v] = 1
        cols.append(col)
    return IntMatrix.from_columns(cols)


def hypergraph_incidence(h: Hypergraph3) -> IntMatrix:
    cols = []
    for e in h.edges:
        col = [0] * h.n
        for v in e:
            col[v] = 1
        cols.append(col)
    return IntMatrix.from_columns(cols)


def hypergraph_from_matrix(m: IntMatrix) -> Hypergraph3:
    edges = []
    for col in m.columns():
        if any(x not in (0, 1) for x in col) or sum(col) != 3:
            raise GraphError("matrix is not the incidence matrix of a 3-uniform hypergraph")
        edges.append(tuple(i for i, x in enumerate(col) if x))
    return Hypergraph3(m.rows, tuple(edges))


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(g.to_networkx())


def toric_ideal_of_graph(g: Graph, ring: Optional[RingContext] = None,
                         budget: Budget = DEFAULT_BUDGET) -> BinomialIdeal:
    return toric_ideal(incidence_matrix(g), ring, budget)


def edge_names(g: Graph, glue_edge: int, prefix: str) -> tuple[str, ...]:
    """Positional names ``prefix<k>`` with the glue edge renamed ``z``."""
    return tuple("z" if k == glue_edge else f"{prefix}{k + 1}" for k in range(g.p))


@dataclass(frozen=True)
class EdgeGluing:
    """A graph glued from two parts, with the bookkeeping to compare ideals."""

    graph: Graph
    ring: RingContext
    e1: int
    e2: int
    names1: tuple[str, ...]
    names2: tuple[str, ...]


def glue_graphs_along_edge(g1: Graph, g2: Graph,
                           spec: EdgeGluingSpec = EdgeGluingSpec()) -> EdgeGluing:
    """Identify edge ``e1`` of ``g1`` with edge ``e2`` of ``g2``.

    Vertices come out as the other vertices of ``g1``, the two shared
    endpoints, then the other vertices of ``g2``; edges as ``g1`` without
    ``e1``, the shared edge, then ``g2`` without ``e2``. This is the block
    layout in which the incidence matrix visibly contains both parts.
    """
    e1, e2 = spec.resolve(g1, g2)
    a, b = g1.edges[e1]
    c, d = g2.edges[e2]
    if spec.flip:
        c, d = d, c
    rest1 = [v for v in range(g1.n) if v not in (a, b)]
    rest2 = [v for v in range(g2.n) if v not in (c, d)]
    k = len(rest1)
    map1 = {v: i for i, v in enumerate(rest1)}
    map1[a], map1[b] = k, k + 1
    map2 = {v: k + 2 + i for i, v in enumerate(rest2)}
    map2[c], map2[d] = k, k + 1
    names1 = edge_names(g1, e1, "x")
    names2 = edge_names(g2, e2, "y")
    edges, names = [], []
    for j, (u, v) in enumerate(g1.edges):
        if j != e1:
            edges.append((map1[u], map1[v]))
            names.append(names1[j])
    edges.append((k, k + 1))
    names.append("z")
    for j, (u, v) in enumerate(g2.edges):
        if j != e2:
            edges.append((map2[u], map2[v]))
            names.append(names2[j])
    glued = Graph(k + 2 + len(rest2), tuple(edges), tuple(names))
    return EdgeGluing(glued, RingContext(tuple(names)), e1, e2, names1, names2)


def _components_without(g: Graph, u: int, v: int) -> list[list[int]]:
    nxg = g.to_networkx()
    nxg.remove_nodes_from([u, v])
    comps = [sorted(c) for c in nx.connected_components(nxg)]
    return sorted(comps)


def _induced_part(g: Graph, keep: Sequence[int], e: int, first: bool) -> Graph:
    """Subgraph on ``keep`` with edge ``e`` placed last (``first=False``) or first."""
    index = {v: i for i, v in enumerate(sorted(keep))}
    inside = [k for k, (a, b) in enumerate(g.edges) if a in index and b in index and k != e]
    order = [e] + inside if first else inside + [e]
    labels = tuple(g.labels[k] for k in order) if g.labels else ()
    return Graph(len(index), tuple((index[g.edges[k][0]], index[g.edges[k][1]]) for k in order),
                 labels)


def split_along_edge(g: Graph, edge) -> Optional[tuple[Graph, Graph]]:
    """Split ``g`` at an edge into two connected graphs sharing it, or None.

    The components of ``g`` minus both endpoints are grouped as the one
    holding the smallest vertex against all the others. The first part
    lists the split edge last and the second part lists it first, so
    gluing them with the default edge choice rebuilds a graph isomorphic to ``g``.
    """
    e = g.edge_index(edge)
    u, v = g.edges[e]
    comps = _components_without(g, u, v)
    if len(comps) < 2:
        return None
    side1 = comps[0] + [u, v]
    side2 = [w for c in comps[1:] for w in c] + [u, v]
    return _induced_part(g, side1, e, first=False), _induced_part(g, side2, e, first=True)


def splittable_edges(g: Graph) -> list[int]:
    return [k for k in range(g.p) if split_along_edge(g, k) is not None]


def graphs_to_hypergraph(g1: Graph, g2: Graph,
                         spec: EdgeGluingSpec = EdgeGluingSpec()) -> tuple[Hypergraph3, GluedResult]:
    """Glue the incidence matrices of two graphs into a 3-uniform hypergraph."""
    e1, e2 = spec.resolve(g1, g2)
    glued = glue_homogeneous(incidence_matrix(g1), incidence_matrix(g2), GluingSpec(e1, e2))
    assert glued.e == 0 and glued.delta == -1
    return hypergraph_from_matrix(glued.c), glued


@dataclass
class GraphSplitCheck:
    """Outcome of testing whether gluing two graphs splits the toric ideal.

    ``graph_report`` compares ``I_G`` with ``I_G1 + I_G2``; when that fails
    (or when asked) ``hyper_report`` does the same for the hypergraph glue.
    """

    tag: str
    status: str
    gluing: EdgeGluing
    graph_report: SplitReport
    bipartite: tuple[bool, bool]
    hypergraph: Optional[Hypergraph3] = None
    hyper_glued: Optional[GluedResult] = None
    hyper_report: Optional[SplitReport] = None
    checks: dict = field(default_factory=dict)


def check_graph_splitting(g1: Graph, g2: Graph, spec: EdgeGluingSpec = EdgeGluingSpec(),
                          budget: Budget = DEFAULT_BUDGET, jobs: int = 1,
                          hypergraph: Optional[bool] = None) -> GraphSplitCheck:
    """Glue two connected graphs along an edge and test ``I_G = I_G1 + I_G2``.

    The split is expected exactly when at least one part is bipartite. If
    it fails, the incidence matrices are glued into a hypergraph whose
    ideal should split. ``hypergraph=True`` forces that second step.
    """
    for name, g in (("first", g1), ("second", g2)):
        if not g.is_connected():
            raise GraphError(f"{name} graph is not connected")
    glu = glue_graphs_along_edge(g1, g2, spec)
    m1 = incidence_matrix(g1)
    m2 = incidence_matrix(g2)
    report = check_splitting(incidence_matrix(glu.graph), glu.ring,
                             [(m1, glu.names1), (m2, glu.names2)], (), budget, jobs)
    bip = (is_bipartite(g1), is_bipartite(g2))
    expect = any(bip)
    r1, r2, rg = report.ranks
    out = GraphSplitCheck(TAG_SPLIT if report.ok else TAG_NO_SPLIT, report.status, glu, report, bip)
    out.checks["rank_additivity"] = (rg == r1 + r2 - 1) == expect
    out.checks["glued_bipartite"] = is_bipartite(glu.graph) == all(bip)
    if report.status != STATUS_BUDGET:
        out.checks["bipartite_criterion"] = report.ok == expect
    if hypergraph or (hypergraph is None and not report.ok):
        h, glued = graphs_to_hypergraph(g1, g2, spec)
        _, hrep = split_sum(m1, m2, GluingSpec(*spec.resolve(g1, g2)), budget, jobs)
        out.hypergraph, out.hyper_glued, out.hyper_report = h, glued, hrep
        out.checks["hypergraph_counts"] = (h.n == g1.n + g2.n - 1 and h.p == g1.p + g2.p - 1)
        if hrep.ok and not report.ok:
            out.tag = TAG_HYPERGRAPH
    statuses = [report.status] + ([out.hyper_report.status] if out.hyper_report else [])
    if STATUS_BUDGET in statuses:
        out.status = STATUS_BUDGET
    elif all(out.checks.values()) and (report.ok or (out.hyper_report and out.hyper_report.ok)):
        out.status = STATUS_OK
    else:
        out.status = STATUS_FAIL
    return out


def rank_of_graph(g: Graph) -> int:
    return rank(incidence_matrix(g))
