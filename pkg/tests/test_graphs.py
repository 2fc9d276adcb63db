import random

import networkx as nx
import pytest

from toriglue.binomials import BinomialIdeal, ideal_equals, minimal_generators
from toriglue.graphs import (
    TAG_HYPERGRAPH, TAG_SPLIT, EdgeGluingSpec, Graph, GraphError, Hypergraph3,
    check_graph_splitting, glue_graphs_along_edge, graphs_to_hypergraph, hypergraph_from_matrix,
    hypergraph_incidence, incidence_matrix, is_bipartite, rank_of_graph, split_along_edge,
    splittable_edges, toric_ideal_of_graph,
)
from toriglue.linalg import HomogeneityCertificate, IntMatrix

from conftest import load_graph
from corpus import random_connected_graph

SQUARE, SQUARE2 = load_graph("square.g"), load_graph("square2.g")
BOWTIE, BOWTIE2 = load_graph("bowtie.g"), load_graph("bowtie2.g")


def isomorphic(g: Graph, h: Graph) -> bool:
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


class TestBasics:
    def test_validation(self):
        with pytest.raises(GraphError):
            Graph(2, ((0, 0),))
        with pytest.raises(GraphError):
            Graph(2, ((0, 1), (1, 0)))
        with pytest.raises(GraphError):
            Graph(2, ((0, 2),))
        with pytest.raises(GraphError):
            Hypergraph3(3, ((0, 1, 1),))

    def test_edge_lookup(self):
        assert SQUARE.edge_index("z") == 3
        assert SQUARE.edge_index((3, 1)) == 3
        assert SQUARE.edge_index(0) == 0
        with pytest.raises(GraphError):
            SQUARE.edge_index("q")

    def test_incidence(self):
        m = incidence_matrix(BOWTIE)
        assert m.shape == (5, 6)
        assert all(sum(c) == 2 for c in m.columns())
        assert max(sum(m.row(i)) for i in range(5)) == 4
        assert HomogeneityCertificate((1,) * 5, 2).check(m)

    def test_bipartite(self):
        assert is_bipartite(SQUARE)
        assert not is_bipartite(BOWTIE)
        glued = glue_graphs_along_edge(SQUARE, SQUARE2).graph
        assert is_bipartite(glued)
        assert rank_of_graph(glued) == glued.n - 1 == 5

    def test_trees_have_zero_ideal(self):
        rng = random.Random(3)
        for _ in range(10):
            n = rng.randint(2, 8)
            tree = Graph(n, tuple((rng.randrange(v), v) for v in range(1, n)))
            assert toric_ideal_of_graph(tree).is_zero()

    def test_hypergraph_roundtrip(self):
        h = Hypergraph3(4, ((0, 1, 2), (1, 2, 3)))
        m = hypergraph_incidence(h)
        assert all(sum(c) == 3 for c in m.columns())
        assert hypergraph_from_matrix(m) == h
        with pytest.raises(GraphError):
            hypergraph_from_matrix(IntMatrix.from_rows([[1], [1]]))


class TestToricIdeals:
    def test_square(self):
        i = toric_ideal_of_graph(SQUARE)
        assert len(i.generators) == 1

    def test_bowtie(self):
        i = toric_ideal_of_graph(BOWTIE)
        expected = BinomialIdeal.parse(i.ring, ["x1*x3*x5 - x2*x4*x6"])
        assert ideal_equals(i, expected)


class TestGlueAndSplit:
    def test_counts(self):
        glu = glue_graphs_along_edge(BOWTIE, BOWTIE2)
        assert glu.graph.n == 5 + 5 - 2
        assert glu.graph.p == 6 + 6 - 1
        assert glu.graph.labels.count("z") == 1

    def test_single_edges(self):
        edge = Graph(2, ((0, 1),))
        glu = glue_graphs_along_edge(edge, edge)
        assert glu.graph.n == 2 and glu.graph.p == 1
        h, _ = graphs_to_hypergraph(edge, edge)
        assert (h.n, h.p) == (3, 1)

    def test_flip(self):
        path = Graph(3, ((0, 1), (1, 2)))
        straight = glue_graphs_along_edge(path, path, EdgeGluingSpec(1, 0)).graph
        flipped = glue_graphs_along_edge(path, path, EdgeGluingSpec(1, 0, flip=True)).graph
        assert not isomorphic(straight, flipped)

    def test_split_known(self):
        glued = glue_graphs_along_edge(SQUARE, SQUARE2).graph
        parts = split_along_edge(glued, "z")
        assert parts is not None
        assert isomorphic(parts[0], SQUARE) and isomorphic(parts[1], SQUARE2)
        assert split_along_edge(SQUARE, "z") is None
        assert glued.labels.index("z") in splittable_edges(glued)

    def test_roundtrip_random(self):
        rng = random.Random(23)
        for _ in range(40):
            g1 = random_connected_graph(rng, 3, 6)
            g2 = random_connected_graph(rng, 3, 6)
            spec = EdgeGluingSpec(rng.randrange(g1.p), rng.randrange(g2.p), rng.random() < 0.5)
            glu = glue_graphs_along_edge(g1, g2, spec)
            assert glu.graph.n == g1.n + g2.n - 2
            assert glu.graph.p == g1.p + g2.p - 1
            assert is_bipartite(glu.graph) == (is_bipartite(g1) and is_bipartite(g2))
            parts = split_along_edge(glu.graph, "z")
            if parts is None:
                continue
            again = glue_graphs_along_edge(*parts).graph
            assert isomorphic(again, glu.graph)


class TestSplittingCriterion:
    def test_squares(self):
        res = check_graph_splitting(SQUARE, SQUARE2)
        assert res.tag == TAG_SPLIT and res.status == "ok"
        assert len(res.graph_report.rhs) == 2

    def test_bowties(self):
        res = check_graph_splitting(BOWTIE, BOWTIE2)
        assert not res.graph_report.ok
        lhs = BinomialIdeal(res.gluing.ring, res.graph_report.lhs.elements)
        assert len(minimal_generators(lhs, incidence_matrix(res.gluing.graph))) == 5
        assert res.tag == TAG_HYPERGRAPH
        assert res.hyper_report.ok
        assert (res.hypergraph.n, res.hypergraph.p) == (9, 11)
        assert res.hyper_glued.e == 0 and res.hyper_glued.delta == -1

    def test_mixed(self):
        res = check_graph_splitting(SQUARE, BOWTIE2)
        assert res.tag == TAG_SPLIT and res.status == "ok"

    def test_forced_hypergraph(self):
        res = check_graph_splitting(SQUARE, SQUARE2, hypergraph=True)
        assert res.hyper_report.ok and res.hypergraph.p == 7

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            check_graph_splitting(Graph(4, ((0, 1), (2, 3))), SQUARE)
