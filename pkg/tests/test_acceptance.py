"""Acceptance criteria 1-9, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import functools
import time

from toriglue.betti import parse_betti, render, tensor, totals
from toriglue.binomials import (
    BinomialIdeal, RingContext, extend_ring, format_binomial, ideal_equals, ideal_sum,
    minimal_generators, toric_ideal,
)
from toriglue.gluing import (
    STATUS_BUDGET, glue_homogeneous, glue_sifts, sift_ring, sift_split, split_sum, verify_gluing,
)
from toriglue.graphs import check_graph_splitting, incidence_matrix
from toriglue.linalg import IntMatrix, rank
from toriglue.numerical import iterate_glue, self_glue_numerical, verify_numerical
from toriglue.transform import homogeneous_sift

import corpus
from conftest import EXAMPLES, load_graph, load_matrix
from reference import (
    BETTI_TENSOR, GLUED_3X5, IDEAL_A_3X5, IDEAL_B_3X5, ITERATED_D, ITERATED_E, SELF_GLUE_17_18,
    SELF_GLUE_5_16, SIFT_A, SIFT_B, SIFT_GLUED, SIFT_GLUED_IDEAL,
)


def criterion(number: int, title: str, seconds: float):
    """Time the check, enforce its limit and print one result line."""
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            detail, ok = "", False
            try:
                detail = fn() or ""
                elapsed = time.perf_counter() - start
                assert elapsed < seconds, f"took {elapsed:.1f} s, limit {seconds} s"
                ok = True
            except AssertionError as exc:
                detail = str(exc).splitlines()[0] if str(exc) else "assertion failed"
                raise
            finally:
                elapsed = time.perf_counter() - start
                verdict = "PASS" if ok else "FAIL"
                print(f"\n[criterion {number}] {verdict} {title} ({elapsed:.2f} s) {detail}")
        return run
    return wrap


def parsed(ring, lines):
    return BinomialIdeal.parse(ring, lines)


@criterion(1, "3x5 gluing reproduction", 30)
def test_criterion_1_gluing_reproduction():
    a, b = load_matrix("a3x5.mat"), load_matrix("b3x5.mat")
    xr, yr = RingContext.indexed("x", 5), RingContext.indexed("y", 5)
    assert ideal_equals(toric_ideal(a, xr), parsed(xr, IDEAL_A_3X5)), "I_A differs"
    assert ideal_equals(toric_ideal(b, yr), parsed(yr, IDEAL_B_3X5)), "I_B differs"
    g = glue_homogeneous(a, b)
    assert g.c_tilde.to_lists() == GLUED_3X5, "glued matrix differs"
    rep = verify_gluing(a, b, g)
    assert rep.ok, f"verification {rep.status}"
    return f"checks={sorted(k for k, v in rep.checks.items() if v)}"


@criterion(2, "3x5 splitting", 60)
def test_criterion_2_splitting():
    a, b = load_matrix("a3x5.mat"), load_matrix("b3x5.mat")
    g, rep = split_sum(a, b)
    assert rep.ok, f"split {rep.status}"
    assert rep.heights == (2, 2, 4), f"heights {rep.heights}"
    assert rank(g.c) == 5
    ring = g.ring_c
    a_side = parsed(RingContext(ring.names[:5]), [s.replace("x5", "z") for s in IDEAL_A_3X5])
    b_side = parsed(RingContext(ring.names[4:]), [s.replace("y1", "z") for s in IDEAL_B_3X5])
    printed_sum = ideal_sum(extend_ring(a_side, ring), extend_ring(b_side, ring))
    assert ideal_equals(toric_ideal(g.c, ring), printed_sum), "I_C differs from printed sum"
    return "heights 2+2=4, rank 5"


@criterion(3, "Betti tensor diagram", 1)
def test_criterion_3_betti():
    a = parse_betti((EXAMPLES / "betti_a.betti").read_text().splitlines())
    b = parse_betti((EXAMPLES / "betti_b.betti").read_text().splitlines())
    t = tensor(a, b)
    assert render(t) == BETTI_TENSOR, "diagram differs"
    assert totals(t) == (1, 8, 23, 30, 18, 4)
    return "totals 1 8 23 30 18 4"


@criterion(4, "homogeneous sift gluing", 60)
def test_criterion_4_sifts():
    a, b = load_matrix("sift_a.mat"), load_matrix("sift_b.mat")
    xr, yr = RingContext.indexed("x", 5), RingContext.indexed("y", 3)
    assert ideal_equals(homogeneous_sift(a, xr), parsed(xr, SIFT_A)), "sift of A differs"
    assert ideal_equals(homogeneous_sift(b, yr), parsed(yr, SIFT_B)), "sift of B differs"
    c = glue_sifts(a, b)
    assert c.to_lists() == SIFT_GLUED, "glued matrix differs"
    ring = sift_ring(5, 3)
    assert ideal_equals(toric_ideal(c, ring), parsed(ring, SIFT_GLUED_IDEAL)), "I_C differs"
    assert sift_split(a, b)[1].ok
    d = IntMatrix.from_rows([c.row(i) for i in range(c.rows) if i != 2])
    counts = (len(minimal_generators(toric_ideal(a, xr), a)),
              len(minimal_generators(toric_ideal(b, yr), b)),
              len(minimal_generators(toric_ideal(d, ring), d)))
    assert counts == (3, 3, 10), f"minimal generator counts {counts}"
    return "minimal generators 3, 3, 10"


@criterion(5, "graph edge gluing splits", 120)
def test_criterion_5_graphs():
    square, square2 = load_graph("square.g"), load_graph("square2.g")
    bowtie, bowtie2 = load_graph("bowtie.g"), load_graph("bowtie2.g")
    sq = check_graph_splitting(square, square2)
    assert sq.graph_report.ok and sq.status == "ok", "squares do not split"
    assert len(toric_ideal(incidence_matrix(square)).generators) == 1
    assert len(sq.graph_report.rhs) == 2
    bt = check_graph_splitting(bowtie, bowtie2)
    assert not bt.graph_report.ok, "bow ties split"
    lhs = BinomialIdeal(bt.gluing.ring, bt.graph_report.lhs.elements)
    n_min = len(minimal_generators(lhs, incidence_matrix(bt.gluing.graph)))
    assert n_min == 5, f"glued bow ties need {n_min} generators"
    assert len(bt.graph_report.rhs) == 2
    assert bt.hyper_report.ok, "hypergraph split fails"
    mixed = check_graph_splitting(square, bowtie2)
    assert mixed.graph_report.ok, "square + bow tie does not split"
    return "squares split, bow ties 5 vs 2, hypergraph ok, mixed split"


@criterion(6, "numerical selfgluing", 120)
def test_criterion_6_selfglue():
    a = [5, 12, 13, 16]
    c = self_glue_numerical(a, 17, 18)
    assert list(c.matrix.row(0)) == SELF_GLUE_17_18
    assert [format_binomial(c.ring, g) for g in c.glue_binomials] == ["x1*x3 - y1*y2"]
    assert verify_numerical(c).ok, "I_C is not I_A + I_B + glue"
    d = self_glue_numerical(a, 5, 16)
    assert list(d.matrix.row(0)) == SELF_GLUE_5_16
    assert d.splits and verify_numerical(d).ok, "I_D does not split"
    return "C and D reproduced and verified"


@criterion(7, "iterated gluing", 300)
def test_criterion_7_iterated():
    parts = [[5, 8, 11], [7, 10, 12], [6, 11, 14]]
    d = iterate_glue(parts, [(17, 13), (17, 176)])
    e = iterate_glue(parts, [(7, 11), (6, 77)])
    assert list(d.matrix.row(0)) == ITERATED_D, "D differs"
    assert list(e.matrix.row(0)) == ITERATED_E, "E differs"
    rd, re = verify_numerical(d), verify_numerical(e)
    assert rd.ok, f"D verification {rd.status}"
    assert re.ok or re.status == STATUS_BUDGET, f"E verification {re.status}"
    return f"D {rd.status}, E {re.status}"


@criterion(8, "randomized gluing properties", 600)
def test_criterion_8_properties():
    tallies = {
        "gluing": corpus.gluing_corpus(count=200, seed=2024),
        "operations": corpus.operations_corpus(count=200, seed=7),
        "kernel": corpus.kernel_corpus(count=200, seed=13),
        "oracle": corpus.oracle_corpus(count=200, seed=99, max_degree=8),
    }
    for name, t in tallies.items():
        assert not t.failures, f"{name}: {t.failures[:2]}"
        assert t.skip_rate < 0.05, f"{name}: skip rate {t.skip_rate:.2%}"
    g = tallies["gluing"]
    assert g.notes["delta=-1"] and g.notes["delta=0"], "one offset branch never exercised"
    skipped = sum(t.skipped for t in tallies.values())
    return (f"{g.total} pairs (delta -1: {g.notes['delta=-1']}, 0: {g.notes['delta=0']}), "
            f"skipped {skipped}")


@criterion(9, "graph dimension formula and splitting criterion", 300)
def test_criterion_9_graph_corpus():
    dim = corpus.dimension_corpus(count=100, seed=31)
    split = corpus.graph_split_corpus(count=50, seed=57)
    assert not dim.failures, f"dimension: {dim.failures[:2]}"
    assert not split.failures, f"splitting: {split.failures[:2]}"
    assert split.skip_rate < 0.05
    return (f"{dim.total} graphs, {split.total} glued pairs "
            f"({split.notes['split']} split, {split.notes['no-split']} not)")
