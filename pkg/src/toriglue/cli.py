"""Command-line interface: ``toriglue <command> [options]``.

Exit codes: 0 ok, 1 mathematically false (a valid answer), 2 usage or
parse error, 3 Groebner budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import betti as bt
from . import graphs as gr
from .binomials import (
    ORDERS, Budget, BudgetExceeded, GroebnerBasis, RingContext,
    format_binomial, minimal_generators, toric_ideal,
)
from .gluing import (
    STATUS_BUDGET, STATUS_FAIL, STATUS_OK, GluingError, GluingSpec, SplitReport,
    glue_homogeneous, sift_split, split_sum, verify_gluing,
)
from .io import (
    ParseError, format_graph, format_hypergraph, matrix_to_json, parse_graph, parse_matrix,
    read_text,
)
from .linalg import IntMatrix, MatrixError, format_matrix, homogeneity_certificate, kernel_lattice_basis, rank
from .numerical import MembershipError, iterate_glue, self_glue_numerical, verify_numerical
from .transform import (
    IllegalOperation, NotHomogeneous, equivalent, homogenize, two_dim_normal_form,
)

EXIT = {STATUS_OK: 0, STATUS_FAIL: 1, STATUS_BUDGET: 3}
USAGE_ERRORS = (ParseError, MatrixError, gr.GraphError, GluingError, MembershipError,
                NotHomogeneous, IllegalOperation, bt.BettiError, ValueError)


@dataclass
class Report:
    status: str = STATUS_OK
    payload: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)

    def add(self, *lines: str):
        self.lines.extend(lines)

    def block(self, title: str, body: str):
        self.lines.append(title)
        self.lines.extend(body.splitlines() if body else ["0"])


# -- rendering helpers ---------------------------------------------------------

def _gb_lines(gb: Optional[GroebnerBasis]) -> list[str]:
    return [] if gb is None else [format_binomial(gb.ring, b) for b in gb.elements]


def _split_payload(rep: SplitReport) -> dict:
    return {
        "status": rep.status,
        "checks": rep.checks,
        "ranks": list(rep.ranks),
        "heights": list(rep.heights),
        "lhs": _gb_lines(rep.lhs),
        "rhs": _gb_lines(rep.rhs),
        "message": rep.message,
    }


def _split_lines(out: Report, rep: SplitReport, lhs_title: str, rhs_title: str,
                 show_ideals: bool = True):
    out.add(f"status: {rep.status}")
    if rep.checks:
        out.add("checks: " + " ".join(f"{k}={'yes' if v else 'no'}"
                                      for k, v in rep.checks.items()))
    if rep.ranks:
        out.add("ranks: " + " ".join(map(str, rep.ranks)))
        out.add("heights: " + " ".join(map(str, rep.heights)))
    if rep.message:
        out.add(f"note: {rep.message}")
    if show_ideals and rep.lhs is not None:
        out.block(lhs_title, "\n".join(_gb_lines(rep.lhs)))
        out.block(rhs_title, "\n".join(_gb_lines(rep.rhs)))


def _matrix(path: str) -> IntMatrix:
    return parse_matrix(read_text(path))


def _budget(args) -> Budget:
    return Budget(args.budget, args.max_degree)


def _ring(prefix: str, n: int, args) -> RingContext:
    return RingContext.indexed(prefix, n, args.order)


def _col(value: Optional[int], n: int, what: str) -> Optional[int]:
    if value is None:
        return None
    if not 1 <= value <= n:
        raise ValueError(f"{what} must be between 1 and {n}")
    return value - 1


# -- commands ------------------------------------------------------------------

def cmd_rank(args) -> Report:
    m = _matrix(args.matrix)
    r = rank(m)
    out = Report(payload={"rank": r})
    out.add(str(r))
    return out


def cmd_kernel(args) -> Report:
    m = _matrix(args.matrix)
    basis = kernel_lattice_basis(m)
    out = Report(payload={"basis": [list(v) for v in basis]})
    out.add(f"{len(basis)} {m.cols}")
    out.add(*(" ".join(map(str, v)) for v in basis))
    return out


def cmd_homcheck(args) -> Report:
    m = _matrix(args.matrix)
    cert = homogeneity_certificate(m)
    if cert is None:
        out = Report(STATUS_FAIL, {"homogeneous": False})
        out.add("not homogeneous")
        return out
    out = Report(payload={"homogeneous": True, "lambda": list(cert.lam), "degree": cert.degree})
    out.add("homogeneous", "lambda: " + " ".join(map(str, cert.lam)), f"degree: {cert.degree}")
    return out


def cmd_toric(args) -> Report:
    m = _matrix(args.matrix)
    ideal = toric_ideal(m, _ring("x", m.cols, args), _budget(args))
    gens = ideal.generators
    if args.minimal:
        gens = tuple(minimal_generators(ideal, m, _budget(args)))
    text = [format_binomial(ideal.ring, b) for b in gens]
    out = Report(payload={"ring": list(ideal.ring.names), "order": args.order,
                          "minimal": args.minimal, "generators": text})
    out.add(*(text or ["0"]))
    return out


def cmd_sift(args) -> Report:
    m = _matrix(args.matrix)
    h = homogenize(m)
    ideal = toric_ideal(h, _ring(args.prefix, m.cols, args), _budget(args))
    text = [format_binomial(ideal.ring, b) for b in ideal.generators]
    out = Report(payload={"homogenized": matrix_to_json(h), "generators": text})
    out.add(*(text or ["0"]))
    return out


def cmd_homogenize(args) -> Report:
    h = homogenize(_matrix(args.matrix))
    out = Report(payload={"matrix": matrix_to_json(h)})
    out.add(format_matrix(h))
    return out


def cmd_equiv(args) -> Report:
    a, b = _matrix(args.a), _matrix(args.b)
    same = equivalent(a, b, _budget(args))
    out = Report(STATUS_OK if same else STATUS_FAIL, {"equivalent": same})
    out.add("equivalent" if same else "not equivalent")
    return out


def cmd_normalform2d(args) -> Report:
    m = _matrix(args.matrix)
    nf, trace = two_dim_normal_form(m)
    out = Report(payload={
        "matrix": matrix_to_json(nf),
        "operations": [op.describe() for op in trace.ops],
        "column_order": [k + 1 for k in trace.column_order()],
    })
    out.block("operations:", trace.format())
    out.add("columns: " + " ".join(str(k + 1) for k in trace.column_order()))
    out.block("normal form:", format_matrix(nf))
    return out


def _glue_spec(a: IntMatrix, b: IntMatrix, args) -> GluingSpec:
    return GluingSpec(_col(args.col_a, a.cols, "--col-a"), _col(args.col_b, b.cols, "--col-b"))


def cmd_glue(args) -> Report:
    a, b = _matrix(args.a), _matrix(args.b)
    g = glue_homogeneous(a, b, _glue_spec(a, b, args))
    glue = format_binomial(g.ring_tilde, g.glue_binomial)
    out = Report(payload={
        "a_prime": matrix_to_json(g.a_prime), "b_prime": matrix_to_json(g.b_prime),
        "c_tilde": matrix_to_json(g.c_tilde), "e": g.e, "delta": g.delta,
        "ring": list(g.ring_tilde.names), "glue_binomial": glue,
    })
    out.block("glued matrix:", format_matrix(g.c_tilde))
    out.add(f"e: {g.e}", f"delta: {g.delta}",
            "variables: " + " ".join(g.ring_tilde.names), f"glue binomial: {glue}")
    if args.verify:
        rep = verify_gluing(a, b, g, _budget(args), args.jobs)
        out.status = rep.status
        out.payload["report"] = _split_payload(rep)
        _split_lines(out, rep, "toric ideal of glued matrix:", "sum with glue binomial:")
    return out


def cmd_split(args) -> Report:
    a, b = _matrix(args.a), _matrix(args.b)
    g, rep = split_sum(a, b, _glue_spec(a, b, args), _budget(args), args.jobs)
    out = Report(rep.status, {"c": matrix_to_json(g.c), "ring": list(g.ring_c.names),
                              "report": _split_payload(rep)})
    out.block("split matrix:", format_matrix(g.c))
    out.add("variables: " + " ".join(g.ring_c.names))
    _split_lines(out, rep, "toric ideal:", "sum of parts:")
    return out


def cmd_sift_glue(args) -> Report:
    a, b = _matrix(args.a), _matrix(args.b)
    c, rep = sift_split(a, b, _budget(args), args.jobs)
    out = Report(rep.status, {"c": matrix_to_json(c), "report": _split_payload(rep)})
    out.block("glued matrix:", format_matrix(c))
    _split_lines(out, rep, "toric ideal:", "sum of homogenized parts:")
    return out


def _numerical_report(res, args) -> Report:
    glues = [format_binomial(res.ring, b) for b in res.glue_binomials]
    out = Report(payload={"c": matrix_to_json(res.matrix), "ring": list(res.ring.names),
                          "glue_binomials": glues, "merged": list(res.merged)})
    out.add("semigroup: " + " ".join(map(str, res.matrix.row(0))),
            "variables: " + " ".join(res.ring.names))
    out.add(*(f"glue binomial: {t}" for t in glues))
    if not glues:
        out.add("glue binomial: none (columns merged)")
    if args.verify:
        rep = verify_numerical(res, _budget(args), args.jobs)
        out.status = rep.status
        out.payload["report"] = _split_payload(rep)
        _split_lines(out, rep, "toric ideal:", "sum of parts and glue binomials:")
    return out


def cmd_selfglue(args) -> Report:
    return _numerical_report(self_glue_numerical(_matrix(args.matrix), args.k1, args.k2), args)


def _step(text: str) -> tuple[int, int]:
    try:
        k, kk = text.split(":")
        return int(k), int(kk)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k:k', got {text!r}") from None


def cmd_iterate(args) -> Report:
    parts = [_matrix(p) for p in args.parts]
    return _numerical_report(iterate_glue(parts, args.step or []), args)


def _graph(path: str) -> gr.Graph:
    return parse_graph(read_text(path))


def _edge(value: Optional[str], g: gr.Graph, what: str):
    if value is None:
        return None
    if value.isdigit():
        return _col(int(value), g.p, what)
    return g.edge_index(value)


def cmd_graph_toric(args) -> Report:
    g = _graph(args.graph)
    names = g.labels or tuple(f"x{k + 1}" for k in range(g.p))
    ideal = gr.toric_ideal_of_graph(g, RingContext(tuple(names), args.order), _budget(args))
    text = [format_binomial(ideal.ring, b) for b in ideal.generators]
    out = Report(payload={"bipartite": gr.is_bipartite(g), "rank": gr.rank_of_graph(g),
                          "generators": text})
    out.add(f"bipartite: {'yes' if gr.is_bipartite(g) else 'no'}",
            f"rank: {gr.rank_of_graph(g)}")
    out.block("toric ideal:", "\n".join(text))
    return out


def _edge_spec(g1, g2, args) -> gr.EdgeGluingSpec:
    return gr.EdgeGluingSpec(_edge(args.e1, g1, "--e1"), _edge(args.e2, g2, "--e2"), args.flip)


def cmd_graph_glue(args) -> Report:
    g1, g2 = _graph(args.g1), _graph(args.g2)
    glu = gr.glue_graphs_along_edge(g1, g2, _edge_spec(g1, g2, args))
    out = Report(payload={"graph": format_graph(glu.graph)})
    out.add(format_graph(glu.graph))
    return out


def cmd_graph_split(args) -> Report:
    g = _graph(args.graph)
    if args.edge is None:
        edges = gr.splittable_edges(g)
        out = Report(STATUS_OK if edges else STATUS_FAIL,
                     {"splittable_edges": [k + 1 for k in edges]})
        out.add("splittable edges: " + (" ".join(str(k + 1) for k in edges) or "none"))
        return out
    parts = gr.split_along_edge(g, _edge(args.edge, g, "--edge"))
    if parts is None:
        out = Report(STATUS_FAIL, {"parts": None})
        out.add("no split along this edge")
        return out
    out = Report(payload={"parts": [format_graph(p) for p in parts]})
    out.block("part 1:", format_graph(parts[0]))
    out.block("part 2:", format_graph(parts[1]))
    return out


def cmd_graph_check(args) -> Report:
    g1, g2 = _graph(args.g1), _graph(args.g2)
    chk = gr.check_graph_splitting(g1, g2, _edge_spec(g1, g2, args), _budget(args), args.jobs,
                                   True if args.hypergraph else None)
    out = Report(chk.status, {
        "tag": chk.tag, "bipartite": list(chk.bipartite), "checks": chk.checks,
        "graph": format_graph(chk.gluing.graph), "graph_split": _split_payload(chk.graph_report),
    })
    out.add(f"result: {chk.tag}",
            "bipartite parts: " + " ".join("yes" if b else "no" for b in chk.bipartite),
            "checks: " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in chk.checks.items()))
    out.block("glued graph:", format_graph(chk.gluing.graph))
    out.add("graph split:")
    _split_lines(out, chk.graph_report, "toric ideal of glued graph:", "sum of parts:")
    if chk.hyper_report is not None:
        out.payload["hypergraph"] = format_hypergraph(chk.hypergraph)
        out.payload["hypergraph_split"] = _split_payload(chk.hyper_report)
        out.block("hypergraph:", format_hypergraph(chk.hypergraph))
        out.add("hypergraph split:")
        _split_lines(out, chk.hyper_report, "toric ideal of hypergraph:", "sum of parts:")
    return out


def cmd_betti_tensor(args) -> Report:
    a = bt.parse_betti(read_text(args.a).splitlines())
    b = bt.parse_betti(read_text(args.b).splitlines())
    t = bt.tensor(a, b)
    out = Report(payload={"entries": [[i, j, v] for (i, j), v in t.entries],
                          "totals": list(bt.totals(t)),
                          "projective_dimension": bt.projective_dimension(t),
                          "regularity": bt.regularity(t)})
    out.add(bt.render(t) if args.render else bt.format_betti(t))
    return out


# -- parser ---------------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--budget", type=int, default=Budget().max_reductions,
                   help="maximum S-pair reductions per Groebner computation")
    p.add_argument("--max-degree", type=int, default=Budget().max_degree,
                   help="maximum degree of a leading term")
    p.add_argument("--order", choices=ORDERS, default="grevlex")
    p.add_argument("--jobs", type=int, default=1, help="parallel Groebner computations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriglue", description="Toric ideals of integer matrices, gluing and splitting.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, helptext: str, parent=sub):
        p = parent.add_parser(name, help=helptext)
        _common(p)
        p.set_defaults(func=func)
        return p

    for name, func, helptext in [
        ("rank", cmd_rank, "rank of a matrix"),
        ("kernel", cmd_kernel, "integer kernel lattice basis"),
        ("homcheck", cmd_homcheck, "homogeneity certificate"),
        ("homogenize", cmd_homogenize, "append a row of ones"),
        ("normalform2d", cmd_normalform2d, "normal form of a homogeneous 2-row matrix"),
    ]:
        add(name, func, helptext).add_argument("matrix")
    p = add("toric", cmd_toric, "toric ideal (reduced Groebner basis)")
    p.add_argument("matrix")
    p.add_argument("--minimal", action="store_true", help="print a minimal generating set")
    p = add("sift", cmd_sift, "homogeneous sift: toric ideal of the homogenized matrix")
    p.add_argument("matrix")
    p.add_argument("--prefix", default="x", help="variable prefix")
    p = add("equiv", cmd_equiv, "do two matrices have the same toric ideal")
    p.add_argument("a")
    p.add_argument("b")
    for name, func, helptext in [
        ("glue", cmd_glue, "glue two homogeneous matrices"),
        ("split", cmd_split, "glue, drop the duplicate column, verify the splitting"),
    ]:
        p = add(name, func, helptext)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("--col-a", type=int, help="glue column of A (1-based, default last)")
        p.add_argument("--col-b", type=int, help="glue column of B (1-based, default first)")
        p.add_argument("--verify", action="store_true",
                       help="check the ideal identity (always done by split)")
    p = add("sift-glue", cmd_sift_glue, "glue the homogenizations of two matrices")
    p.add_argument("a")
    p.add_argument("b")
    p = add("selfglue", cmd_selfglue, "glue a numerical semigroup with itself")
    p.add_argument("matrix")
    p.add_argument("k1", type=int)
    p.add_argument("k2", type=int)
    p.add_argument("--verify", action="store_true")
    p = add("iterate", cmd_iterate, "iterated numerical gluing")
    p.add_argument("parts", nargs="+")
    p.add_argument("--step", type=_step, action="append",
                   help="multipliers k:k' for one gluing step (repeat per step)")
    p.add_argument("--verify", action="store_true")

    graph = sub.add_parser("graph", help="graphs and hypergraphs")
    gsub = graph.add_subparsers(dest="graph_command", required=True)
    add("toric", cmd_graph_toric, "toric ideal of a graph", gsub).add_argument("graph")
    for name, func, helptext in [
        ("glue", cmd_graph_glue, "glue two graphs along an edge"),
        ("check", cmd_graph_check, "test whether gluing two graphs splits the ideal"),
    ]:
        p = add(name, func, helptext, gsub)
        p.add_argument("g1")
        p.add_argument("g2")
        p.add_argument("--e1", help="edge of the first graph (1-based index or label)")
        p.add_argument("--e2", help="edge of the second graph (1-based index or label)")
        p.add_argument("--flip", action="store_true", help="use the other endpoint pairing")
        if name == "check":
            p.add_argument("--hypergraph", action="store_true",
                           help="also glue into a hypergraph when the graph splits")
    p = add("split", cmd_graph_split, "split a graph along an edge", gsub)
    p.add_argument("graph")
    p.add_argument("--edge", help="edge to split at; omitted lists splittable edges")

    betti = sub.add_parser("betti", help="Betti tables")
    bsub = betti.add_subparsers(dest="betti_command", required=True)
    p = add("tensor", cmd_betti_tensor, "Betti table of a tensor product", bsub)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--render", action="store_true", help="print as a diagram")
    return parser


def _command_name(args) -> str:
    parts = [args.command]
    for attr in ("graph_command", "betti_command"):
        if getattr(args, attr, None):
            parts.append(getattr(args, attr))
    return " ".join(parts)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    name = _command_name(args)
    start = time.perf_counter()
    try:
        if args.budget < 1 or args.max_degree < 1 or args.jobs < 1:
            raise ValueError("--budget, --max-degree and --jobs must be positive")
        report = args.func(args)
    except BudgetExceeded as exc:
        report = Report(STATUS_BUDGET, {"message": str(exc)})
        report.add(f"status: {STATUS_BUDGET}", f"note: {exc}")
    except USAGE_ERRORS as exc:
        print(f"toriglue {name}: error: {exc}", file=sys.stderr)
        return 2
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        print(json.dumps({"status": report.status, "command": name, "payload": report.payload,
                          "timing_ms": round(elapsed, 3)}, indent=2))
    else:
        print("\n".join(report.lines))
    return EXIT[report.status]


if __name__ == "__main__":
    sys.exit(main())
