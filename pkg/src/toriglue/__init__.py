"""Toric ideals of integer matrices, with gluing and splitting constructions."""

from .betti import BettiTable, render, tensor, totals
from .binomials import (
    Binomial, BinomialIdeal, Budget, BudgetExceeded, GroebnerBasis, RingContext,
    buchberger, ideal_equals, minimal_generators, saturate_all_variables, toric_ideal,
)
from .gluing import (
    GluedResult, GluingSpec, SplitReport, glue_2d, glue_homogeneous, glue_sifts,
    sift_split, split_2d, split_sum, verify_gluing,
)
from .graphs import (
    EdgeGluingSpec, Graph, Hypergraph3, check_graph_splitting, glue_graphs_along_edge,
    incidence_matrix, is_bipartite, split_along_edge,
)
from .linalg import IntMatrix, homogeneity_certificate, kernel_lattice_basis, rank
from .numerical import iterate_glue, self_glue_numerical, verify_numerical
from .transform import (
    equivalent, homogeneous_sift, homogenize, normalize_nonnegative, two_dim_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Binomial",
    "BinomialIdeal",
    "Budget",
    "BudgetExceeded",
    "EdgeGluingSpec",
    "GluedResult",
    "GluingSpec",
    "Graph",
    "GroebnerBasis",
    "Hypergraph3",
    "IntMatrix",
    "RingContext",
    "SplitReport",
    "buchberger",
    "check_graph_splitting",
    "equivalent",
    "glue_2d",
    "glue_graphs_along_edge",
    "glue_homogeneous",
    "glue_sifts",
    "homogeneity_certificate",
    "homogeneous_sift",
    "homogenize",
    "ideal_equals",
    "incidence_matrix",
    "is_bipartite",
    "iterate_glue",
    "kernel_lattice_basis",
    "minimal_generators",
    "normalize_nonnegative",
    "rank",
    "render",
    "saturate_all_variables",
    "self_glue_numerical",
    "sift_split",
    "split_2d",
    "split_along_edge",
    "split_sum",
    "tensor",
    "toric_ideal",
    "totals",
    "two_dim_normal_form",
    "verify_gluing",
    "verify_numerical",
]
