"""Grammatical calculus for permutation statistics: exact polynomials, formal
derivatives, generating-function checks, labelings and tree bijections."""

from .bijection import MAP_KINDS, CoherenceError, InsertionTrace, phi, phi_inverse, phi_trace, unified_reflection
from .grammar import (
    G_ANDRE, G_EULER, G_H, G_PEAK, G_RUN, G_UV, Grammar, derive, derive_n, gen_series, get_grammar,
    is_constant,
)
from .identities import IdentityCheck, registered_ids, verify, verify_all
from .labeling import LabelSeq, a_labeling, decompose, insert_consistency, l_labeling, w_labeling
from .permstat import StatTriangle, bivariate, lambda_recurrence_row, stat, triangle, univariate
from .poly import LaurentPoly, RhoElement, coefficient_of, format_poly, parse_poly, poly_arith, poly_pow, rho_mul
from .series import Series, closed_form, series_arith, series_exp, series_reciprocal
from .trees import IncreasingTree, enumerate_trees, is_even_tree, tree_labels, tree_weight

__version__ = "0.1.0"

__all__ = [
    "MAP_KINDS", "CoherenceError", "InsertionTrace", "phi", "phi_inverse", "phi_trace", "unified_reflection",
    "G_ANDRE", "G_EULER", "G_H", "G_PEAK", "G_RUN", "G_UV", "Grammar", "derive", "derive_n", "gen_series",
    "get_grammar", "is_constant", "IdentityCheck", "registered_ids", "verify", "verify_all",
    "LabelSeq", "a_labeling", "decompose", "insert_consistency", "l_labeling", "w_labeling",
    "StatTriangle", "bivariate", "lambda_recurrence_row", "stat", "triangle", "univariate",
    "LaurentPoly", "RhoElement", "coefficient_of", "format_poly", "parse_poly", "poly_arith", "poly_pow",
    "rho_mul", "Series", "closed_form", "series_arith", "series_exp", "series_reciprocal",
    "IncreasingTree", "enumerate_trees", "is_even_tree", "tree_labels", "tree_weight",
]
