"""Exact Hilbert coefficients and Chern numbers of ideals, filtrations, face rings and covers."""

from .algebra import DEGREVLEX, LEX, MonomialOrder, Polynomial
from .filtration import BoundReport, Filtration, check_admissible, filtration_bound_check
from .groebner import BudgetExceeded, GroebnerBasis, Ideal, buchberger, saturation
from .hilbert import (FitError, HilbertPolynomial, HilbertTable, adic_table_groebner,
                      adic_table_monomial, evaluate, fit)
from .monomial import (MonomialIdeal, closure_colength, h0_length, integral_closure,
                       newton_membership)
from .semigroup import AffineSemigroup, CoverReport, SemigroupIdeal, cover_report
from .simplicial import SimplicialComplex, crosscheck_chern, f_vector, h_vector, stanley_reisner

__version__ = "0.1.0"

__all__ = [
    "AffineSemigroup", "BoundReport", "BudgetExceeded", "CoverReport", "DEGREVLEX", "Filtration",
    "FitError", "GroebnerBasis", "HilbertPolynomial", "HilbertTable", "Ideal", "LEX",
    "MonomialIdeal", "MonomialOrder", "Polynomial", "SemigroupIdeal", "SimplicialComplex",
    "adic_table_groebner", "adic_table_monomial", "buchberger", "check_admissible",
    "closure_colength", "crosscheck_chern", "evaluate", "f_vector", "fit", "h0_length",
    "h_vector", "integral_closure", "newton_membership", "cover_report", "saturation",
    "stanley_reisner", "filtration_bound_check",
]
