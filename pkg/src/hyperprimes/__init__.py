"""Executable number theories over hyperoperations and user-defined operations."""

__version__ = "0.1.0"

from .opexpr import DomainSpec, OpSpec, TooLarge, Undefined, eval_op, parse_op_expr
from .notation import FlatForm, flatten, parse_formula, parse_hyper, print_hyper, structure
from .hyper import distrib_check, hyper_eval, zero_tower
from .hyperfactor import enumerate_hyper3_reps, hyper_factorize, is_exp_prime, recompose
from .genprime import CertBounds, Deep, TopLevel, classify, prime_set, sieve
from .dioph import composite_intersection, goldbach, prime_cover_check, representable, solve_box
from .lseries import coeff_table, gen_F, gen_TAC, lseries_partial, zeta_partial
from .modarith import congruent, fermat_kxy_check, fermat_linear_check, inverse_check, power_fold

__all__ = [
    "__version__", "DomainSpec", "OpSpec", "TooLarge", "Undefined", "eval_op", "parse_op_expr",
    "FlatForm", "flatten", "parse_formula", "parse_hyper", "print_hyper", "structure",
    "distrib_check", "hyper_eval", "zero_tower",
    "enumerate_hyper3_reps", "hyper_factorize", "is_exp_prime", "recompose",
    "CertBounds", "Deep", "TopLevel", "classify", "prime_set", "sieve",
    "composite_intersection", "goldbach", "prime_cover_check", "representable", "solve_box",
    "coeff_table", "gen_F", "gen_TAC", "lseries_partial", "zeta_partial",
    "congruent", "fermat_kxy_check", "fermat_linear_check", "inverse_check", "power_fold",
]
