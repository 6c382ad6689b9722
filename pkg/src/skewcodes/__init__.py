"""Skew polynomial Petit algebras, their monomial homomorphisms and skew constacyclic codes."""

from ._kernels import BACKEND
from .classify import ClassMode, ClassReport, count_formula, count_vs_oracle, norm_subgroup, partition
from .codes import SkewCode, code_from_generator, map_code, right_divisors, weight_distribution
from .coeff_ring import (
    FieldCtx,
    FrobPower,
    apply_aut,
    bracket_m_s,
    field_make,
    in_fixed_field,
    iter_norm,
    norm_relation_check,
    parse_field_spec,
)
from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    FieldError,
    HypothesisError,
    NotMonicError,
    PowerAssociativityError,
    SkewCodesError,
)
from .homs import (
    HomCertificate,
    MonomialHomSpec,
    PolyHomSpec,
    apply_hom,
    brute_force_is_hom,
    check_degree1_hom,
    check_monomial_hom,
    enumerate_homs,
    hamming_weight,
    is_weight_preserving,
    nonmonomial_structure_check,
    star_hypothesis,
)
from .petit import (
    AlgebraElem,
    Monomial,
    PetitAlgebra,
    is_associative_algebra,
    is_power_assoc_monomial,
    keystep_identity_check,
    left_nested_power,
    monomial_power_formula,
    petit_mul,
)
from .skew_poly import SkewPoly, sp_add, sp_eval_twist, sp_mul, sp_right_divmod
from .verify import Scorecard, SuiteSpec, run_suite, run_suites

__version__ = "0.1.0"
