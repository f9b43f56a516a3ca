"""
.. include:: ../README.md

# API
everything you need to compute levels of pairs, ideals of p^e-th roots and cartier-manin data from
python code. the command line tool and the robot keyword library are thin wrappers around these
"""

from __future__ import annotations

from frobpair._internal import __version__ as __version__
from frobpair._internal.algebra.field import (
    PrimeField as PrimeField,
    binomial_mod_p as binomial_mod_p,
    is_prime as is_prime,
    multinomial_mod_p as multinomial_mod_p,
)
from frobpair._internal.algebra.groebner import (
    GroebnerBasis as GroebnerBasis,
    MembershipResult as MembershipResult,
    groebner_basis as groebner_basis,
    ideal_contains as ideal_contains,
    ideal_equal as ideal_equal,
    normal_form as normal_form,
)
from frobpair._internal.algebra.operators import (
    DividedPower as DividedPower,
    MultiplyBy as MultiplyBy,
    OperatorAtom as OperatorAtom,
    OperatorWord as OperatorWord,
    divided_power_apply as divided_power_apply,
    operator_word_apply as operator_word_apply,
)
from frobpair._internal.algebra.orders import MonomialOrder as MonomialOrder
from frobpair._internal.algebra.parser import parse_poly as parse_poly
from frobpair._internal.algebra.poly import (
    Monomial as Monomial,
    MultiPoly as MultiPoly,
    VarContext as VarContext,
    exact_divide as exact_divide,
    format_poly as format_poly,
    frobenius_power as frobenius_power,
    poly_arith as poly_arith,
    poly_pow as poly_pow,
)
from frobpair._internal.algebra.roots import (
    IdealGens as IdealGens,
    LinearChange as LinearChange,
    PeDecomposition as PeDecomposition,
    bracket_power as bracket_power,
    ideal_product as ideal_product,
    ie_roots as ie_roots,
    linear_change as linear_change,
    linear_change_ideal as linear_change_ideal,
    pe_decompose as pe_decompose,
)
from frobpair._internal.curves import (
    CartierManinMatrix as CartierManinMatrix,
    CurveClassification as CurveClassification,
    HyperellipticModel as HyperellipticModel,
    cartier_manin as cartier_manin,
    classify as classify,
    hasse_invariant as hasse_invariant,
    homogenized_equation as homogenized_equation,
    stratification_kernel as stratification_kernel,
    stratified_test as stratified_test,
)
from frobpair._internal.errors import (
    ContextMismatchError as ContextMismatchError,
    ExponentOverflowError as ExponentOverflowError,
    FrobPairError as FrobPairError,
    InternalError as InternalError,
    NotPrimeError as NotPrimeError,
    NotSquarefreeError as NotSquarefreeError,
    ParseError as ParseError,
    ResourceLimitError as ResourceLimitError,
    SingularMatrixError as SingularMatrixError,
    TermLimitError as TermLimitError,
    UserError as UserError,
)
from frobpair._internal.level import (
    DEFAULT_E_MAX as DEFAULT_E_MAX,
    CertificateTerm as CertificateTerm,
    ExceedsBound as ExceedsBound,
    Finite as Finite,
    FrobeniusCertificate as FrobeniusCertificate,
    LevelOutcome as LevelOutcome,
    LevelQuery as LevelQuery,
    LevelZero as LevelZero,
    build_certificate as build_certificate,
    containment_holds as containment_holds,
    containment_profile as containment_profile,
    level_lower_bound_filter as level_lower_bound_filter,
    level_one_test as level_one_test,
    level_pair as level_pair,
    level_single as level_single,
    outcome_level as outcome_level,
    verify_certificate as verify_certificate,
)
