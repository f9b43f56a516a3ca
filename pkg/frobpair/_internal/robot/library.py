"""robot keywords for checking levels, root ideals and cartier-manin data from `.robot` suites.
import it with `Library    frobpair._internal.robot.library`

every argument arrives as a string: primes and levels are numbers, variable lists are comma
separated and polynomials use the same syntax as the command line"""

from __future__ import annotations

from typing import TYPE_CHECKING, Final

from basedtyping import T
from robot.api import logger
from robot.api.deco import keyword

from frobpair._internal.algebra.field import PrimeField
from frobpair._internal.algebra.groebner import ideal_equal
from frobpair._internal.algebra.parser import parse_poly
from frobpair._internal.algebra.poly import VarContext, format_poly
from frobpair._internal.algebra.roots import IdealGens, ie_roots
from frobpair._internal.curves import HyperellipticModel, cartier_manin, classify
from frobpair._internal.level import (
    DEFAULT_E_MAX,
    ExceedsBound,
    Finite,
    LevelOutcome,
    LevelQuery,
    level_pair,
    level_single,
    outcome_level,
    verify_certificate,
)

if TYPE_CHECKING:
    from frobpair._internal.algebra.poly import MultiPoly

ROBOT_AUTO_KEYWORDS: Final = False


def _ring(p: str, variables: str) -> tuple[PrimeField, VarContext]:
    return PrimeField(int(p)), VarContext.from_text(variables)


def _pair(p: str, variables: str, num: str, den: str) -> tuple[MultiPoly, MultiPoly]:
    field, context = _ring(p, variables)
    return parse_poly(num, context, field), parse_poly(den, context, field)


def _should_equal(actual: T, expected: T, what: str) -> None:
    if actual != expected:
        raise AssertionError(f"{what}: expected {expected}, got {actual}")


def _describe(outcome: LevelOutcome) -> str:
    if isinstance(outcome, ExceedsBound):
        return f"more than {outcome.e_max}"
    return str(outcome_level(outcome))


@keyword
def level_of_pair_should_be(
    p: str, variables: str, num: str, den: str, expected: str, e_max: str = str(DEFAULT_E_MAX)
) -> None:
    outcome = level_pair(LevelQuery(*_pair(p, variables, num, den), int(e_max)))
    logger.info(f"level of ({num}) / ({den}) over F_{p}: {_describe(outcome)}")
    _should_equal(_describe(outcome), expected, "level")


@keyword
def level_of_pair_should_exceed(p: str, variables: str, num: str, den: str, bound: str) -> None:
    """passes when no operator exists for any `e <= bound`"""
    outcome = level_pair(LevelQuery(*_pair(p, variables, num, den), int(bound)))
    logger.info(f"level of ({num}) / ({den}) over F_{p}: {_describe(outcome)}")
    if not isinstance(outcome, ExceedsBound):
        raise AssertionError(f"expected a level above {bound}, got {_describe(outcome)}")


@keyword
def level_of_polynomial_should_be(
    p: str, variables: str, poly: str, expected: str, e_max: str = str(DEFAULT_E_MAX)
) -> None:
    field, context = _ring(p, variables)
    outcome = level_single(parse_poly(poly, context, field), int(e_max))
    logger.info(f"level of {poly} over F_{p}: {_describe(outcome)}")
    _should_equal(_describe(outcome), expected, "level")


@keyword
def root_ideal_should_be(p: str, e: str, variables: str, poly: str, *generators: str) -> None:
    """compares `I_e(poly)` with the ideal generated by `generators` as ideals, so any generating
    set will do"""
    field, context = _ring(p, variables)
    roots = ie_roots(parse_poly(poly, context, field), int(e))
    logger.info(f"I_{e}({poly}) = ({', '.join(map(format_poly, roots))})")
    expected = IdealGens.of(parse_poly(generator, context, field) for generator in generators)
    if not ideal_equal(roots, expected):
        raise AssertionError(
            f"I_{e}({poly}) is generated by {', '.join(map(format_poly, roots))}, which is not the"
            f" ideal generated by {', '.join(generators)}"
        )


@keyword
def cartier_manin_matrix_should_be(p: str, h: str, *rows: str) -> None:
    """each row is written as comma separated entries, for example `0, 6`"""
    matrix = cartier_manin(HyperellipticModel.from_text(int(p), h))
    logger.info(f"cartier-manin matrix of y^2 = {h} over F_{p}: {matrix.as_lists()}")
    expected = [[int(entry) for entry in row.split(",")] for row in rows]
    _should_equal(matrix.as_lists(), expected, "cartier-manin matrix")


@keyword
def p_rank_should_be(p: str, h: str, expected: str) -> None:
    classification = classify(HyperellipticModel.from_text(int(p), h))
    logger.info(
        f"y^2 = {h} over F_{p}: p-rank {classification.p_rank}, a-number"
        f" {classification.a_number}"
    )
    _should_equal(classification.p_rank, int(expected), "p-rank")


@keyword
def curve_should_be_ordinary(p: str, h: str) -> None:
    classification = classify(HyperellipticModel.from_text(int(p), h))
    if not classification.ordinary:
        raise AssertionError(f"y^2 = {h} over F_{p} has p-rank {classification.p_rank}")


@keyword
def curve_should_not_be_ordinary(p: str, h: str) -> None:
    classification = classify(HyperellipticModel.from_text(int(p), h))
    if classification.ordinary:
        raise AssertionError(f"y^2 = {h} over F_{p} is ordinary")


@keyword
def certificate_should_verify(
    p: str, variables: str, num: str, den: str, e_max: str = str(DEFAULT_E_MAX)
) -> None:
    """finds the level and checks the operator that comes with it by plain polynomial arithmetic"""
    outcome = level_pair(LevelQuery(*_pair(p, variables, num, den), int(e_max)))
    if not isinstance(outcome, Finite):
        raise AssertionError(f"no certificate to check, the level is {_describe(outcome)}")
    logger.info(f"certificate at e={outcome.e} with {len(outcome.certificate.terms)} terms")
    if not verify_certificate(outcome.certificate):
        raise AssertionError(f"the certificate at e={outcome.e} does not verify")
