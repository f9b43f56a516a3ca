"""the table of worked examples that `frobpair examples` replays. cases are plain data plus a
`functools.partial` of a module level check, so they pickle into worker processes"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import TYPE_CHECKING, Callable, Final, Union, final

from typing_extensions import TypeAlias

from frobpair._internal.algebra.field import PrimeField
from frobpair._internal.algebra.groebner import ideal_equal
from frobpair._internal.algebra.operators import DividedPower, MultiplyBy, OperatorWord
from frobpair._internal.algebra.parser import parse_poly
from frobpair._internal.algebra.poly import VarContext, format_poly
from frobpair._internal.algebra.roots import IdealGens, ie_roots
from frobpair._internal.curves import (
    HyperellipticModel,
    cartier_manin,
    classify,
    stratified_test,
)
from frobpair._internal.errors import FrobPairError
from frobpair._internal.level import (
    ExceedsBound,
    Finite,
    LevelQuery,
    level_one_test,
    level_pair,
    outcome_level,
    verify_certificate,
)

if TYPE_CHECKING:
    from collections.abc import Sequence

logger: Final = logging.getLogger(__name__)

CheckResult: TypeAlias = "tuple[bool, str]"
OperatorSpec: TypeAlias = "tuple[Union[tuple[str, int], str], ...]"
"""`(variable name, order)` for a divided power, polynomial text for a multiplication"""


class Provenance(Enum):
    PUBLISHED = "published"
    """a value stated in the literature"""
    DERIVED = "derived"
    """a value obtained by direct computation"""


@final
@dataclass(frozen=True)
class RegressionCase:
    name: str
    check: Callable[[], CheckResult]
    provenance: Provenance = Provenance.PUBLISHED
    long_running: bool = False


@final
@dataclass(frozen=True)
class CaseResult:
    name: str
    provenance: str
    passed: bool
    detail: str


def _ring(p: int, variables: str) -> tuple[PrimeField, VarContext]:
    return PrimeField(p), VarContext.from_text(variables)


def check_level(
    p: int, variables: str, num: str, den: str, expected: int | None, e_max: int
) -> CheckResult:
    """`expected=None` means the search has to give up at `e_max`"""
    field, context = _ring(p, variables)
    outcome = level_pair(
        LevelQuery(parse_poly(num, context, field), parse_poly(den, context, field), e_max)
    )
    level = outcome_level(outcome)
    if isinstance(outcome, Finite) and not verify_certificate(outcome.certificate):
        return False, f"level {level} but the certificate does not verify"
    detail = f"level {level}" if level is not None else f"level > {e_max}"
    if expected is None:
        return isinstance(outcome, ExceedsBound), detail
    return level == expected, detail


def check_level_one(p: int, variables: str, num: str, den: str, *, expected: bool) -> CheckResult:
    field, context = _ring(p, variables)
    result = level_one_test(parse_poly(num, context, field), parse_poly(den, context, field))
    return result == expected, f"g in I_1(g f^(p-1)): {result}"


def check_roots(
    p: int, e: int, variables: str, poly: str, expected: tuple[str, ...]
) -> CheckResult:
    field, context = _ring(p, variables)
    roots = ie_roots(parse_poly(poly, context, field), e)
    wanted = IdealGens.of(parse_poly(text, context, field) for text in expected)
    return ideal_equal(roots, wanted), f"I_{e} = ({', '.join(map(format_poly, roots))})"


def check_operator(
    p: int, variables: str, word: OperatorSpec, poly: str, expected: str
) -> CheckResult:
    field, context = _ring(p, variables)
    operator = OperatorWord(
        tuple(
            MultiplyBy(parse_poly(atom, context, field))
            if isinstance(atom, str)
            else DividedPower(context.index(atom[0]), atom[1])
            for atom in word
        )
    )
    result = operator(parse_poly(poly, context, field))
    return result == parse_poly(expected, context, field), f"result {format_poly(result)}"


def check_cartier_manin(p: int, h: str, rows: tuple[tuple[int, ...], ...]) -> CheckResult:
    matrix = cartier_manin(HyperellipticModel.from_text(p, h))
    return matrix.rows == rows, f"matrix {matrix.as_lists()}"


def check_p_rank(p: int, h: str, p_rank: int) -> CheckResult:
    classification = classify(HyperellipticModel.from_text(p, h))
    return classification.p_rank == p_rank, (
        f"p-rank {classification.p_rank}, a-number {classification.a_number}"
    )


def check_stratified(
    p: int, h: str, vector: tuple[int, ...], *, expected: bool
) -> CheckResult:
    result = stratified_test(HyperellipticModel.from_text(p, h), vector)
    return result == expected, f"stratified {result}"


_SINGH_VARIABLES: Final = "u,v,w,x,y,z"
_DELTA: Final = ("(v*z - w*y)", "(w*x - u*z)", "(u*y - v*x)")
_SINGH_PAIRS: Final = (
    ("w", f"{_DELTA[0]}*{_DELTA[1]}"),
    ("v", f"{_DELTA[0]}*{_DELTA[2]}"),
    ("u", f"{_DELTA[1]}*{_DELTA[2]}"),
)
_FERMAT: Final = "x^3 + y^3 + z^3"
_LEVEL_FOUR: Final = {
    2: "x*y^3 + y*z^3 + z*w^3",
    3: "x*y^4 + y*z^4 + z*w^4",
    5: "x*y^6 + y*z^6 + z*w^6",
}
_QUADRATIC: Final = (("x*y", "x^2", 1), ("y^2", "x^2", 2), ("x^2", "x*y", 1), ("y^2", "x*y", 1))


def _cases() -> list[RegressionCase]:
    cases: list[RegressionCase] = []

    def add(
        name: str,
        check: Callable[[], CheckResult],
        *,
        provenance: Provenance = Provenance.PUBLISHED,
        long_running: bool = False,
    ) -> None:
        cases.append(RegressionCase(name, check, provenance, long_running))

    for p in (2, 3, 5):
        for g, f in _SINGH_PAIRS:
            add(f"singh-{g}-p{p}", partial(check_level, p, _SINGH_VARIABLES, g, f, 1, 3))
    for p in (2, 3):
        add(
            f"singh-operator-p{p}",
            partial(
                check_operator,
                p,
                _SINGH_VARIABLES,
                (("u", p - 1), ("y", p - 1), ("z", p - 1)),
                f"w*({_SINGH_PAIRS[0][1]})^{p - 1}",
                f"w^{p}",
            ),
        )
    for p in (2, 3):
        add(f"fermat-pair-p{p}", partial(check_level, p, "x,y,z", "x*y*z", _FERMAT, 2, 3))
    add(
        "fermat-roots-p2",
        partial(check_roots, 2, 1, "x,y,z", f"x*y*z*({_FERMAT})", ("x^2", "y^2", "z^2")),
    )
    add(
        "fermat-roots-p3",
        partial(
            check_roots,
            3,
            1,
            "x,y,z",
            f"x*y*z*({_FERMAT})^2",
            ("x^2 + 2*x*y + y^2 + 2*x*z + 2*y*z + z^2",),
        ),
    )
    for p, level in ((2, 2), (5, 2), (7, 1), (11, 2), (13, 1)):
        add(f"fermat-single-p{p}", partial(check_level, p, "x,y,z", "1", _FERMAT, level, 3))
    for g, level in (("x^3", 0), ("x^2*y", 1), ("x*y^2", 2), ("y^3", 2)):
        add(f"projective-line-{g}", partial(check_level, 5, "x,y", g, "x^3", level, 3))
    for p in (3, 5):
        for g, f, level in _QUADRATIC:
            add(f"quadratic-{g}-over-{f}-p{p}", partial(check_level, p, "x,y", g, f, level, 3))
    for p, long_running in ((2, False), (3, False), (5, True)):
        add(
            f"level-four-pair-p{p}",
            partial(check_level, p, "x,y,z,w", "y", _LEVEL_FOUR[p], 4, 5),
            long_running=long_running,
        )
    for p in (2, 3):
        add(
            f"level-four-denominator-p{p}",
            partial(check_level, p, "x,y,z,w", "1", _LEVEL_FOUR[p], 2, 5),
        )
        add(
            f"infinite-level-p{p}",
            partial(check_level, p, "x,y", "x", f"x^{p + 1} + y^{p + 1}", None, 5),
        )
    add("cubic-fraction-x3-p5", partial(check_level, 5, "x,y,z", "x^3", _FERMAT, 1, 3))
    add(
        "cubic-level-one-x2y-p5",
        partial(check_level_one, 5, "x,y,z", "x^2*y", _FERMAT, expected=True),
    )
    add(
        "cubic-operator-p5",
        partial(
            check_operator,
            5,
            "x,y,z",
            ("3*x^10", ("x", 4), ("y", 3), ("z", 3)),
            f"x^3*({_FERMAT})^4",
            "x^15",
        ),
        provenance=Provenance.DERIVED,
    )
    add("cartier-manin-x5+1-p13", partial(check_cartier_manin, 13, "x^5 + 1", ((0, 0), (6, 0))))
    add("cartier-manin-x5+1-p19", partial(check_cartier_manin, 19, "x^5 + 1", ((0, 0), (0, 0))))
    add("ordinary-x5+1-p11", partial(check_p_rank, 11, "x^5 + 1", 2))
    for p, p_rank in ((3, 2), (5, 1), (7, 0), (17, 3)):
        add(
            f"p-rank-x8-1-p{p}",
            partial(check_p_rank, p, "x^8 - 1", p_rank),
            provenance=Provenance.DERIVED if p in {3, 5} else Provenance.PUBLISHED,
        )
    add(
        "stratified-x5+1-p13-kernel",
        partial(check_stratified, 13, "x^5 + 1", (0, 1), expected=True),
        provenance=Provenance.DERIVED,
    )
    add(
        "stratified-x5+1-p13-outside",
        partial(check_stratified, 13, "x^5 + 1", (1, 0), expected=False),
        provenance=Provenance.DERIVED,
    )
    add("stratified-x5+1-p19", partial(check_stratified, 19, "x^5 + 1", (1, 1), expected=True))
    return cases


REGRESSION_CASES: Final = tuple(_cases())


def select_cases(
    name_filter: str | None = None,
    *,
    include_long: bool = False,
    cases: Sequence[RegressionCase] = REGRESSION_CASES,
) -> list[RegressionCase]:
    return [
        case
        for case in cases
        if (include_long or not case.long_running)
        and (name_filter is None or name_filter in case.name)
    ]


def run_case(case: RegressionCase) -> CaseResult:
    """runs one case. library errors are reported as failures instead of escaping"""
    try:
        passed, detail = case.check()
    except FrobPairError as error:
        passed, detail = False, f"{type(error).__name__}: {error}"
    logger.debug("%s: %s (%s)", case.name, "pass" if passed else "FAIL", detail)
    return CaseResult(case.name, case.provenance.value, passed, detail)


def run_regression(
    name_filter: str | None = None, *, include_long: bool = False, jobs: int | None = None
) -> list[CaseResult]:
    """runs the selected cases, in worker processes unless `jobs` is 1. results are sorted by
    name"""
    cases = select_cases(name_filter, include_long=include_long)
    if jobs == 1 or len(cases) <= 1:
        results = [run_case(case) for case in cases]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(run_case, cases))
    return sorted(results, key=lambda result: result.name)
