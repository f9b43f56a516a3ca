"""the level of a pair `(g, f)`: the least `e` such that some `R^(p^e)`-linear operator sends `g/f`
to `(g/f)^p`. it is found by testing

    I_e(g^p f^(p^e - p))  ⊆  I_e(g f^(p^e - 1))

for `e = 1, 2, ...` and, on success, turning the groebner cofactors of that containment into an
explicit operator that anyone can check with plain polynomial arithmetic"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final, Union, final

from typing_extensions import TypeAlias

from frobpair._internal.algebra.groebner import groebner_basis, ideal_contains
from frobpair._internal.algebra.poly import (
    MultiPoly,
    exact_divide,
    frobenius_power,
    poly_pow,
)
from frobpair._internal.algebra.roots import IdealGens, bracket_power, ie_roots, pe_decompose
from frobpair._internal.errors import ExponentOverflowError, InternalError, UserError

if TYPE_CHECKING:
    from collections.abc import Iterator

    from frobpair._internal.algebra.poly import Monomial

logger: Final = logging.getLogger(__name__)

DEFAULT_E_MAX: Final = 6


@final
@dataclass(frozen=True)
class LevelQuery:
    g: MultiPoly
    f: MultiPoly
    e_max: int = DEFAULT_E_MAX

    def __post_init__(self) -> None:
        self.g.check_compatible(self.f)
        if self.f.is_zero:
            raise UserError("the denominator must not be zero")
        if self.e_max < 1:
            raise UserError(f"e_max must be at least 1, got {self.e_max}")


@final
@dataclass(frozen=True)
class CertificateTerm:
    cofactor: MultiPoly
    alpha: Monomial


@final
@dataclass(frozen=True)
class FrobeniusCertificate:
    """the operator `delta = sum(term.cofactor * pi_term.alpha)`, where `pi_a` picks out the
    coefficient of `x^a` in the basis of R over `R^(p^e)`, raised back to the p^e-th power. it
    satisfies `delta(g f^(p^e - 1)) = g^p f^(p^e - p)`, hence `delta(g/f) = (g/f)^p`"""

    g: MultiPoly
    f: MultiPoly
    e: int
    terms: tuple[CertificateTerm, ...]

    def __iter__(self) -> Iterator[CertificateTerm]:
        return iter(self.terms)

    def apply(self, h: MultiPoly) -> MultiPoly:
        """evaluates the operator on `h`"""
        entries = pe_decompose(h, self.e).entries
        result = MultiPoly.zero(h.field, h.context)
        for term in self.terms:
            root = entries.get(term.alpha)
            if root is not None:
                result += term.cofactor * frobenius_power(root, self.e)
        return result


@final
@dataclass(frozen=True)
class LevelZero:
    """`f` divides `g`, so `g/f` is a polynomial and the frobenius itself will do"""

    quotient: MultiPoly


@final
@dataclass(frozen=True)
class Finite:
    e: int
    certificate: FrobeniusCertificate


@final
@dataclass(frozen=True)
class ExceedsBound:
    """no containment up to `e_max`. this is not a claim that the level is infinite"""

    e_max: int


LevelOutcome: TypeAlias = Union[LevelZero, Finite, ExceedsBound]


def _sources(g: MultiPoly, f: MultiPoly, e: int) -> tuple[MultiPoly, MultiPoly]:
    """`(g^p f^(p^e - p), g f^(p^e - 1))`. the first power is the frobenius twist of
    `f^(p^(e-1) - 1)` so only that one needs real multiplication"""
    p = f.p
    f_q_minus_p = frobenius_power(poly_pow(f, p ** (e - 1) - 1), 1)
    return (
        frobenius_power(g, 1) * f_q_minus_p,
        g * f_q_minus_p * poly_pow(f, p - 1),
    )


def containment_holds(g: MultiPoly, f: MultiPoly, e: int, *, bracket: bool = False) -> bool:
    """whether `I_e(g^p f^(p^e - p)) ⊆ I_e(g f^(p^e - 1))`. with `bracket`, tests the equivalent
    `g^p f^(p^e - p) ∈ I_e(g f^(p^e - 1))^[p^e]` instead, which works with polynomials p^e
    times bigger"""
    if e < 1:
        raise UserError(f"e must be at least 1, got {e}")
    left, right = _sources(g, f, e)
    if bracket:
        return ideal_contains(IdealGens.of([left]), bracket_power(ie_roots(right, e), e))
    return ideal_contains(ie_roots(left, e), ie_roots(right, e))


def containment_profile(g: MultiPoly, f: MultiPoly, e_max: int) -> list[bool]:
    """`containment_holds` for every `e` from 1 to `e_max`"""
    return [containment_holds(g, f, e) for e in range(1, e_max + 1)]


def build_certificate(g: MultiPoly, f: MultiPoly, e: int) -> FrobeniusCertificate:
    """writes `g^p f^(p^e - p) = sum(s_a * c_a^(p^e))` over the roots `c_a` of `g f^(p^e - 1)`.

    every root `h_b` of the left hand side lies in the ideal of the `c_a`, so `h_b = sum(t_ba c_a)`
    with cofactors lifted from a groebner basis that tracks its generators. then
    `s_a = sum_b t_ba^(p^e) x^b`

    :raises InternalError: if the containment doesn't hold at `e`
    """
    g.check_compatible(f)
    left, right = _sources(g, f, e)
    decomposition = pe_decompose(right, e)
    alphas = list(decomposition.entries)
    basis = groebner_basis(IdealGens(tuple(decomposition.entries.values())), track_generators=True)
    cofactors = [MultiPoly.zero(g.field, g.context) for _ in alphas]
    for beta, root in pe_decompose(left, e):
        division = basis.normal_form(root)
        if not division.member:
            raise InternalError(
                f"no certificate exists at e={e} for g={g}, f={f}: the root at {beta} is not in"
                " the ideal"
            )
        for index, t in enumerate(basis.lift(division.cofactors)):
            if not t.is_zero:
                cofactors[index] += frobenius_power(t, e).shift(beta)
    terms = tuple(
        CertificateTerm(cofactor, alpha)
        for cofactor, alpha in zip(cofactors, alphas)
        if not cofactor.is_zero
    )
    logger.debug("certificate for e=%d has %d terms", e, len(terms))
    return FrobeniusCertificate(g, f, e, terms)


def verify_certificate(certificate: FrobeniusCertificate) -> bool:
    """recomputes everything from `g` and `f` and checks the certificate identity"""
    g, f, e = certificate.g, certificate.f, certificate.e
    if e < 1 or f.is_zero:
        return False
    left, right = _sources(g, f, e)
    return certificate.apply(right) == left


def level_pair(query: LevelQuery) -> LevelOutcome:
    """:raises ExponentOverflowError: tagged with the `e` that overflowed"""
    g, f = query.g, query.f
    quotient = exact_divide(g, f)
    if quotient is not None:
        logger.debug("%s divides %s, level 0", f, g)
        return LevelZero(quotient)
    for e in range(1, query.e_max + 1):
        try:
            holds = containment_holds(g, f, e)
            logger.debug("e=%d: containment %s", e, "holds" if holds else "fails")
            if not holds:
                continue
            certificate = build_certificate(g, f, e)
        except ExponentOverflowError as error:
            raise error.at_level(e) from error
        if not verify_certificate(certificate):
            raise InternalError(f"the certificate built for g={g}, f={f}, e={e} does not verify")
        return Finite(e, certificate)
    return ExceedsBound(query.e_max)


def level_single(f: MultiPoly, e_max: int = DEFAULT_E_MAX) -> LevelOutcome:
    """`level(f) = level(1, f)`"""
    return level_pair(LevelQuery(MultiPoly.constant(f.field, f.context, 1), f, e_max))


def level_one_test(g: MultiPoly, f: MultiPoly) -> bool:
    """`level(g, f) = 1` exactly when `g ∈ I_1(g f^(p-1))`"""
    g.check_compatible(f)
    return groebner_basis(ie_roots(g * poly_pow(f, f.p - 1), 1)).contains(g)


def level_lower_bound_filter(g: MultiPoly, f: MultiPoly, e: int) -> bool:
    """`True` certifies `level(g, f) > e`: the root ideal of `g^p f^(p^e - p)` escapes either
    `I_e(f^(p^e - 1))` or `I_e(g)`. `False` proves nothing"""
    g.check_compatible(f)
    left, _ = _sources(g, f, e)
    roots = ie_roots(left, e)
    return not ideal_contains(roots, ie_roots(poly_pow(f, f.p**e - 1), e)) or not ideal_contains(
        roots, ie_roots(g, e)
    )


def outcome_level(outcome: LevelOutcome) -> int | None:
    """the level as a number, `None` when the search gave up"""
    if isinstance(outcome, LevelZero):
        return 0
    if isinstance(outcome, Finite):
        return outcome.e
    return None
