"""buchberger's algorithm over F_p, normal forms with division cofactors, and ideal containment

internally polynomials are plain `dict[Monomial, int]` term maps and basis elements are kept
monic, so reduction never needs an inverse"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from operator import add
from typing import TYPE_CHECKING, Final, final

from typing_extensions import TypeAlias

from frobpair._internal.algebra.orders import MonomialOrder
from frobpair._internal.algebra.poly import (
    MultiPoly,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)
from frobpair._internal.algebra.roots import IdealGens
from frobpair._internal.errors import InternalError, TermLimitError, UserError
from frobpair._internal.limits import max_terms

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    from frobpair._internal.algebra.poly import Monomial

logger: Final = logging.getLogger(__name__)

_Terms: TypeAlias = "dict[Monomial, int]"
_Representation: TypeAlias = "dict[int, _Terms]"
"""a polynomial written over the input generators: generator index -> cofactor"""


def _axpy(target: _Terms, terms: _Terms, shift: Monomial, factor: int, p: int) -> None:
    """`target += factor * x^shift * terms`, in place"""
    for monomial, coefficient in terms.items():
        key = tuple(map(add, monomial, shift))
        value = (target.get(key, 0) + factor * coefficient) % p
        if value:
            target[key] = value
        else:
            target.pop(key, None)


def _rep_axpy(
    target: _Representation, source: _Representation, shift: Monomial, factor: int, p: int
) -> None:
    for index, terms in source.items():
        cofactor = target.setdefault(index, {})
        _axpy(cofactor, terms, shift, factor, p)
        if not cofactor:
            del target[index]


def _scale_rep(rep: _Representation, factor: int, p: int) -> _Representation:
    return {
        index: {monomial: c * factor % p for monomial, c in terms.items()}
        for index, terms in rep.items()
    }


@final
class _Element:
    """a monic basis element, optionally with its representation over the input generators"""

    __slots__ = ("lead", "rep", "terms")

    def __init__(self, terms: _Terms, lead: Monomial, rep: _Representation | None) -> None:
        self.terms = terms
        self.lead = lead
        self.rep = rep


def _make_monic(
    terms: _Terms, rep: _Representation | None, order: MonomialOrder, p: int
) -> _Element:
    lead = max(terms, key=order.key)
    inverse = pow(terms[lead], -1, p)
    if inverse != 1:
        terms = {monomial: c * inverse % p for monomial, c in terms.items()}
        if rep is not None:
            rep = _scale_rep(rep, inverse, p)
    return _Element(terms, lead, rep)


def _reduce(
    terms: _Terms,
    basis: Sequence[_Element],
    order: MonomialOrder,
    p: int,
    *,
    quotients: list[_Terms] | None = None,
    rep: _Representation | None = None,
    skip: int | None = None,
) -> _Terms:
    """full reduction of `terms` modulo `basis`. records the quotient of every basis element in
    `quotients` and keeps `rep` in step with the remainder when given"""
    limit = max_terms()
    remaining = dict(terms)
    heap = [(order.heap_key(monomial), monomial) for monomial in remaining]
    heapq.heapify(heap)
    remainder: _Terms = {}
    while heap:
        _, monomial = heapq.heappop(heap)
        coefficient = remaining.pop(monomial, 0)
        if not coefficient:
            continue
        divisor = next(
            (
                index
                for index, element in enumerate(basis)
                if index != skip and monomial_divides(element.lead, monomial)
            ),
            None,
        )
        if divisor is None:
            remainder[monomial] = coefficient
            continue
        element = basis[divisor]
        shift = monomial_quotient(monomial, element.lead)
        if quotients is not None:
            quotient = quotients[divisor]
            quotient[shift] = (quotient.get(shift, 0) + coefficient) % p
        if rep is not None and element.rep is not None:
            _rep_axpy(rep, element.rep, shift, -coefficient, p)
        for tail_monomial, tail_coefficient in element.terms.items():
            if tail_monomial == element.lead:
                continue
            key = tuple(map(add, tail_monomial, shift))
            if key not in remaining:
                heapq.heappush(heap, (order.heap_key(key), key))
            value = (remaining.get(key, 0) - coefficient * tail_coefficient) % p
            if value:
                remaining[key] = value
            else:
                remaining.pop(key, None)
        if len(remaining) + len(remainder) > limit:
            raise TermLimitError(len(remaining) + len(remainder), limit)
    return remainder


def _spoly(
    a: _Element, b: _Element, p: int, *, track: bool
) -> tuple[_Terms, _Representation | None]:
    lcm = monomial_lcm(a.lead, b.lead)
    shift_a = monomial_quotient(lcm, a.lead)
    shift_b = monomial_quotient(lcm, b.lead)
    terms: _Terms = {}
    _axpy(terms, a.terms, shift_a, 1, p)
    _axpy(terms, b.terms, shift_b, -1, p)
    rep: _Representation | None = None
    if track and a.rep is not None and b.rep is not None:
        rep = {}
        _rep_axpy(rep, a.rep, shift_a, 1, p)
        _rep_axpy(rep, b.rep, shift_b, -1, p)
    return terms, rep


def _update(
    basis: list[_Element], pairs: set[tuple[int, int]], new: _Element, order: MonomialOrder
) -> None:
    """adds `new` to the basis and its pairs to `pairs`, dropping pairs by the gebauer-moller
    criteria (buchberger's coprime and chain criteria)"""
    new_lead = new.lead
    leads = [element.lead for element in basis]

    def keeps(pair: tuple[int, int]) -> bool:
        pair_lcm = monomial_lcm(leads[pair[0]], leads[pair[1]])
        return (
            not monomial_divides(new_lead, pair_lcm)
            or pair_lcm == monomial_lcm(leads[pair[0]], new_lead)
            or pair_lcm == monomial_lcm(leads[pair[1]], new_lead)
        )

    pairs.intersection_update({pair for pair in pairs if keeps(pair)})
    by_lcm: dict[Monomial, list[int]] = {}
    for index, lead in enumerate(leads):
        by_lcm.setdefault(monomial_lcm(lead, new_lead), []).append(index)
    minimal_lcms: list[Monomial] = []
    for lcm in sorted(by_lcm, key=order.key):
        if not any(monomial_divides(smaller, lcm) for smaller in minimal_lcms):
            minimal_lcms.append(lcm)
    new_index = len(basis)
    for lcm in minimal_lcms:
        indices = by_lcm[lcm]
        coprime = any(
            lcm == tuple(map(add, leads[index], new_lead)) for index in indices
        )
        if not coprime:
            pairs.add((min(indices), new_index))
    basis.append(new)


def _buchberger(
    inputs: Sequence[_Terms],
    order: MonomialOrder,
    p: int,
    *,
    track: bool,
) -> list[_Element]:
    candidates = [
        (terms, {index: {tuple(0 for _ in next(iter(terms))): 1}} if track else None)
        for index, terms in enumerate(inputs)
    ]
    # smallest leading terms first, so bigger inputs get reduced by them on the way in
    candidates.sort(key=lambda candidate: order.key(max(candidate[0], key=order.key)))
    basis: list[_Element] = []
    pairs: set[tuple[int, int]] = set()
    for terms, rep in candidates:
        remainder = _reduce(terms, basis, order, p, rep=rep)
        if remainder:
            _update(basis, pairs, _make_monic(remainder, rep, order, p), order)
    while pairs:
        pair = min(
            pairs,
            key=lambda pair: (
                order.key(monomial_lcm(basis[pair[0]].lead, basis[pair[1]].lead)),
                pair,
            ),
        )
        pairs.remove(pair)
        terms, rep = _spoly(basis[pair[0]], basis[pair[1]], p, track=track)
        remainder = _reduce(terms, basis, order, p, rep=rep)
        if remainder:
            _update(basis, pairs, _make_monic(remainder, rep, order, p), order)
    logger.debug("buchberger: %d inputs, %d elements before minimalizing", len(inputs), len(basis))
    return _interreduce(_minimalize(basis, order), order, p)


def _minimalize(basis: Iterable[_Element], order: MonomialOrder) -> list[_Element]:
    minimal: list[_Element] = []
    for element in sorted(basis, key=lambda element: order.key(element.lead)):
        if not any(monomial_divides(kept.lead, element.lead) for kept in minimal):
            minimal.append(element)
    return minimal


def _interreduce(basis: list[_Element], order: MonomialOrder, p: int) -> list[_Element]:
    reduced: list[_Element] = []
    for index, element in enumerate(basis):
        rep = None if element.rep is None else {k: dict(v) for k, v in element.rep.items()}
        terms = _reduce(element.terms, basis, order, p, rep=rep, skip=index)
        if terms.get(element.lead) != 1:
            raise InternalError(f"interreduction changed the leading term of {element.terms}")
        reduced.append(_Element(terms, element.lead, rep))
    reduced.sort(key=lambda element: order.key(element.lead), reverse=True)
    return reduced


@final
@dataclass(frozen=True)
class MembershipResult:
    """`f = sum(cofactors[i] * basis[i]) + remainder`"""

    member: bool
    cofactors: tuple[MultiPoly, ...]
    remainder: MultiPoly


@final
class GroebnerBasis:
    """the reduced groebner basis of an ideal. every element is monic, and they are sorted by
    leading monomial, biggest first"""

    def __init__(
        self,
        generators: IdealGens,
        order: MonomialOrder = MonomialOrder.GREVLEX,
        *,
        track_generators: bool = False,
    ) -> None:
        self.generators: Final = generators
        self.order: Final = order
        self.tracked: Final = track_generators
        first = generators.generators[0] if generators.generators else None
        self._ring: Final = None if first is None else (first.field, first.context)
        self._elements: Final = _buchberger(
            [dict(generator.terms) for generator in generators],
            order,
            first.p if first else 2,
            track=track_generators,
        )
        self.elements: Final = tuple(self._wrap(element.terms) for element in self._elements)

    def _wrap(self, terms: _Terms) -> MultiPoly:
        if self._ring is None:
            raise InternalError("the zero ideal has no ring to build polynomials in")
        return MultiPoly(*self._ring, terms)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.elements)

    def leading_monomials(self) -> list[Monomial]:
        return [element.lead for element in self._elements]

    def _check(self, f: MultiPoly) -> None:
        if self.generators.generators:
            f.check_compatible(self.generators.generators[0])

    def normal_form(self, f: MultiPoly) -> MembershipResult:
        """divides `f` by the basis

        :raises ContextMismatchError: if `f` is from another ring
        """
        self._check(f)
        quotients: list[_Terms] = [{} for _ in self._elements]
        remainder = _reduce(dict(f.terms), self._elements, self.order, f.p, quotients=quotients)
        return MembershipResult(
            member=not remainder,
            cofactors=tuple(MultiPoly(f.field, f.context, q) for q in quotients),
            remainder=MultiPoly(f.field, f.context, remainder),
        )

    def contains(self, f: MultiPoly) -> bool:
        self._check(f)
        return not _reduce(dict(f.terms), self._elements, self.order, f.p)

    def lift(self, cofactors: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
        """rewrites `sum(cofactors[i] * elements[i])` as a combination of the input generators

        :raises UserError: if the basis was built without `track_generators`
        """
        if not self.tracked:
            raise UserError("this groebner basis does not track its generators")
        if len(cofactors) != len(self._elements):
            raise UserError(f"expected {len(self._elements)} cofactors, got {len(cofactors)}")
        if self._ring is None:
            return ()
        p = self._ring[0].p
        lifted: list[_Terms] = [{} for _ in self.generators]
        for cofactor, element in zip(cofactors, self._elements):
            for monomial, coefficient in cofactor:
                for index, terms in (element.rep or {}).items():
                    _axpy(lifted[index], terms, monomial, coefficient, p)
        return tuple(self._wrap(terms) for terms in lifted)


def groebner_basis(
    gens: IdealGens,
    order: MonomialOrder = MonomialOrder.GREVLEX,
    *,
    track_generators: bool = False,
) -> GroebnerBasis:
    """the reduced groebner basis of the ideal generated by `gens`. the empty ideal gives an empty
    basis"""
    return GroebnerBasis(gens, order, track_generators=track_generators)


def normal_form(f: MultiPoly, basis: GroebnerBasis) -> MembershipResult:
    return basis.normal_form(f)


def ideal_contains(
    inner: IdealGens, outer: IdealGens, order: MonomialOrder = MonomialOrder.GREVLEX
) -> bool:
    """whether `inner` is contained in `outer`

    :raises ContextMismatchError: if the ideals are in different rings
    """
    inner.check_compatible(outer)
    if inner.is_zero:
        return True
    basis = groebner_basis(outer, order)
    return all(basis.contains(generator) for generator in inner)


def ideal_equal(
    left: IdealGens, right: IdealGens, order: MonomialOrder = MonomialOrder.GREVLEX
) -> bool:
    """compares reduced groebner bases, which are unique for an ideal and an order"""
    left.check_compatible(right)
    return groebner_basis(left, order).elements == groebner_basis(right, order).elements
