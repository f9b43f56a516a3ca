"""divided power operators `D_{x_i,t}(x_i^s) = binom(s, t) x_i^(s-t)` and words built from them"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union, final

from typing_extensions import TypeAlias

from frobpair._internal.algebra.poly import MultiPoly
from frobpair._internal.errors import ContextMismatchError, UserError

if TYPE_CHECKING:
    from frobpair._internal.algebra.poly import Monomial


@final
@dataclass(frozen=True)
class DividedPower:
    variable: int
    order: int

    def __post_init__(self) -> None:
        if self.variable < 0:
            raise UserError(f"variable index {self.variable} is negative")
        if self.order < 1:
            raise UserError(f"divided power order must be at least 1, got {self.order}")


@final
@dataclass(frozen=True)
class MultiplyBy:
    factor: MultiPoly


OperatorAtom: TypeAlias = Union[DividedPower, MultiplyBy]


@final
@dataclass(frozen=True)
class OperatorWord:
    """a composition of atoms. like function composition, the last atom acts first"""

    atoms: tuple[OperatorAtom, ...] = ()

    def __call__(self, f: MultiPoly) -> MultiPoly:
        return operator_word_apply(self, f)


def divided_power_apply(variable: int, order: int, f: MultiPoly) -> MultiPoly:
    """applies `D_{x_variable,order}` to `f`. terms whose exponent is below `order` vanish

    :raises UserError: if `variable` is not a variable of `f`'s ring
    """
    if not 0 <= variable < f.context.d:
        raise UserError(
            f"variable index {variable} is out of range for {f.context.d} variables"
        )
    terms: dict[Monomial, int] = {}
    for monomial, coefficient in f:
        exponent = monomial[variable]
        if exponent < order:
            continue
        value = coefficient * f.field.binomial(exponent, order) % f.p
        if value:
            lowered = list(monomial)
            lowered[variable] -= order
            terms[tuple(lowered)] = value
    return MultiPoly(f.field, f.context, terms)


def operator_word_apply(word: OperatorWord, f: MultiPoly) -> MultiPoly:
    """:raises ContextMismatchError: if a `MultiplyBy` factor lives in another ring"""
    result = f
    for atom in reversed(word.atoms):
        if isinstance(atom, DividedPower):
            result = divided_power_apply(atom.variable, atom.order, result)
        else:
            if atom.factor.context != f.context or atom.factor.field != f.field:
                raise ContextMismatchError("operator word and polynomial are in different rings")
            result = atom.factor * result
    return result
