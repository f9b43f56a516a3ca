"""ideals of p^e-th roots

R = F_p[x_1, ..., x_d] is free over its subring of p^e-th powers with basis the monomials `x^a`,
`0 <= a_i < p^e`. so every polynomial is uniquely `sum_a c_a^(p^e) x^a`, and the ideal of p^e-th
roots `I_e(f)` is the ideal generated by the `c_a`. it is the smallest ideal `J` with `f` in the
bracket power `J^[p^e]`"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from itertools import product
from typing import TYPE_CHECKING, final

from frobpair._internal.algebra import linalg
from frobpair._internal.algebra.poly import MultiPoly, frobenius_power
from frobpair._internal.errors import ContextMismatchError, SingularMatrixError, UserError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping, Sequence

    from frobpair._internal.algebra.field import PrimeField
    from frobpair._internal.algebra.poly import Monomial


@final
@dataclass(frozen=True)
class PeDecomposition:
    """`source = sum_a frobenius_power(entries[a], e) * x^a`"""

    e: int
    source: MultiPoly
    entries: Mapping[Monomial, MultiPoly] = dataclass_field(hash=False)

    def reconstruct(self) -> MultiPoly:
        result = MultiPoly.zero(self.source.field, self.source.context)
        for residue, root in self.entries.items():
            result += frobenius_power(root, self.e).shift(residue)
        return result

    def __iter__(self) -> Iterator[tuple[Monomial, MultiPoly]]:
        return iter(self.entries.items())


@final
@dataclass(frozen=True)
class IdealGens:
    """generators of an ideal. no generators means the zero ideal"""

    generators: tuple[MultiPoly, ...] = ()

    def __post_init__(self) -> None:
        for generator in self.generators:
            if generator.is_zero:
                raise UserError("ideal generators must be nonzero")
            self.generators[0].check_compatible(generator)

    @classmethod
    def of(cls, generators: Iterable[MultiPoly]) -> IdealGens:
        """drops zeros and duplicates up to a scalar"""
        seen: dict[MultiPoly, None] = {}
        for generator in generators:
            if not generator.is_zero:
                seen.setdefault(generator.monic(), None)
        return cls(tuple(seen))

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def check_compatible(self, other: IdealGens) -> None:
        if self.generators and other.generators:
            self.generators[0].check_compatible(other.generators[0])

    def max_degree(self) -> int:
        return max((generator.degree() for generator in self.generators), default=-1)


def pe_decompose(f: MultiPoly, e: int) -> PeDecomposition:
    """splits every exponent vector `b` of `f` as `p^e * q + r` and collects `c * x^q` under `r`.
    p^e-th roots of coefficients are the identity over F_p"""
    if e < 0:
        raise UserError(f"e must not be negative, got {e}")
    q = f.p**e
    collected: dict[Monomial, dict[Monomial, int]] = {}
    for monomial, coefficient in f:
        quotient, residue = zip(*(divmod(exponent, q) for exponent in monomial))
        collected.setdefault(residue, {})[quotient] = coefficient
    entries = {
        residue: MultiPoly(f.field, f.context, terms)
        for residue, terms in sorted(collected.items())
    }
    return PeDecomposition(e, f, entries)


def ie_roots(f: MultiPoly, e: int) -> IdealGens:
    """generators of `I_e(f)`: the nonzero entries of `pe_decompose(f, e)`, deduplicated up to a
    scalar"""
    return IdealGens.of(root for _, root in pe_decompose(f, e))


def bracket_power(ideal: IdealGens, e: int) -> IdealGens:
    """`J^[p^e]`, generated by the p^e-th powers of the generators of `J`"""
    return IdealGens(tuple(frobenius_power(generator, e) for generator in ideal))


def ideal_product(left: IdealGens, right: IdealGens) -> IdealGens:
    left.check_compatible(right)
    return IdealGens.of(a * b for a, b in product(left, right))


@final
@dataclass(frozen=True)
class LinearChange:
    """an invertible d by d matrix `A` acting by `f(x) -> f(A x)`"""

    field: PrimeField
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not linalg.determinant(self.matrix, self.field.p):
            raise SingularMatrixError(f"the linear change {self.matrix} is not invertible")

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]]) -> LinearChange:
        return cls(field, tuple(tuple(value % field.p for value in row) for row in rows))

    @classmethod
    def identity(cls, field: PrimeField, d: int) -> LinearChange:
        return cls.from_rows(field, linalg.identity(d))

    @property
    def d(self) -> int:
        return len(self.matrix)

    def inverse(self) -> LinearChange:
        return LinearChange.from_rows(self.field, linalg.inverse(self.matrix, self.field.p))


def linear_change(f: MultiPoly, change: LinearChange) -> MultiPoly:
    """`phi_A(f)`: substitutes `x_i -> sum_j A[i][j] x_j`

    :raises ContextMismatchError: if the matrix size or field doesn't match the ring of `f`
    """
    if change.d != f.context.d or change.field != f.field:
        raise ContextMismatchError(
            f"a {change.d}x{change.d} change over F_{change.field.p} can't act on"
            f" F_{f.p}[{', '.join(f.context.names)}]"
        )
    images = [
        MultiPoly(
            f.field,
            f.context,
            {
                tuple(int(i == j) for i in range(f.context.d)): value
                for j, value in enumerate(row)
                if value
            },
        )
        for row in change.matrix
    ]
    return f.substitute(images)


def linear_change_ideal(ideal: IdealGens, change: LinearChange) -> IdealGens:
    return IdealGens(tuple(linear_change(generator, change) for generator in ideal))
