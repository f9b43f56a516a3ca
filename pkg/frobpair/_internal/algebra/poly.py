"""sparse multivariate polynomials over F_p

a polynomial is a map from exponent vectors to nonzero coefficients in `[0, p)`. instances are
immutable once built, so they can be shared freely between threads and processes"""

from __future__ import annotations

import re
from dataclasses import dataclass
from operator import add
from types import MappingProxyType
from typing import TYPE_CHECKING, Final, Literal, final

from typing_extensions import TypeAlias, override

from frobpair._internal.algebra.field import PrimeField, base_p_digits
from frobpair._internal.algebra.orders import MonomialOrder
from frobpair._internal.errors import ContextMismatchError, ExponentOverflowError, UserError
from frobpair._internal.limits import MAX_EXPONENT, check_term_count

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping, Sequence

Monomial: TypeAlias = "tuple[int, ...]"

_IDENTIFIER: Final = re.compile(r"[A-Za-z][A-Za-z0-9]*")


@final
@dataclass(frozen=True)
class VarContext:
    """the ordered variables of the polynomial ring"""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise UserError("at least one variable is required")
        for name in self.names:
            if not _IDENTIFIER.fullmatch(name):
                raise UserError(f"{name!r} is not a valid variable name")
        if len(set(self.names)) != len(self.names):
            raise UserError(f"duplicate variable names in {', '.join(self.names)}")

    @classmethod
    def from_text(cls, text: str) -> VarContext:
        """parse a comma separated list such as `x,y,z`"""
        return cls(tuple(name.strip() for name in text.split(",")))

    @property
    def d(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UserError(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return (0,) * self.d


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _check_exponent(exponent: int) -> None:
    if exponent > MAX_EXPONENT:
        raise ExponentOverflowError(exponent)


@final
class MultiPoly:
    """an element of F_p[x_1, ..., x_d]"""

    __slots__ = ("_hash", "_terms", "context", "field")

    def __init__(
        self, field: PrimeField, context: VarContext, terms: Mapping[Monomial, int] | None = None
    ) -> None:
        canonical: dict[Monomial, int] = {}
        for monomial, coefficient in (terms or {}).items():
            if len(monomial) != context.d:
                raise ContextMismatchError(
                    f"monomial {monomial} does not have {context.d} exponents"
                )
            if any(exponent < 0 for exponent in monomial):
                raise UserError(f"negative exponent in {monomial}")
            for exponent in monomial:
                _check_exponent(exponent)
            value = (canonical.get(monomial, 0) + coefficient) % field.p
            if value:
                canonical[monomial] = value
            else:
                canonical.pop(monomial, None)
        self.field: Final = field
        self.context: Final = context
        self._terms: Final = canonical
        self._hash: int | None = None

    @classmethod
    def _trusted(
        cls, field: PrimeField, context: VarContext, terms: dict[Monomial, int]
    ) -> MultiPoly:
        """skips validation. `terms` must already be reduced, free of zeros, and not shared"""
        result = cls.__new__(cls)
        object.__setattr__(result, "field", field)
        object.__setattr__(result, "context", context)
        object.__setattr__(result, "_terms", terms)
        object.__setattr__(result, "_hash", None)
        return result

    @classmethod
    def zero(cls, field: PrimeField, context: VarContext) -> MultiPoly:
        return cls._trusted(field, context, {})

    @classmethod
    def constant(cls, field: PrimeField, context: VarContext, value: int) -> MultiPoly:
        return cls(field, context, {context.one(): value})

    @classmethod
    def variable(cls, field: PrimeField, context: VarContext, index: int) -> MultiPoly:
        exponents = [0] * context.d
        exponents[index] = 1
        return cls._trusted(field, context, {tuple(exponents): 1})

    @classmethod
    def monomial(
        cls, field: PrimeField, context: VarContext, exponents: Sequence[int], coefficient: int = 1
    ) -> MultiPoly:
        return cls(field, context, {tuple(exponents): coefficient})

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(monomial) for monomial in self._terms)

    def coefficient(self, monomial: Monomial) -> int:
        return self._terms.get(monomial, 0)

    def degree(self) -> int:
        """total degree, -1 for the zero polynomial"""
        return max((sum(monomial) for monomial in self._terms), default=-1)

    def max_exponents(self) -> Monomial:
        """the largest exponent of each variable over all terms"""
        if not self._terms:
            return self.context.one()
        return tuple(map(max, *self._terms)) if len(self._terms) > 1 else next(iter(self._terms))

    def is_homogeneous(self) -> bool:
        return len({sum(monomial) for monomial in self._terms}) <= 1

    def sorted_terms(
        self, order: MonomialOrder = MonomialOrder.GREVLEX
    ) -> list[tuple[Monomial, int]]:
        """terms from biggest to smallest"""
        return sorted(self._terms.items(), key=lambda term: order.key(term[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = MonomialOrder.GREVLEX) -> tuple[Monomial, int]:
        if not self._terms:
            raise UserError("the zero polynomial has no leading term")
        monomial = max(self._terms, key=order.key)
        return monomial, self._terms[monomial]

    def leading_monomial(self, order: MonomialOrder = MonomialOrder.GREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = MonomialOrder.GREVLEX) -> MultiPoly:
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.leading_term(order)[1]))

    def scale(self, factor: int) -> MultiPoly:
        factor %= self.p
        if not factor:
            return MultiPoly.zero(self.field, self.context)
        if factor == 1:
            return self
        return MultiPoly._trusted(
            self.field,
            self.context,
            {monomial: c * factor % self.p for monomial, c in self._terms.items()},
        )

    def shift(self, monomial: Monomial, factor: int = 1) -> MultiPoly:
        """multiply by the term `factor * x^monomial`"""
        factor %= self.p
        if not factor:
            return MultiPoly.zero(self.field, self.context)
        for exponent, extra in zip(self.max_exponents(), monomial):
            _check_exponent(exponent + extra)
        return MultiPoly._trusted(
            self.field,
            self.context,
            {tuple(map(add, m, monomial)): c * factor % self.p for m, c in self._terms.items()},
        )

    def check_compatible(self, other: MultiPoly) -> None:
        if self.field != other.field:
            raise ContextMismatchError(f"F_{self.p} and F_{other.p} polynomials can't be mixed")
        if self.context != other.context:
            raise ContextMismatchError(
                f"variables ({', '.join(self.context.names)}) and"
                f" ({', '.join(other.context.names)}) don't match"
            )

    def _coerce(self, other: MultiPoly | int) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly.constant(self.field, self.context, other)
        self.check_compatible(other)
        return other

    def __add__(self, other: MultiPoly | int) -> MultiPoly:
        return _add(self, self._coerce(other), 1)

    def __radd__(self, other: int) -> MultiPoly:
        return self + other

    def __sub__(self, other: MultiPoly | int) -> MultiPoly:
        return _add(self, self._coerce(other), -1)

    def __rsub__(self, other: int) -> MultiPoly:
        return -self + other

    def __neg__(self) -> MultiPoly:
        return self.scale(-1)

    def __mul__(self, other: MultiPoly | int) -> MultiPoly:
        if isinstance(other, int):
            return self.scale(other)
        self.check_compatible(other)
        return _multiply(self, other)

    def __rmul__(self, other: int) -> MultiPoly:
        return self.scale(other)

    def __pow__(self, n: int) -> MultiPoly:
        return poly_pow(self, n)

    @override
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == MultiPoly.constant(self.field, self.context, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.context == other.context
            and self._terms == other._terms
        )

    @override
    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.field, self.context, frozenset(self._terms.items())))
            )
        return self._hash  # pyright:ignore[reportReturnType]

    @override
    def __repr__(self) -> str:
        return f"MultiPoly(F_{self.p}, {format_poly(self)!r})"

    @override
    def __str__(self) -> str:
        return format_poly(self)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.context.d:
            raise ContextMismatchError(f"expected {self.context.d} coordinates, got {len(point)}")
        total = 0
        for monomial, coefficient in self._terms.items():
            value = coefficient
            for x, exponent in zip(point, monomial):
                value = value * pow(x, exponent, self.p) % self.p
            total += value
        return total % self.p

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """replace variable `i` by `images[i]`. the images may live in another ring over the same
        field, which becomes the ring of the result"""
        if len(images) != self.context.d:
            raise ContextMismatchError(f"expected {self.context.d} images, got {len(images)}")
        if not images:
            raise ContextMismatchError("nothing to substitute")
        target = images[0]
        for image in images:
            target.check_compatible(image)
        if self.field != target.field:
            raise ContextMismatchError(f"F_{self.p} and F_{target.p} polynomials can't be mixed")
        powers: list[dict[int, MultiPoly]] = [{} for _ in images]
        result = MultiPoly.zero(target.field, target.context)
        for monomial, coefficient in self._terms.items():
            term = MultiPoly.constant(target.field, target.context, coefficient)
            for index, exponent in enumerate(monomial):
                if exponent:
                    cache = powers[index]
                    if exponent not in cache:
                        cache[exponent] = poly_pow(images[index], exponent)
                    term *= cache[exponent]
            result += term
        return result


def _add(a: MultiPoly, b: MultiPoly, sign: int) -> MultiPoly:
    p = a.p
    terms = dict(a._terms)  # pyright:ignore[reportPrivateUsage]
    for monomial, coefficient in b._terms.items():  # pyright:ignore[reportPrivateUsage]
        value = (terms.get(monomial, 0) + sign * coefficient) % p
        if value:
            terms[monomial] = value
        else:
            del terms[monomial]
    check_term_count(len(terms))
    return MultiPoly._trusted(a.field, a.context, terms)  # pyright:ignore[reportPrivateUsage]


def _multiply(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.is_zero or b.is_zero:
        return MultiPoly.zero(a.field, a.context)
    for x, y in zip(a.max_exponents(), b.max_exponents()):
        _check_exponent(x + y)
    if len(a) > len(b):
        a, b = b, a
    p = a.p
    accumulated: dict[Monomial, int] = {}
    for ma, ca in a:
        for mb, cb in b:
            monomial = tuple(map(add, ma, mb))
            accumulated[monomial] = accumulated.get(monomial, 0) + ca * cb
    check_term_count(len(accumulated))
    terms = {m: c % p for m, c in accumulated.items() if c % p}
    return MultiPoly._trusted(a.field, a.context, terms)  # pyright:ignore[reportPrivateUsage]


ArithKind: TypeAlias = Literal["add", "sub", "mul"]


def poly_arith(a: MultiPoly, b: MultiPoly, kind: ArithKind) -> MultiPoly:
    """one ring operation on two polynomials of the same ring

    :raises ContextMismatchError: if the rings differ
    """
    a.check_compatible(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    return a * b


def frobenius_power(f: MultiPoly, i: int) -> MultiPoly:
    """`f^(p^i)`, which over F_p only scales every exponent by `p^i`"""
    if i < 0:
        raise UserError(f"frobenius power {i} is negative")
    if not i:
        return f
    q = f.p**i
    for exponent in f.max_exponents():
        _check_exponent(exponent * q)
    return MultiPoly._trusted(  # pyright:ignore[reportPrivateUsage]
        f.field,
        f.context,
        {tuple(exponent * q for exponent in monomial): c for monomial, c in f},
    )


def _binary_pow(f: MultiPoly, n: int) -> MultiPoly:
    result = MultiPoly.constant(f.field, f.context, 1)
    base = f
    while n:
        if n & 1:
            result *= base
        n >>= 1
        if n:
            base *= base
    return result


def poly_pow(f: MultiPoly, n: int) -> MultiPoly:
    """`f^n`, assembled from the base p digits of `n` as `prod_i frobenius_power(f^(d_i), i)` so the
    expensive part only ever raises `f` to powers below `p`"""
    if n < 0:
        raise UserError(f"negative power {n}")
    if not n:
        return MultiPoly.constant(f.field, f.context, 1)
    if f.is_zero:
        return f
    for exponent in f.max_exponents():
        _check_exponent(exponent * n)
    digit_powers: dict[int, MultiPoly] = {}
    result = MultiPoly.constant(f.field, f.context, 1)
    for i, digit in enumerate(base_p_digits(n, f.p)):
        if not digit:
            continue
        if digit not in digit_powers:
            digit_powers[digit] = _binary_pow(f, digit)
        result *= frobenius_power(digit_powers[digit], i)
    return result


def exact_divide(g: MultiPoly, f: MultiPoly) -> MultiPoly | None:
    """`g / f` if `f` divides `g`, otherwise `None`

    :raises UserError: if `f` is zero
    """
    g.check_compatible(f)
    if f.is_zero:
        raise UserError("division by the zero polynomial")
    order = MonomialOrder.GREVLEX
    lead, lead_coefficient = f.leading_term(order)
    inverse = f.field.inv(lead_coefficient)
    quotient: dict[Monomial, int] = {}
    remainder = g
    while not remainder.is_zero:
        monomial, coefficient = remainder.leading_term(order)
        if not monomial_divides(lead, monomial):
            return None
        factor_monomial = monomial_quotient(monomial, lead)
        factor = coefficient * inverse % g.p
        quotient[factor_monomial] = factor
        remainder -= f.shift(factor_monomial, factor)
    return MultiPoly._trusted(g.field, g.context, quotient)  # pyright:ignore[reportPrivateUsage]


def _format_monomial(context: VarContext, monomial: Monomial) -> str:
    return "*".join(
        name if exponent == 1 else f"{name}^{exponent}"
        for name, exponent in zip(context.names, monomial)
        if exponent
    )


def format_poly(f: MultiPoly, order: MonomialOrder = MonomialOrder.GREVLEX) -> str:
    """canonical text form: biggest term first, coefficients in `[0, p)`, `0` for zero"""
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for monomial, coefficient in f.sorted_terms(order):
        variables = _format_monomial(f.context, monomial)
        if not variables:
            parts.append(str(coefficient))
        elif coefficient == 1:
            parts.append(variables)
        else:
            parts.append(f"{coefficient}*{variables}")
    return " + ".join(parts)


def product(factors: Iterable[MultiPoly], field: PrimeField, context: VarContext) -> MultiPoly:
    result = MultiPoly.constant(field, context, 1)
    for factor in factors:
        result *= factor
    return result
