"""cartier-manin matrices of hyperelliptic curves `y^2 = h(x)` over F_p, and what they say about
the curve: p-rank, a-number, ordinarity, and which first order equations are stratified"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Final, final

from frobpair._internal.algebra import linalg
from frobpair._internal.algebra.field import PrimeField
from frobpair._internal.algebra.parser import parse_poly
from frobpair._internal.algebra.poly import MultiPoly, VarContext, poly_pow
from frobpair._internal.errors import NotSquarefreeError, UserError

if TYPE_CHECKING:
    from collections.abc import Sequence

PLANE_VARIABLES: Final = VarContext(("x", "y", "z"))


def _coefficients(h: MultiPoly) -> list[int]:
    """dense coefficient list of a univariate polynomial, constant term first"""
    coefficients = [0] * (h.degree() + 1)
    for (exponent,), coefficient in h:
        coefficients[exponent] = coefficient
    return coefficients


def _trim(coefficients: list[int]) -> list[int]:
    while coefficients and not coefficients[-1]:
        coefficients.pop()
    return coefficients


def _univariate_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inverse = pow(b[-1], -1, p)
        while len(a) >= len(b):
            factor = a[-1] * inverse % p
            shift = len(a) - len(b)
            for index, value in enumerate(b):
                a[shift + index] = (a[shift + index] - factor * value) % p
            _trim(a)
        a, b = b, a
    return a


@final
@dataclass(frozen=True)
class HyperellipticModel:
    """the curve `y^2 = h(x)`. `h` must be squarefree of degree `2g + 1` or `2g + 2` with `g >= 1`,
    and p must be odd"""

    h: MultiPoly

    def __post_init__(self) -> None:
        if self.h.context.d != 1:
            names = ", ".join(self.h.context.names)
            raise UserError(f"h must be univariate, got variables {names}")
        if self.p == 2:
            raise UserError("cartier-manin matrices of y^2 = h(x) need an odd characteristic")
        if self.h.degree() < 3:
            raise UserError(f"h must have degree at least 3 for genus 1 or more, got {self.h}")
        coefficients = _coefficients(self.h)
        derivative = [index * value % self.p for index, value in enumerate(coefficients)][1:]
        if len(_univariate_gcd(coefficients, derivative, self.p)) != 1:
            raise NotSquarefreeError(f"{self.h} is not squarefree over F_{self.p}")

    @classmethod
    def from_text(cls, p: int, text: str, variable: str = "x") -> HyperellipticModel:
        return cls(parse_poly(text, VarContext((variable,)), PrimeField(p)))

    @property
    def p(self) -> int:
        return self.h.p

    @property
    def genus(self) -> int:
        return (self.h.degree() - 1) // 2


@final
@dataclass(frozen=True)
class CartierManinMatrix:
    """`rows[j - 1][i - 1] = c_(jp - i)` where `h^((p-1)/2) = sum(c_k x^k)`"""

    p: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def genus(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def rank(self) -> int:
        return linalg.rank(self.rows, self.p)

    def determinant(self) -> int:
        return linalg.determinant(self.rows, self.p)

    def power(self, n: int) -> list[list[int]]:
        return linalg.mat_pow(self.rows, n, self.p)


@final
@dataclass(frozen=True)
class CurveClassification:
    p_rank: int
    a_number: int
    ordinary: bool
    superspecial: bool


def cartier_manin(model: HyperellipticModel) -> CartierManinMatrix:
    p, genus = model.p, model.genus
    power = poly_pow(model.h, (p - 1) // 2)
    return CartierManinMatrix(
        p,
        tuple(
            tuple(power.coefficient((j * p - i,)) for i in range(1, genus + 1))
            for j in range(1, genus + 1)
        ),
    )


def classify(model: HyperellipticModel) -> CurveClassification:
    """the a-number is the corank of the matrix. the p-rank is the rank of its g-th power, since
    over F_p every frobenius twist of the matrix is the matrix itself"""
    matrix = cartier_manin(model)
    genus = matrix.genus
    p_rank = linalg.rank(matrix.power(genus), matrix.p)
    return CurveClassification(
        p_rank=p_rank,
        a_number=genus - matrix.rank(),
        ordinary=p_rank == genus,
        superspecial=matrix.is_zero,
    )


def stratified_test(model: HyperellipticModel, a: Sequence[int]) -> bool:
    """whether the equation with coefficients `a = (a_0, ..., a_(g-1))` is stratified, which
    happens exactly when `a` is in the kernel of the cartier-manin matrix

    :raises UserError: if `a` is zero or has the wrong length
    """
    matrix = cartier_manin(model)
    if len(a) != matrix.genus:
        raise UserError(f"expected {matrix.genus} coefficients, got {len(a)}")
    vector = [value % matrix.p for value in a]
    if not any(vector):
        raise UserError("at least one coefficient has to be nonzero")
    return not any(linalg.mat_vec(matrix.rows, vector, matrix.p))


def stratification_kernel(model: HyperellipticModel) -> list[list[int]]:
    """a basis of the kernel. it is empty exactly when the curve is ordinary"""
    matrix = cartier_manin(model)
    return linalg.kernel_basis(matrix.rows, matrix.p, matrix.genus)


def hasse_invariant(model: HyperellipticModel) -> int:
    """the single cartier-manin entry of an elliptic curve. zero means supersingular"""
    if model.genus != 1:
        raise UserError(f"the hasse invariant needs genus 1, this curve has genus {model.genus}")
    return cartier_manin(model).rows[0][0]


def homogenized_equation(model: HyperellipticModel) -> MultiPoly:
    """the plane model `y^2 z^(deg h - 2) - z^(deg h) h(x/z)` in the variables x, y, z"""
    degree = model.h.degree()
    field = model.h.field
    terms = {(0, 2, degree - 2): 1}
    for (exponent,), coefficient in model.h:
        terms[exponent, 0, degree - exponent] = -coefficient
    return MultiPoly(field, PLANE_VARIABLES, terms)
