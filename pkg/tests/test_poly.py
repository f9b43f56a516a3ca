from __future__ import annotations

from hypothesis import given, settings, strategies as st
from pytest import MonkeyPatch, mark, raises

from frobpair._internal.algebra.field import PrimeField
from frobpair._internal.algebra.orders import MonomialOrder
from frobpair._internal.algebra.poly import (
    MultiPoly,
    VarContext,
    exact_divide,
    format_poly,
    frobenius_power,
    poly_arith,
    poly_pow,
    product,
)
from frobpair._internal.errors import (
    ContextMismatchError,
    ExponentOverflowError,
    TermLimitError,
    UserError,
)
from frobpair._internal.limits import MAX_TERMS_VARIABLE, max_terms
from tests.conftest import Ring
from tests.strategies import poly_pairs, single_polys


def test_var_context_rejects_duplicates():
    with raises(UserError):
        VarContext(("x", "x"))


def test_var_context_rejects_bad_names():
    with raises(UserError):
        VarContext(("x", "2y"))


def test_var_context_needs_a_variable():
    with raises(UserError):
        VarContext(())


def test_var_context_from_text():
    assert VarContext.from_text("x, y ,z").names == ("x", "y", "z")


def test_coefficients_are_reduced_and_zeros_dropped():
    f = MultiPoly(PrimeField(5), VarContext(("x",)), {(1,): 7, (0,): 10})
    assert dict(f.terms) == {(1,): 2}


def test_negative_exponent_rejected():
    with raises(UserError):
        MultiPoly(PrimeField(5), VarContext(("x",)), {(-1,): 1})


def test_wrong_arity_rejected():
    with raises(ContextMismatchError):
        MultiPoly(PrimeField(5), VarContext(("x",)), {(1, 2): 1})


def test_exponent_over_32_bits_rejected():
    with raises(ExponentOverflowError):
        MultiPoly(PrimeField(5), VarContext(("x",)), {(2**32,): 1})


def test_arith():
    ring = Ring(5, "x,y")
    f, g = ring("x + y"), ring("x - y")
    assert poly_arith(f, g, "add") == ring("2*x")
    assert poly_arith(f, g, "sub") == ring("2*y")
    assert poly_arith(f, g, "mul") == ring("x^2 - y^2")


def test_arith_rejects_other_field():
    with raises(ContextMismatchError):
        poly_arith(Ring(5, "x")("x"), Ring(7, "x")("x"), "add")


def test_arith_rejects_other_variables():
    with raises(ContextMismatchError):
        _ = Ring(5, "x")("x") * Ring(5, "y")("y")


def test_int_coercion():
    ring = Ring(3, "x")
    assert ring("x") + 4 == ring("x + 1")
    assert 2 - ring("x") == ring("2 + 2*x")
    assert ring("x") * 3 == 0


def test_degree_and_leading_term():
    ring = Ring(7, "x,y,z")
    f = ring("x*y^2 + 3*z^3 + x")
    assert f.degree() == 3
    assert ring("0").degree() == -1
    # grevlex breaks the tie by the smallest power of the last variable
    assert f.leading_term() == ((1, 2, 0), 1)
    assert f.leading_monomial(MonomialOrder.LEX) == (1, 2, 0)
    assert ring("z^5 + x").leading_monomial(MonomialOrder.LEX) == (1, 0, 0)


def test_leading_term_of_zero():
    with raises(UserError):
        Ring(3, "x")("0").leading_term()


def test_monic():
    ring = Ring(7, "x")
    assert ring("3*x^2 + 1").monic() == ring("x^2 + 5")


def test_max_exponents():
    assert Ring(5, "x,y")("x^3 + x*y^4").max_exponents() == (3, 4)


def test_is_homogeneous():
    ring = Ring(5, "x,y")
    assert ring("x^2 + x*y").is_homogeneous()
    assert not ring("x^2 + y").is_homogeneous()


def test_evaluate():
    assert Ring(7, "x,y")("x^2 + 3*y").evaluate((2, 5)) == 5


def test_substitute():
    ring = Ring(5, "x,y")
    assert ring("x*y").substitute((ring("x + y"), ring("y"))) == ring("x*y + y^2")


def test_frobenius_power_scales_exponents():
    ring = Ring(3, "x,y")
    assert frobenius_power(ring("x + 2*y^2"), 2) == ring("x^9 + 2*y^18")


def test_frobenius_power_zero_is_identity():
    f = Ring(3, "x")("x + 1")
    assert frobenius_power(f, 0) is f


def test_frobenius_power_overflow():
    with raises(ExponentOverflowError):
        frobenius_power(Ring(3, "x")("x^2"), 21)


def test_poly_pow_by_digits():
    ring = Ring(3, "x,y")
    assert poly_pow(ring("x + y"), 3) == ring("x^3 + y^3")
    assert poly_pow(ring("x + y"), 4) == ring("x^4 + x^3*y + x*y^3 + y^4")
    assert poly_pow(ring("x + y"), 0) == 1
    assert poly_pow(ring("0"), 5) == 0


def test_poly_pow_negative():
    with raises(UserError):
        poly_pow(Ring(3, "x")("x"), -1)


def test_poly_pow_overflow():
    with raises(ExponentOverflowError):
        poly_pow(Ring(5, "x")("x^4"), 2**30)


def test_term_limit(monkeypatch: MonkeyPatch):
    monkeypatch.setenv(MAX_TERMS_VARIABLE, "10")
    ring = Ring(101, "x,y")
    with raises(TermLimitError) as exc_info:
        _ = ring("(x + y + 1)^3") * ring("(x + y + 1)^3")
    assert exc_info.value.limit == 10


def test_max_terms_must_be_an_integer(monkeypatch: MonkeyPatch):
    monkeypatch.setenv(MAX_TERMS_VARIABLE, "lots")
    with raises(UserError):
        max_terms()


def test_exact_divide():
    ring = Ring(5, "x,y")
    assert exact_divide(ring("x^2 - y^2"), ring("x + y")) == ring("x - y")
    assert exact_divide(ring("x^2 + y"), ring("x")) is None
    assert exact_divide(ring("0"), ring("x")) == 0


def test_exact_divide_by_zero():
    ring = Ring(5, "x")
    with raises(UserError):
        exact_divide(ring("x"), ring("0"))


@mark.parametrize(
    ("text", "expected"),
    [
        ("0", "0"),
        ("x*y^2 + 3*x + 2", "x*y^2 + 3*x + 2"),
        ("-x", "4*x"),
        ("y^3 + x*y + z", "y^3 + x*y + z"),
    ],
)
def test_format_poly(text: str, expected: str):
    assert format_poly(Ring(5, "x,y,z")(text)) == expected


def test_product():
    ring = Ring(5, "x,y")
    assert product([ring("x"), ring("y"), ring("2")], ring.field, ring.context) == ring("2*x*y")
    assert product([], ring.field, ring.context) == 1


def test_poly_is_hashable():
    ring = Ring(5, "x")
    assert len({ring("x + 1"), ring("1 + x"), ring("x")}) == 2


@given(poly_pairs())
def test_addition_commutes(pair: tuple[MultiPoly, MultiPoly]):
    f, g = pair
    assert f + g == g + f
    assert f + g - g == f


@given(poly_pairs(max_exponent=3))
def test_multiplication_distributes(pair: tuple[MultiPoly, MultiPoly]):
    f, g = pair
    assert f * (g + 1) == f * g + f


@settings(max_examples=50)
@given(single_polys(max_variables=2, max_exponent=3), st.integers(0, 12))
def test_poly_pow_matches_repeated_multiplication(f: MultiPoly, n: int):
    expected = MultiPoly.constant(f.field, f.context, 1)
    for _ in range(n):
        expected *= f
    assert poly_pow(f, n) == expected


@given(single_polys(max_exponent=3), st.integers(0, 2))
def test_frobenius_is_the_p_power(f: MultiPoly, i: int):
    assert frobenius_power(f, i) == poly_pow(f, f.p**i)


@given(poly_pairs(max_exponent=3))
def test_exact_divide_recovers_factor(pair: tuple[MultiPoly, MultiPoly]):
    f, g = pair
    if g.is_zero:
        return
    assert exact_divide(f * g, g) == f


@given(poly_pairs(max_exponent=3))
def test_frobenius_is_additive(pair: tuple[MultiPoly, MultiPoly]):
    a, b = pair
    assert frobenius_power(a + b, 1) == frobenius_power(a, 1) + frobenius_power(b, 1)


def test_difference_of_equal_polynomials_is_zero():
    ring = Ring(5, "x")
    assert poly_arith(ring("x + 1"), ring("x + 1"), "sub").is_zero


def test_term_limit_covers_addition(monkeypatch: MonkeyPatch):
    ring = Ring(5, "x,y,z")
    f, g = ring("x + y"), ring("z + 1")
    monkeypatch.setenv(MAX_TERMS_VARIABLE, "3")
    with raises(TermLimitError):
        _ = f + g
