from __future__ import annotations

from hypothesis import assume, given, strategies as st
from pytest import raises

from frobpair._internal.algebra.operators import (
    DividedPower,
    MultiplyBy,
    OperatorWord,
    divided_power_apply,
    operator_word_apply,
)
from frobpair._internal.algebra.poly import MultiPoly
from frobpair._internal.errors import ContextMismatchError, UserError
from tests.conftest import Ring
from tests.strategies import single_polys


def test_divided_power_of_monomial():
    ring = Ring(7, "x,y")
    # binom(5, 2) = 10
    assert divided_power_apply(0, 2, ring("x^5*y")) == ring("3*x^3*y")


def test_divided_power_kills_low_powers():
    ring = Ring(7, "x,y")
    assert divided_power_apply(1, 2, ring("x^4*y + y^3")) == ring("3*y")


def test_divided_power_sees_through_characteristic():
    # D_{x,p} is not (d/dx)^p / p!, which would not even be defined in characteristic p
    ring = Ring(3, "x")
    assert divided_power_apply(0, 3, ring("x^3")) == 1
    assert divided_power_apply(0, 3, ring("x^4")) == ring("x")


def test_divided_power_variable_out_of_range():
    with raises(UserError):
        divided_power_apply(2, 1, Ring(5, "x,y")("x"))


def test_divided_power_order_must_be_positive():
    with raises(UserError):
        DividedPower(0, 0)


def test_word_applies_last_atom_first():
    ring = Ring(5, "x,y")
    word = OperatorWord((DividedPower(0, 1), MultiplyBy(ring("x"))))
    # D_x(x * x^2) = 3x^2, whereas x * D_x(x^2) would be 2x^2
    assert operator_word_apply(word, ring("x^2")) == ring("3*x^2")
    assert word(ring("x^2")) == ring("3*x^2")


def test_empty_word_is_identity():
    f = Ring(5, "x")("x + 1")
    assert OperatorWord()(f) == f


def test_word_rejects_factor_from_other_ring():
    word = OperatorWord((MultiplyBy(Ring(5, "y")("y")),))
    with raises(ContextMismatchError):
        word(Ring(5, "x")("x"))


def test_singh_operator_sends_pair_to_frobenius_power():
    ring = Ring(2, "u,v,w,x,y,z")
    word = OperatorWord((DividedPower(0, 1), DividedPower(4, 1), DividedPower(5, 1)))
    assert word(ring("w*((v*z - w*y)*(w*x - u*z))")) == ring("w^2")


def test_cubic_operator():
    ring = Ring(5, "x,y,z")
    word = OperatorWord(
        (MultiplyBy(ring("3*x^10")), DividedPower(0, 4), DividedPower(1, 3), DividedPower(2, 3))
    )
    assert word(ring("x^3*(x^3 + y^3 + z^3)^4")) == ring("x^15")


def test_divided_power_reduces_the_binomial():
    ring = Ring(3, "x")
    # binom(5, 2) = 10 = 1 mod 3
    assert divided_power_apply(0, 2, ring("x^5")) == ring("x^3")
    assert divided_power_apply(0, 3, ring("x^2")) == ring("0")


@given(single_polys(max_variables=2), st.integers(1, 4), st.integers(1, 4))
def test_divided_powers_in_different_variables_commute(f: MultiPoly, s: int, t: int):
    assume(f.context.d == 2)
    assert divided_power_apply(0, s, divided_power_apply(1, t, f)) == divided_power_apply(
        1, t, divided_power_apply(0, s, f)
    )
