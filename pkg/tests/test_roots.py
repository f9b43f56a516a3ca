from __future__ import annotations

from hypothesis import given, settings, strategies as st
from pytest import mark, raises

from frobpair._internal.algebra.field import PrimeField
from frobpair._internal.algebra.groebner import ideal_contains, ideal_equal
from frobpair._internal.algebra.poly import MultiPoly
from frobpair._internal.algebra.roots import (
    IdealGens,
    LinearChange,
    bracket_power,
    ideal_product,
    ie_roots,
    linear_change,
    linear_change_ideal,
    pe_decompose,
)
from frobpair._internal.errors import ContextMismatchError, SingularMatrixError, UserError
from tests.conftest import Ring
from tests.strategies import linear_changes, poly_pairs, single_polys


def test_pe_decompose_groups_by_residue():
    ring = Ring(2, "x,y")
    decomposition = pe_decompose(ring("x^3*y + x*y + y^2"), 1)
    assert dict(decomposition.entries) == {(0, 0): ring("y"), (1, 1): ring("x + 1")}


def test_pe_decompose_of_zero():
    assert not pe_decompose(Ring(3, "x")("0"), 2).entries


def test_pe_decompose_rejects_negative_e():
    with raises(UserError):
        pe_decompose(Ring(3, "x")("x"), -1)


@settings(max_examples=200, deadline=None)
@given(single_polys(max_exponent=30), st.integers(0, 3))
def test_pe_decompose_reconstructs(f: MultiPoly, e: int):
    assert pe_decompose(f, e).reconstruct() == f


def test_roots_of_a_p_power_are_its_root():
    ring = Ring(3, "x,y")
    assert ideal_equal(ie_roots(ring("x^3 + y^6"), 1), IdealGens((ring("x + y^2"),)))


def test_roots_of_a_unit_multiple_are_the_unit_ideal():
    ring = Ring(5, "x,y")
    assert ideal_equal(ie_roots(ring("x^4*y^4 + 1"), 1), IdealGens((ring("1"),)))


def test_roots_dedupe_up_to_scalar():
    ring = Ring(5, "x,y")
    assert len(ie_roots(ring("x + 2*y"), 1)) == 1


def test_fermat_roots_in_characteristic_two():
    ring = Ring(2, "x,y,z")
    roots = ie_roots(ring("x*y*z*(x^3 + y^3 + z^3)"), 1)
    assert ideal_equal(roots, IdealGens((ring("x^2"), ring("y^2"), ring("z^2"))))


def test_fermat_roots_in_characteristic_three():
    ring = Ring(3, "x,y,z")
    roots = ie_roots(ring("x*y*z*(x^3 + y^3 + z^3)^2"), 1)
    assert ideal_equal(roots, IdealGens((ring("(x + y + z)^2"),)))


def test_bracket_power_contains_the_polynomial():
    ring = Ring(3, "x,y")
    f = ring("x^4*y + 2*x*y^7 + y^3")
    for e in (1, 2):
        assert ideal_contains(IdealGens((f,)), bracket_power(ie_roots(f, e), e))


def test_ideal_gens_rejects_zero():
    with raises(UserError):
        IdealGens((Ring(3, "x")("0"),))


def test_ideal_gens_rejects_mixed_rings():
    with raises(ContextMismatchError):
        IdealGens((Ring(3, "x")("x"), Ring(3, "y")("y")))


def test_ideal_product():
    ring = Ring(5, "x,y")
    product = ideal_product(IdealGens((ring("x"), ring("y"))), IdealGens((ring("x"),)))
    assert ideal_equal(product, IdealGens((ring("x^2"), ring("x*y"))))


def test_linear_change_and_inverse():
    ring = Ring(5, "x,y")
    change = LinearChange.from_rows(ring.field, [[1, 1], [0, 1]])
    f = ring("x^2 + y")
    assert linear_change(f, change) == ring("x^2 + 2*x*y + y^2 + y")
    assert linear_change(linear_change(f, change), change.inverse()) == f


def test_linear_change_must_be_invertible():
    with raises(SingularMatrixError):
        LinearChange.from_rows(PrimeField(3), [[1, 2], [2, 1]])


def test_linear_change_size_must_match():
    with raises(ContextMismatchError):
        linear_change(Ring(5, "x,y")("x"), LinearChange.identity(PrimeField(5), 3))


def test_roots_commute_with_linear_changes():
    ring = Ring(3, "x,y")
    change = LinearChange.from_rows(ring.field, [[1, 2], [1, 1]])
    f = ring("x^4*y^2 + x*y^5 + 2*y^3")
    assert ideal_equal(
        ie_roots(linear_change(f, change), 1), linear_change_ideal(ie_roots(f, 1), change)
    )


def test_roots_on_the_projective_line():
    ring = Ring(5, "x,y")
    roots = ie_roots(ring("y^3 * x^12"), 1)
    assert ideal_equal(roots, IdealGens((ring("x^2"),)))


def test_bracket_power_at_zero_is_the_ideal():
    ring = Ring(3, "x,y")
    ideal = IdealGens((ring("x^2 + 2*x*y"), ring("y")))
    assert bracket_power(ideal, 0) == ideal


def test_bracket_power_raises_each_generator():
    ring = Ring(2, "x,y")
    assert bracket_power(IdealGens((ring("x"), ring("y"))), 1) == IdealGens(
        (ring("x^2"), ring("y^2"))
    )


@settings(max_examples=50, deadline=None)
@given(single_polys(max_variables=2, max_exponent=3).filter(lambda g: not g.is_zero))
def test_roots_of_a_p_th_power_generate_the_polynomial(g: MultiPoly):
    assert ideal_equal(ie_roots(g**g.p, 1), IdealGens((g,)))


@settings(max_examples=20, deadline=None)
@given(poly_pairs(max_variables=2, max_exponent=3), st.integers(1, 2))
def test_roots_are_submultiplicative(pair: tuple[MultiPoly, MultiPoly], e: int):
    g, h = pair
    assert ideal_contains(ie_roots(g * h, e), ideal_product(ie_roots(g, e), ie_roots(h, e)))


@mark.parametrize(("p", "num"), [(3, "x*y^2"), (5, "y^3"), (7, "x^2*y")])
def test_root_degrees_are_bounded_by_the_denominator(p: int, num: str):
    ring = Ring(p, "x,y")
    g, f = ring(num), ring("x^3 + y^3")
    e = 1
    assert ie_roots(g * f ** (p**e - 1), e).max_degree() <= f.degree()


@settings(max_examples=30, deadline=None)
@given(single_polys(max_variables=3, max_exponent=5, characteristics=(2, 3, 5)), st.data())
def test_roots_commute_with_random_linear_changes(f: MultiPoly, data: st.DataObject):
    change = data.draw(linear_changes(f.field, f.context.d))
    e = data.draw(st.integers(1, 2))
    assert ideal_equal(
        ie_roots(linear_change(f, change), e), linear_change_ideal(ie_roots(f, e), change)
    )
