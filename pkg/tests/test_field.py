from __future__ import annotations

from math import comb, factorial

from hypothesis import given, strategies as st
from pytest import mark, raises

from frobpair._internal.algebra.field import (
    PrimeField,
    base_p_digits,
    binomial_mod_p,
    is_prime,
    multinomial_mod_p,
)
from frobpair._internal.errors import NotPrimeError, UserError
from tests.strategies import primes


@mark.parametrize("n", [2, 3, 5, 13, 101, 7919, 2**31 - 1, 2**61 - 1, 18446744073709551557])
def test_is_prime_primes(n: int):
    assert is_prime(n)


@mark.parametrize("n", [-7, 0, 1, 4, 9, 561, 1105, 3215031751, 2**61 + 1, 2**64 - 1])
def test_is_prime_composites(n: int):
    assert not is_prime(n)


def test_prime_field_rejects_composite():
    with raises(NotPrimeError) as exc_info:
        PrimeField(6)
    assert exc_info.value.p == 6


def test_prime_field_rejects_huge_prime():
    with raises(NotPrimeError):
        PrimeField(2**89 - 1)


def test_prime_field_arithmetic():
    field = PrimeField(7)
    assert field(-1) == 6
    assert field.neg(3) == 4
    assert field.inv(3) == 5
    assert field.pow(3, 6) == 1
    assert list(field.elements()) == list(range(7))


def test_inverse_of_zero():
    with raises(ZeroDivisionError):
        PrimeField(5).inv(10)


def test_base_p_digits():
    assert base_p_digits(0, 3) == []
    assert base_p_digits(26, 3) == [2, 2, 2]
    assert base_p_digits(8, 2) == [0, 0, 0, 1]


def test_multinomial_documented_values():
    assert multinomial_mod_p(6, (5, 1), 13) == 6
    assert multinomial_mod_p(4, (2, 1, 1), 5) == 2


def test_multinomial_vanishes_on_carry():
    # 3 + 3 carries in base 5
    assert multinomial_mod_p(6, (3, 3), 5) == 0


def test_multinomial_parts_must_sum_to_n():
    with raises(UserError):
        multinomial_mod_p(5, (2, 2), 7)


def test_multinomial_rejects_negative_parts():
    with raises(UserError):
        multinomial_mod_p(3, (4, -1), 7)


@given(st.sampled_from((2, 3, 5, 7, 11, 13)), st.lists(st.integers(0, 20), min_size=1, max_size=3))
def test_multinomial_matches_factorials(p: int, parts: list[int]):
    n = sum(parts)
    expected = factorial(n)
    for part in parts:
        expected //= factorial(part)
    assert multinomial_mod_p(n, parts, p) == expected % p


@given(primes(), st.integers(0, 200), st.integers(-3, 203))
def test_binomial_matches_math_comb(p: int, n: int, k: int):
    expected = comb(n, k) % p if 0 <= k <= n else 0
    assert binomial_mod_p(n, k, p) == expected
