"""the prime field F_p and the modular combinatorics the rest of the package needs"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Final, final

from frobpair._internal.errors import NotPrimeError, UserError

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

_SMALL_PRIMES: Final = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
"""trial divisors, and also a witness set that makes miller-rabin deterministic below 3.3e24"""

MAX_PRIME: Final = 2**64
"""p has to fit in a machine word"""


def is_prime(n: int) -> bool:
    """deterministic miller-rabin for everything below 2^64"""
    if n < 2:
        return False
    for small in _SMALL_PRIMES:
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for witness in _SMALL_PRIMES:
        x = pow(witness, d, n)
        if x in {1, n - 1}:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def base_p_digits(n: int, p: int) -> list[int]:
    """little-endian base p digits of `n` (empty for 0)"""
    digits: list[int] = []
    while n:
        n, digit = divmod(n, p)
        digits.append(digit)
    return digits


@lru_cache(maxsize=4096)
def _small_binomial(a: int, b: int, p: int) -> int:
    # a < p here, so nothing in the denominator vanishes
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    numerator = denominator = 1
    for i in range(b):
        numerator = numerator * (a - i) % p
        denominator = denominator * (i + 1) % p
    return numerator * pow(denominator, -1, p) % p


def multinomial_mod_p(n: int, parts: Sequence[int], p: int) -> int:
    """`n! / prod(part!)` reduced mod `p`, one base `p` digit at a time (lucas). a carry in any
    digit position means `p` divides the coefficient

    :raises UserError: if the parts are negative or don't add up to `n`
    """
    if any(part < 0 for part in parts) or sum(parts) != n:
        raise UserError(f"parts {list(parts)} do not sum to {n}")
    result = 1
    remaining = list(parts)
    while n:
        n, n_digit = divmod(n, p)
        digit_sum = 0
        for index, part in enumerate(remaining):
            remaining[index], digit = divmod(part, p)
            digit_sum += digit
            result = result * _small_binomial(digit_sum, digit, p) % p
        if digit_sum != n_digit or not result:
            return 0
    return result


def binomial_mod_p(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    return multinomial_mod_p(n, (k, n - k), p)


@final
@dataclass(frozen=True)
class PrimeField:
    """the field with `p` elements. elements are plain ints in `[0, p)`"""

    p: int

    def __post_init__(self) -> None:
        if self.p >= MAX_PRIME or not is_prime(self.p):
            raise NotPrimeError(self.p)

    def __call__(self, value: int) -> int:
        return value % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if not a:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)

    def pow(self, a: int, n: int) -> int:
        return pow(a, n, self.p)

    def multinomial(self, n: int, parts: Sequence[int]) -> int:
        return multinomial_mod_p(n, parts, self.p)

    def binomial(self, n: int, k: int) -> int:
        return binomial_mod_p(n, k, self.p)

    def elements(self) -> Iterable[int]:
        return range(self.p)
