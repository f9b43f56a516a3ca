from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from frobpair._internal.algebra.poly import Monomial


class MonomialOrder(Enum):
    """term orders on exponent vectors. variable 0 is the biggest variable in both"""

    GREVLEX = "grevlex"
    LEX = "lex"

    def key(self, monomial: Monomial) -> tuple[object, ...]:
        """sort key that grows with the monomial"""
        if self is MonomialOrder.LEX:
            return monomial
        return (sum(monomial), tuple(-exponent for exponent in reversed(monomial)))

    def heap_key(self, monomial: Monomial) -> tuple[object, ...]:
        """sort key that shrinks as the monomial grows, for use with `heapq`"""
        if self is MonomialOrder.LEX:
            return tuple(-exponent for exponent in monomial)
        return (-sum(monomial), tuple(reversed(monomial)))
