"""hard limits on how big intermediate results may get. the environment is read on every call so
tests and long running sessions can change it without reloading anything"""

from __future__ import annotations

import os
from typing import Final

from frobpair._internal.errors import TermLimitError, UserError

MAX_TERMS_VARIABLE: Final = "FROBPAIR_MAX_TERMS"
DEFAULT_MAX_TERMS: Final = 10_000_000

MAX_EXPONENT: Final = 2**32 - 1
"""monomial exponents are stored as unsigned 32 bit values"""


def max_terms() -> int:
    raw = os.environ.get(MAX_TERMS_VARIABLE)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError:
        raise UserError(f"{MAX_TERMS_VARIABLE} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UserError(f"{MAX_TERMS_VARIABLE} must be positive, got {value}")
    return value


def check_term_count(terms: int) -> None:
    limit = max_terms()
    if terms > limit:
        raise TermLimitError(terms, limit)
