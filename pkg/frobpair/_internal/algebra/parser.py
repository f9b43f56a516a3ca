"""recursive descent parser for polynomial expressions:

```
expr   := ['-'] term (('+' | '-') term)*
term   := factor ('*' factor)*
factor := base ('^' uint)?
base   := uint | ident | '(' expr ')'
```

there is no implicit multiplication, `xy` is a single identifier"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final, final

from frobpair._internal.algebra.poly import MultiPoly, poly_pow
from frobpair._internal.errors import ParseError, UserError

if TYPE_CHECKING:
    from frobpair._internal.algebra.field import PrimeField
    from frobpair._internal.algebra.poly import VarContext

MAX_NESTING: Final = 100
"""deepest allowed parenthesis nesting, well below the interpreter recursion limit"""

_TOKEN: Final = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*^()]))"
)


@final
@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        if text[position:].isspace():
            break
        match = _TOKEN.match(text, position)
        if match is None or match.lastgroup is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", text, offset)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


@final
class _Parser:
    def __init__(self, text: str, context: VarContext, field: PrimeField) -> None:
        self.text = text
        self.context = context
        self.field = field
        self.tokens = _tokenize(text)
        self.index = 0
        self.depth = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def _fail(self, message: str, token: _Token | None = None) -> ParseError:
        token = token or self.current
        return ParseError(message, self.text, token.position)

    def _describe(self, token: _Token) -> str:
        return "end of input" if token.kind == "end" else repr(token.text)

    def _expect(self, text: str) -> None:
        if self.current.text != text or self.current.kind != "op":
            raise self._fail(f"expected {text!r} but found {self._describe(self.current)}")
        self._advance()

    def parse(self) -> MultiPoly:
        result = self._expr()
        if self.current.kind != "end":
            raise self._fail(f"unexpected {self._describe(self.current)}")
        return result

    def _expr(self) -> MultiPoly:
        negate = self.current.kind == "op" and self.current.text == "-"
        if negate:
            self._advance()
        result = self._term()
        if negate:
            result = -result
        while self.current.kind == "op" and self.current.text in {"+", "-"}:
            operator = self._advance().text
            term = self._term()
            result = result + term if operator == "+" else result - term
        return result

    def _term(self) -> MultiPoly:
        result = self._factor()
        while self.current.kind == "op" and self.current.text == "*":
            self._advance()
            result *= self._factor()
        return result

    def _factor(self) -> MultiPoly:
        base = self._base()
        if self.current.kind == "op" and self.current.text == "^":
            self._advance()
            token = self._advance()
            if token.kind != "number":
                raise self._fail(f"expected an exponent but found {self._describe(token)}", token)
            return poly_pow(base, int(token.text))
        return base

    def _base(self) -> MultiPoly:
        token = self._advance()
        if token.kind == "number":
            return MultiPoly.constant(self.field, self.context, int(token.text))
        if token.kind == "ident":
            try:
                index = self.context.index(token.text)
            except UserError:
                raise self._fail(f"unknown variable {token.text!r}", token) from None
            return MultiPoly.variable(self.field, self.context, index)
        if token.kind == "op" and token.text == "(":
            if self.depth == MAX_NESTING:
                raise self._fail(f"parentheses nested deeper than {MAX_NESTING}", token)
            self.depth += 1
            inner = self._expr()
            self._expect(")")
            self.depth -= 1
            return inner
        raise self._fail(
            f"expected a number, variable or '(' but found {self._describe(token)}", token
        )


def parse_poly(text: str, context: VarContext, field: PrimeField) -> MultiPoly:
    """parse `text` into a polynomial over `field` in the variables of `context`. integer literals
    are reduced mod p

    :raises ParseError: on a syntax error or an unknown variable, with the offending position
    """
    return _Parser(text, context, field).parse()
