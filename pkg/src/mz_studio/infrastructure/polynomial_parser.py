"""多項式文字列の構文解析と正準表示.

文法:
    Expr    := [('+'|'-')] Term (('+'|'-') Term)*
    Term    := Factor ('*' Factor)*
    Factor  := Base ('^' natural)?
    Base    := rational | variable | '(' Expr ')'
    rational := integer ('/' positive-integer)?

暗黙の乗算（"x1 x2" や "2x1"）は受け付けない。空白は無視する。
先頭の符号は format_polynomial の出力を読み戻すために受け付ける。
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from mz_studio.domain.errors import ParseError
from mz_studio.domain.polynomial import Polynomial

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()]))")

_END = "end of input"


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | 演算子そのもの | "end"
    text: str
    position: int


def _tokenize(source: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while True:
        rest = source[position:]
        if not rest.strip():
            tokens.append(_Token("end", "", len(source)))
            return tokens
        match = _TOKEN.match(source, position)
        if match is None:
            offset = position + len(rest) - len(rest.lstrip())
            raise ParseError(
                f"unexpected character {source[offset]!r}",
                offset,
                {"number", "variable", "'('", "'+'", "'-'", "'*'", "'^'", "'/'", "')'"},
            )
        kind = match.lastgroup or "op"
        text = match.group(kind)
        start = match.start(kind)
        tokens.append(_Token(text if kind == "op" else kind, text, start))
        position = match.end()


class _Parser:
    """再帰下降パーサ."""

    def __init__(self, source: str, variables: Sequence[str]) -> None:
        self._tokens = _tokenize(source)
        self._index = 0
        self._variables = {name: k for k, name in enumerate(variables)}
        self._nvars = len(variables)

    @property
    def _current(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._current
        self._index += 1
        return token

    def _fail(self, message: str, expected: set[str]) -> ParseError:
        token = self._current
        shown = "end of input" if token.kind == "end" else repr(token.text)
        return ParseError(f"{message}: found {shown}", token.position, expected)

    def parse(self) -> Polynomial:
        result = self._expr()
        if self._current.kind != "end":
            raise self._fail("unexpected token", {"'+'", "'-'", "'*'", "'^'", _END})
        return result

    def _expr(self) -> Polynomial:
        negate = False
        if self._current.kind in ("+", "-"):
            negate = self._advance().kind == "-"
        result = self._term()
        if negate:
            result = -result
        while self._current.kind in ("+", "-"):
            op = self._advance().kind
            term = self._term()
            result = result + term if op == "+" else result - term
        return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while self._current.kind == "*":
            self._advance()
            result = result * self._factor()
        return result

    def _factor(self) -> Polynomial:
        base = self._base()
        if self._current.kind == "^":
            self._advance()
            if self._current.kind != "number":
                raise self._fail("exponent must be a natural number", {"number"})
            base = base ** int(self._advance().text)
        return base

    def _base(self) -> Polynomial:
        token = self._current
        if token.kind == "number":
            self._advance()
            value = Fraction(int(token.text))
            if self._current.kind == "/":
                self._advance()
                if self._current.kind != "number" or int(self._current.text) == 0:
                    raise self._fail("denominator must be a positive integer", {"number"})
                value /= int(self._advance().text)
            return Polynomial.constant(value, self._nvars)
        if token.kind == "name":
            if token.text not in self._variables:
                raise self._fail("unknown variable", {repr(v) for v in self._variables})
            self._advance()
            return Polynomial.variable(self._variables[token.text], self._nvars)
        if token.kind == "(":
            self._advance()
            inner = self._expr()
            if self._current.kind != ")":
                raise self._fail("unbalanced parenthesis", {"')'", "'+'", "'-'", "'*'", "'^'"})
            self._advance()
            return inner
        raise self._fail("expected a number, a variable or '('", {"number", "variable", "'('"})


def parse_polynomial(source: str, variables: Sequence[str]) -> Polynomial:
    """多項式文字列を解析する.

    Args:
        source: 多項式の文字列（例: "x1^2 - 3*x1 + 2"）
        variables: 変数名の並び（位置が変数番号になる）

    Returns:
        正準形の Polynomial

    Raises:
        ParseError: 文法に合わない場合（位置と期待トークン集合つき）
    """
    return _Parser(source, variables).parse()


def _format_monomial(exponents: Sequence[int], variables: Sequence[str]) -> str:
    factors = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(variables, exponents, strict=True)
        if e
    ]
    return "*".join(factors)


def format_polynomial(f: Polynomial, variables: Sequence[str]) -> str:
    """正準表示. 出力は parse_polynomial で同じ多項式に読み戻せる.

    項は次数→辞書式の降順に並ぶ。
    """
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for k, (monomial, coefficient) in enumerate(f):
        magnitude = abs(coefficient)
        body = _format_monomial(monomial, variables)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        if k == 0:
            parts.append(f"-{text}" if coefficient < 0 else text)
        else:
            parts.append(f"{'-' if coefficient < 0 else '+'} {text}")
    return " ".join(parts)


def default_variables(nvars: int) -> list[str]:
    """既定の変数名 x0, x1, …."""
    return [f"x{k}" for k in range(nvars)]
