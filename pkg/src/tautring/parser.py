"""Parser for the ASCII expression grammar shared by all rings.

    expr    := sum
    sum     := product (("+" | "-") product)*
    product := power ("*" power)*
    power   := atom ("^" int)?
    atom    := coeff | gen | "(" expr ")" | "-" atom
    coeff   := int ("/" int)?
    gen     := "a_" int | "b_{" int "," int "}" | "d_{" int "," int "}"
             | "E_{" intlist "}" | "E0" | "D_{" intlist "}" | "psi_" int

Whitespace is insignificant.  psi_i denotes the sum of boundary divisors
D_I over i in I, |I| >= 2.  All generator indices are validated against
the ambient n.
"""
from __future__ import annotations

import re
from itertools import combinations

from .elements import Element
from .exact import QQ
from .gens import (
    GeneratorRangeError,
    a_gen,
    b_gen,
    bd_gen,
    d_gen,
    e_gen,
)


class ParseError(ValueError):
    """Syntax error, carrying the offending position in the input."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<gen>[abd]_\{\s*\d+\s*,\s*\d+\s*\}|a_\d+|E0|E_0|[ED]_\{[\s\d,]*\}|psi_\d+)"
    r"|(?P<int>\d+)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", pos)
        if m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    return tokens


def _gen_from_token(text: str, n: int, pos: int) -> Element:
    if text in ("E0", "E_0"):
        g = e_gen(())
    elif text.startswith("a_"):
        g = a_gen(int(text[2:]))
    elif text.startswith(("b_", "d_")):
        inner = text[3:-1]
        j, k = (int(p) for p in inner.split(","))
        if j >= k:
            raise ParseError(f"indices must satisfy j < k in {text!r}", pos)
        g = b_gen(j, k) if text[0] == "b" else d_gen(j, k)
    elif text.startswith(("E_", "D_")):
        inner = text[3:-1].strip()
        idx = [int(p) for p in inner.split(",")] if inner else []
        if len(set(idx)) != len(idx):
            raise ParseError(f"repeated index in {text!r}", pos)
        g = e_gen(idx) if text[0] == "E" else bd_gen(idx)
    elif text.startswith("psi_"):
        i = int(text[4:])
        if not 1 <= i <= n:
            raise GeneratorRangeError(
                f"index out of range in psi_{i}: need 1..{n} for ambient n={n}"
            )
        out = Element.zero(n)
        others = [j for j in range(1, n + 1) if j != i]
        for r in range(1, n):
            for rest in combinations(others, r):
                out = out + Element.from_gen(n, bd_gen((i,) + rest))
        return out
    else:  # pragma: no cover - the regex admits no other shape
        raise ParseError(f"unrecognized generator {text!r}", pos)
    return Element.from_gen(n, g)


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], n: int, length: int):
        self.tokens = tokens
        self.n = n
        self.i = 0
        self.length = length

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.length)
        self.i += 1
        return tok

    def parse(self) -> Element:
        e = self.sum()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return e

    def sum(self) -> Element:
        e = self.product()
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self._next()
                rhs = self.product()
                e = e + rhs if tok[1] == "+" else e - rhs
            else:
                return e

    def product(self) -> Element:
        e = self.power()
        while True:
            tok = self._peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self._next()
                e = e * self.power()
            else:
                return e

    def power(self) -> Element:
        e = self.atom()
        tok = self._peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self._next()
            etok = self._next()
            if etok[0] != "int":
                raise ParseError("exponent must be a non-negative integer", etok[2])
            e = e ** int(etok[1])
        return e

    def atom(self) -> Element:
        tok = self._next()
        kind, text, pos = tok
        if kind == "op" and text == "-":
            return -self.atom()
        if kind == "op" and text == "(":
            e = self.sum()
            closing = self._next()
            if closing[0] != "op" or closing[1] != ")":
                raise ParseError("expected ')'", closing[2])
            return e
        if kind == "int":
            num = int(text)
            nxt = self._peek()
            if nxt and nxt[0] == "op" and nxt[1] == "/":
                self._next()
                dtok = self._next()
                if dtok[0] != "int":
                    raise ParseError("expected integer denominator", dtok[2])
                den = int(dtok[1])
                if den == 0:
                    raise ParseError("zero denominator", dtok[2])
                return Element.scalar(self.n, QQ(num, den))
            return Element.scalar(self.n, QQ(num))
        if kind == "gen":
            return _gen_from_token(text, self.n, pos)
        raise ParseError(f"unexpected token {text!r}", pos)


def parse_expression(text: str, ambient_n: int) -> Element:
    """Parse ``text`` into an Element over ambient ``ambient_n``.

    Raises ParseError on malformed input and GeneratorRangeError when a
    generator index violates the ambient bounds.
    """
    if ambient_n < 2:
        raise ValueError("ambient n must be at least 2")
    return _Parser(_tokenize(text), ambient_n, len(text)).parse()
