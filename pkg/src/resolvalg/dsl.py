"""Expression language for terms.

Grammar (informal):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ['-' | '+'] atom
    atom    := 'R' '(' rational ',' vector ')'
             | 'adj' '(' expr ')'
             | '(' expr ')'
             | 'i'
             | rational
    vector  := ventry (('+' | '-') ventry)*
    ventry  := [rational '*'] basis ['/' integer] | rational
    basis   := p<k> | q<k>

Scalars are complex rationals built from rationals and the unit ``i``;
division is restricted to nonzero scalar denominators.  The resolvent
parameter must be a nonzero real rational.  ``0`` is a valid vector entry
so the zero direction can be written explicitly; it collapses to the
scalar -(i/lam) on construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import CQ, ComplexRational, frac
from .algebra import Generator, Term
from .symplectic import SympVector

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z]+\d*)|(?P<op>[-+*/(),]))"
)

_BASIS_RE = re.compile(r"^([pq])([1-9]\d*)$")


class ParseError(ValueError):
    """Syntax or semantic error in the expression DSL, with position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class _Token:
    kind: str  # num | ident | op | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        if m.group("num"):
            tokens.append(_Token("num", m.group("num"), m.start("num")))
        elif m.group("ident"):
            tokens.append(_Token("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(_Token("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


def infer_dim(text: str) -> Optional[int]:
    """Smallest even dimension accommodating every basis symbol used."""
    best = 0
    for tok in _tokenize(text):
        if tok.kind == "ident":
            m = _BASIS_RE.match(tok.text)
            if m:
                best = max(best, int(m.group(2)))
    return 2 * best if best else None


class _Parser:
    def __init__(self, text: str, dim: int):
        self.text = text
        self.dim = dim
        self.tokens = _tokenize(text)
        self.idx = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.idx]

    def next(self) -> _Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, op: str) -> _Token:
        tok = self.next()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)
        return tok

    # -- term grammar ------------------------------------------------------

    def parse(self) -> Term:
        t = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return t

    def expr(self) -> Term:
        t = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.next().text
            rhs = self.term()
            t = t + rhs if op == "+" else t - rhs
        return t

    def term(self) -> Term:
        t = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.next()
            rhs = self.factor()
            if tok.text == "*":
                t = t * rhs
            else:
                s = rhs.as_scalar()
                if s is None or s.is_zero:
                    raise ParseError("division requires a nonzero scalar", tok.pos)
                t = t.scale(s.inverse())
        return t

    def factor(self) -> Term:
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.next()
            inner = self.factor()
            return inner if tok.text == "+" else -inner
        return self.atom()

    def atom(self) -> Term:
        tok = self.next()
        if tok.kind == "num":
            return Term.scalar(Fraction(int(tok.text)))
        if tok.kind == "ident":
            if tok.text == "i":
                return Term.scalar(CQ(0, 1))
            if tok.text == "R":
                return self.resolvent(tok.pos)
            if tok.text == "adj":
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return inner.adjoint()
            if _BASIS_RE.match(tok.text):
                raise ParseError(
                    f"basis symbol {tok.text!r} is only valid inside R(...)", tok.pos
                )
            raise ParseError(f"unknown symbol {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {tok.text or 'end of input'!r}", tok.pos)

    def resolvent(self, rpos: int) -> Term:
        self.expect_op("(")
        lam = self.rational()
        if lam == 0:
            raise ParseError("resolvent parameter must be nonzero", rpos)
        self.expect_op(",")
        vec = self.vector()
        self.expect_op(")")
        return Term.resolvent(lam, vec)

    # -- scalar and vector pieces -------------------------------------------

    def rational(self) -> Fraction:
        sign = Fraction(1)
        tok = self.peek()
        while tok.kind == "op" and tok.text in "+-":
            self.next()
            if tok.text == "-":
                sign = -sign
            tok = self.peek()
        tok = self.next()
        if tok.kind != "num":
            raise ParseError("expected a rational number", tok.pos)
        value = Fraction(int(tok.text))
        if self.peek().kind == "op" and self.peek().text == "/":
            self.next()
            den = self.next()
            if den.kind != "num" or int(den.text) == 0:
                raise ParseError("expected a nonzero denominator", den.pos)
            value /= int(den.text)
        return sign * value

    def vector(self) -> SympVector:
        coords = [Fraction(0)] * self.dim

        def terminates(tok: _Token) -> bool:
            return tok.kind == "end" or (tok.kind == "op" and tok.text in "),")

        sign = Fraction(1)
        first = True
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.next()
                if tok.text == "-":
                    sign = -sign
                continue
            if not first and terminates(tok):
                break
            self.ventry(coords, sign)
            sign = Fraction(1)
            first = False
            nxt = self.peek()
            if terminates(nxt):
                break
            if not (nxt.kind == "op" and nxt.text in "+-"):
                raise ParseError("expected '+', '-' or end of vector", nxt.pos)
        return SympVector(tuple(coords))

    def ventry(self, coords: list[Fraction], sign: Fraction) -> None:
        tok = self.peek()
        if tok.kind == "num":
            value = self.rational()
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "*":
                self.next()
                base = self.next()
                self.basis_entry(base, coords, sign * value)
                return
            if value != 0:
                raise ParseError(
                    "standalone numeric vector entry must be 0", tok.pos
                )
            return
        if tok.kind == "ident":
            base = self.next()
            scale = Fraction(1)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.next()
                den = self.next()
                if den.kind != "num" or int(den.text) == 0:
                    raise ParseError("expected a nonzero denominator", den.pos)
                scale = Fraction(1, int(den.text))
            self.basis_entry(base, coords, sign * scale)
            return
        raise ParseError("expected a vector entry", tok.pos)

    def basis_entry(self, tok: _Token, coords: list[Fraction], value: Fraction):
        if tok.kind != "ident":
            raise ParseError("expected a basis symbol like p1 or q2", tok.pos)
        m = _BASIS_RE.match(tok.text)
        if not m:
            raise ParseError(f"unknown basis symbol {tok.text!r}", tok.pos)
        pair = int(m.group(2))
        if 2 * pair > self.dim:
            raise ParseError(
                f"basis symbol {tok.text!r} exceeds dimension {self.dim}", tok.pos
            )
        index = 2 * (pair - 1) + (0 if m.group(1) == "p" else 1)
        coords[index] += value


def parse(text: str, dim: Optional[int] = None) -> Term:
    """Parse the expression DSL into a term.

    When dim is omitted it is inferred from the largest basis index in the
    text (an expression without basis symbols defaults to dimension 2).
    """
    if dim is None:
        dim = infer_dim(text) or 2
    if dim <= 0 or dim % 2 != 0:
        raise ParseError(f"dimension must be even and positive, got {dim}", 0)
    return _Parser(text, dim).parse()


def parse_vector(text: str, dim: Optional[int] = None) -> SympVector:
    """Parse a linear combination of basis symbols into a vector."""
    if dim is None:
        dim = infer_dim(text) or 2
    parser = _Parser(text, dim)
    vec = parser.vector()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return vec


def parse_scalar(text: str) -> ComplexRational:
    """Parse a scalar expression like "1/2", "-i" or "1/5-2/5*i"."""
    term = parse(text, dim=2)
    value = term.as_scalar()
    if value is None:
        raise ParseError("expected a scalar expression", 0)
    return value


# ---------------------------------------------------------------------------
# formatting and JSON


def _format_rational(x: Fraction) -> str:
    return str(x)


def _format_lambda(lam: ComplexRational) -> str:
    if lam.im == 0:
        return _format_rational(lam.re)
    return f"({lam})"


def format_generator(gen: Generator) -> str:
    from .symplectic import format_vector

    return f"R({_format_lambda(gen.lam)},{format_vector(gen.f)})"


def _format_coeff(c: ComplexRational) -> str:
    if c.im == 0:
        return str(c.re)
    if c.re == 0 and abs(c.im) == 1:
        return "i" if c.im == 1 else "-i"
    return f"({c})"


def format_term(t: Term) -> str:
    if t.is_zero:
        return "0"
    parts = []
    for word, coeff in t.monomials():
        body = "*".join(format_generator(g) for g in word)
        cs = _format_coeff(coeff)
        if not body:
            piece = cs if cs not in ("1", "-1") else ("1" if cs == "1" else "-1")
        elif cs == "1":
            piece = body
        elif cs == "-1":
            piece = f"-{body}"
        else:
            piece = f"{cs}*{body}"
        if parts and not piece.startswith("-"):
            parts.append(f" + {piece}")
        elif parts:
            parts.append(f" - {piece[1:]}")
        else:
            parts.append(piece)
    return "".join(parts)


def term_to_json(t: Term) -> list[dict]:
    """Stable JSON form: one entry per monomial, rationals as strings."""
    out = []
    for word, coeff in t.monomials():
        out.append(
            {
                "word": [
                    [str(g.lam.re), str(g.lam.im)] + [str(c) for c in g.vec]
                    for g in word
                ],
                "coeff": coeff.to_json(),
            }
        )
    return out


def term_from_json(data: list[dict]) -> Term:
    total = Term.zero()
    for entry in data:
        coeff = ComplexRational.from_json(entry["coeff"])
        gens = []
        for row in entry["word"]:
            lam = ComplexRational(frac(row[0]), frac(row[1]))
            vec = tuple(frac(c) for c in row[2:])
            gens.append(Generator(lam, vec))
        total = total + Term.from_word(gens, coeff)
    return total
