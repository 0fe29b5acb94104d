"""Text form of elements.

    element := ["+"|"-"] term (("+"|"-") term)*
    term    := [coeff "*"] atom
    coeff   := int | int "/" posint | "(" ["+"|"-"] int ["/" posint] ")"
    atom    := "x[(" ints ");(" nats ")]" ["d" index] | "D[" index "," index "](" element ")"

Whitespace is ignored.  ``d p`` selects a vector-field component and
``D[p,q](u)`` builds a special-type generator; indices are 1-based.  The
printed form of every element parses back to the same element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from gencartan.algebra import AlgebraElement, Monomial
from gencartan.config import AlgebraConfig
from gencartan.errors import ConfigError
from gencartan.families import SPECIAL, Element, family, uses_vector_fields, zero_element
from gencartan.special import special_generator
from gencartan.witt import WittVector

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


class ElementSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", a punctuation character, or "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    for mt in _TOKEN.finditer(text):
        if mt.group(1) is not None:
            out.append(_Tok("int", mt.group(1), mt.start(1)))
        elif mt.group(2) is not None:
            ch = mt.group(2)
            if ch not in "xdD[]();,+-*/":
                raise ElementSyntaxError(f"unexpected character {ch!r}", mt.start(2))
            out.append(_Tok(ch, ch, mt.start(2)))
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, cfg: AlgebraConfig):
        self.toks = _tokenize(text)
        self.i = 0
        self.cfg = cfg
        self.fam = family(cfg)

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self, kind: str) -> _Tok:
        t = self.tok
        if t.kind != kind:
            want = "an integer" if kind == "int" else "end of input" if kind == "end" else repr(kind)
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ElementSyntaxError(f"expected {want}, got {got}", t.pos)
        self.i += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    def element(self, vector: bool) -> Element:
        total = zero_element(self.cfg) if vector else AlgebraElement()
        sign = -1 if self.tok.kind == "-" else 1
        if self.tok.kind in ("+", "-"):
            self.i += 1
        total = total + self.term(vector).scale(sign)
        while self.tok.kind in ("+", "-"):
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
            total = total + self.term(vector).scale(sign)
        return total

    def rational(self) -> Fraction:
        num = int(self.take("int").text)
        if self.accept("/"):
            t = self.take("int")
            den = int(t.text)
            if den == 0:
                raise ElementSyntaxError("zero denominator", t.pos)
            return Fraction(num, den)
        return Fraction(num)

    def term(self, vector: bool) -> Element:
        coeff = Fraction(1)
        if self.tok.kind == "int":
            coeff = self.rational()
            self.take("*")
        elif self.tok.kind == "(":
            self.i += 1
            sign = -1 if self.tok.kind == "-" else 1
            if self.tok.kind in ("+", "-"):
                self.i += 1
            coeff = sign * self.rational()
            self.take(")")
            self.take("*")
        return self.atom(vector).scale(coeff)

    def ints(self, close: str, signed: bool) -> tuple[int, ...]:
        vals: list[int] = []
        if self.accept(close):
            return ()
        while True:
            t = self.tok
            sign = 1
            if signed and self.accept("-"):
                sign = -1
            elif not signed and t.kind == "-":
                raise ElementSyntaxError("exponents must be nonnegative", t.pos)
            vals.append(sign * int(self.take("int").text))
            if self.accept(close):
                return tuple(vals)
            self.take(",")

    def index(self) -> tuple[int, int]:
        t = self.take("int")
        p = int(t.text)
        if not 1 <= p <= self.cfg.n:
            raise ConfigError(f"index {p} out of range 1..{self.cfg.n} at position {t.pos}")
        return p - 1, t.pos

    def atom(self, vector: bool) -> Element:
        t = self.tok
        if t.kind == "x":
            self.i += 1
            self.take("[")
            self.take("(")
            alpha = self.ints(")", signed=True)
            self.take(";")
            self.take("(")
            exps = self.ints(")", signed=False)
            self.take("]")
            try:
                self.cfg.check_monomial(alpha, exps)
            except ConfigError as exc:
                raise ConfigError(f"{exc} at position {t.pos}") from None
            u = AlgebraElement({Monomial(alpha, exps): 1})
            if self.tok.kind == "d":
                if not vector:
                    raise ConfigError(f"'d' is only meaningful for vector-field algebras (position {self.tok.pos})")
                self.i += 1
                p, _ = self.index()
                return WittVector.component(self.cfg.n, p, u)
            if vector:
                raise ElementSyntaxError("vector-field terms need a component marker 'd <index>'", self.tok.pos)
            return u
        if t.kind == "D":
            if self.fam != SPECIAL or not vector:
                raise ConfigError(f"'D[p,q](...)' is only available for special-type algebras (position {t.pos})")
            self.i += 1
            self.take("[")
            p, _ = self.index()
            self.take(",")
            q, qpos = self.index()
            self.take("]")
            if p == q:
                raise ElementSyntaxError("D[p,q] needs distinct indices", qpos)
            self.take("(")
            u = self.element(vector=False)
            self.take(")")
            return special_generator(p, q, u, self.cfg)
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise ElementSyntaxError(f"expected 'x[' or 'D[', got {got}", t.pos)


def parse_element(text: str, cfg: AlgebraConfig) -> Element:
    if text.strip() == "0":
        return zero_element(cfg)
    parser = _Parser(text, cfg)
    out = parser.element(vector=uses_vector_fields(cfg))
    parser.take("end")
    return out


def format_element(x: Element) -> str:
    return str(x)
