"""Problem-file parser and canonical printer.

Example::

    field GF 7;            # or: field Q;   (default Q)
    vars x:1, y:2;         # name[:weight], weight defaults to 1
    order deglex x > y;    # default: declaration order
    gens: x^2 - y, x*y*x;  # comma separated; several gens statements accumulate

``*`` concatenates (order matters), ``^k`` repeats the preceding variable,
coefficients are integers or ``a/b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ordering import OrderSpec, order_from_names
from .poly import FreeAlgebra, Poly, format_poly
from .scalar import Field, FieldError, QQ
from .words import Signature


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        where = f"{line}:{col}: " if line else ""
        tail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{where}{message}{tail}")


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+|#[^\n]*)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[;,:*^/+\->()])"
)


@dataclass
class Token:
    kind: str  # num, ident, op, eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class ProblemFile:
    field: Field
    signature: Signature
    order: OrderSpec
    generators: list[Poly]

    @property
    def ring(self) -> FreeAlgebra:
        return FreeAlgebra(self.signature, self.order, self.field)


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers ---------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message: str, expected=(), tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col, expected)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "ident") and self.tok.text == text

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"unexpected {found!r}", [repr(text)])
        return self.take()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"unexpected {found!r}", [what])
        return self.take()

    # -- polynomials -------------------------------------------------------
    def poly(self, ring: FreeAlgebra) -> Poly:
        terms = []
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.take().text == "-" else 1
        while True:
            coeff, word = self.term(ring)
            terms.append((word, self._residue(ring, coeff * sign)))
            if self.at("+") or self.at("-"):
                sign = -1 if self.take().text == "-" else 1
                continue
            return Poly(ring, terms)

    def _residue(self, ring: FreeAlgebra, c: Fraction):
        try:
            return ring.field(c)
        except ZeroDivisionError as e:
            raise self.error(str(e)) from None

    def term(self, ring: FreeAlgebra):
        coeff = Fraction(1)
        word: list[int] = []
        while True:
            tok = self.tok
            if tok.kind == "num":
                self.take()
                num = int(tok.text)
                if self.at("/"):
                    self.take()
                    den_tok = self.expect_kind("num", "denominator")
                    den = int(den_tok.text)
                    if den == 0:
                        raise self.error("zero denominator", tok=den_tok)
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
            elif tok.kind == "ident":
                self.take()
                try:
                    letter = ring.sig.index(tok.text)
                except KeyError:
                    raise self.error(f"unknown identifier {tok.text!r}", ring.sig.names, tok) from None
                k = 1
                if self.at("^"):
                    self.take()
                    k = int(self.expect_kind("num", "exponent").text)
                    if k < 1:
                        raise self.error("exponent must be positive")
                word.extend([letter] * k)
            else:
                found = tok.text or "end of input"
                raise self.error(f"unexpected {found!r}", ["number", "variable"])
            if self.at("*"):
                self.take()
                continue
            return coeff, tuple(word)

    # -- statements --------------------------------------------------------
    def problem(self) -> ProblemFile:
        field: Field = QQ
        sig: Signature | None = None
        order_toks: list[Token] | None = None
        order_kw = None
        gen_texts: list[tuple[int, int]] = []  # token ranges, parsed once vars/order are known
        seen_field = False
        while self.tok.kind != "eof":
            kw = self.expect_kind("ident", "statement keyword")
            if kw.text == "field":
                if seen_field:
                    raise self.error("field declared twice", tok=kw)
                seen_field = True
                field = self.field_spec()
            elif kw.text == "vars":
                if sig is not None:
                    raise self.error("vars declared twice", tok=kw)
                sig = self.vars()
            elif kw.text == "order":
                order_kw = kw
                order_toks = self.order()
                continue
            elif kw.text == "gens":
                if self.at(":"):
                    self.take()
                start = self.i
                depth_end = self._skip_to_semicolon()
                gen_texts.append((start, depth_end))
            else:
                raise self.error(f"unknown statement {kw.text!r}", ["field", "vars", "order", "gens"], kw)
            self.expect(";")
        if sig is None:
            raise self.error("missing vars declaration", ["vars"])
        if order_toks is None:
            order = OrderSpec.deglex(sig.nvars)
        else:
            for t in order_toks:
                if t.text not in sig.names:
                    raise self.error(f"unknown identifier {t.text!r}", sig.names, t)
            try:
                order = order_from_names(sig, [t.text for t in order_toks])
            except (KeyError, ValueError) as e:
                raise self.error(str(e).strip("'\""), tok=order_kw) from None
        ring = FreeAlgebra(sig, order, field)
        gens: list[Poly] = []
        for start, end in gen_texts:
            self.i = start
            while True:
                first = self.tok
                f = self.poly(ring)
                if not f:
                    raise self.error("zero polynomial among generators", tok=first)
                gens.append(f)
                if self.at(","):
                    self.take()
                    continue
                break
            if self.i != end:
                raise self.error(f"unexpected {self.tok.text!r}", ["+", "-", "*", ",", ";"])
        return ProblemFile(field, sig, order, gens)

    def _skip_to_semicolon(self) -> int:
        while not self.at(";"):
            if self.tok.kind == "eof":
                raise self.error("unterminated statement", ["';'"])
            self.take()
        return self.i

    def field_spec(self) -> Field:
        tok = self.expect_kind("ident", "field name")
        if tok.text in ("Q", "QQ"):
            return QQ
        if tok.text in ("GF", "F"):
            paren = self.at("(")
            if paren:
                self.take()
            mod_tok = self.expect_kind("num", "modulus")
            if paren:
                self.expect(")")
            try:
                return Field(int(mod_tok.text))
            except FieldError as e:
                raise self.error(str(e), tok=mod_tok) from None
        raise self.error(f"unknown field {tok.text!r}", ["Q", "GF"], tok)

    def vars(self) -> Signature:
        names, weights = [], []
        while True:
            name = self.expect_kind("ident", "variable name")
            weight = 1
            if self.at(":"):
                self.take()
                sign = 1
                if self.at("-"):
                    self.take()
                    sign = -1
                wtok = self.expect_kind("num", "weight")
                weight = sign * int(wtok.text)
                if weight < 1:
                    raise self.error("weight must be positive", tok=wtok)
            if name.text in names:
                raise self.error(f"duplicate variable name {name.text!r}", tok=name)
            names.append(name.text)
            weights.append(weight)
            if self.at(","):
                self.take()
                continue
            return Signature(tuple(names), tuple(weights))

    def order(self) -> list[Token]:
        kind = self.expect_kind("ident", "ordering name")
        if kind.text not in ("deglex", "grlex"):
            raise self.error(f"unsupported ordering {kind.text!r}", ["deglex"], kind)
        toks = [self.expect_kind("ident", "variable name")]
        while self.at(">"):
            self.take()
            toks.append(self.expect_kind("ident", "variable name"))
        self.expect(";")
        return toks


def parse(text: str) -> ProblemFile:
    return _Parser(text).problem()


def parse_poly(text: str, ring: FreeAlgebra) -> Poly:
    p = _Parser(text)
    f = p.poly(ring)
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}", ["+", "-", "*", "end of input"])
    return f


def print_canonical(f: Poly) -> str:
    return format_poly(f)


def format_problem(pf: ProblemFile, generators=None) -> str:
    gens = pf.generators if generators is None else generators
    sig = pf.signature
    lines = [
        f"field {'Q' if pf.field.is_rational else f'GF {pf.field.modulus}'};",
        "vars " + ", ".join(f"{n}:{w}" for n, w in zip(sig.names, sig.weights)) + ";",
        "order deglex " + " > ".join(sig.names[i] for i in pf.order.precedence) + ";",
    ]
    if gens:
        lines.append("gens:")
        lines.append(",\n".join(f"  {format_poly(g)}" for g in gens) + ";")
    return "\n".join(lines) + "\n"
