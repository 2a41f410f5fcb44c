"""Noncommutative polynomials over a weighted free algebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .ordering import OrderSpec
from .scalar import Field, QQ, Scalar, Value
from .words import Signature, Word, wdegree


class ContextError(ValueError):
    """Operands live in different algebras."""


@dataclass(frozen=True)
class FreeAlgebra:
    """The ambient context: coefficient field, weighted alphabet, ordering."""

    sig: Signature
    order: OrderSpec
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "_key", self.order.key_function(self.sig))
        object.__setattr__(self, "_keys", {})
        object.__setattr__(self, "_nkeys", {})

    @classmethod
    def make(cls, names, weights=None, field: Field = QQ, precedence=None) -> FreeAlgebra:
        names = tuple(names)
        sig = Signature(names, tuple(weights) if weights else (1,) * len(names))
        order = OrderSpec(tuple(precedence)) if precedence else OrderSpec.deglex(len(names))
        return cls(sig, order, field)

    def key(self, w: Word):
        k = self._keys.get(w)
        if k is None:
            k = self._keys[w] = self._key(w)
        return k

    def neg_key(self, w: Word):
        """Key reversing the ordering, for min-heaps that pop the largest word."""
        k = self._nkeys.get(w)
        if k is None:
            d, r = self.key(w)
            k = self._nkeys[w] = (-d, tuple(-x for x in r))
        return k

    def degree(self, w: Word) -> int:
        return wdegree(w, self.sig)

    @property
    def zero(self) -> Poly:
        return Poly(self)

    def monomial(self, w: Word, c=1) -> Poly:
        self.sig.check(w)
        return Poly(self, [(tuple(w), c)])

    def gen(self, name: str) -> Poly:
        return self.monomial((self.sig.index(name),))

    def word(self, text: str) -> Word:
        return self.sig.word(text)

    def __call__(self, text: str) -> Poly:
        from .parser import parse_poly

        return parse_poly(text, self)


class Term(NamedTuple):
    word: Word
    coeff: Value


class Poly:
    """An immutable polynomial; terms strictly descending, no zero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: FreeAlgebra, terms: Iterable = ()):
        field = ring.field
        acc: dict[Word, Value] = {}
        for w, c in terms:
            if isinstance(c, Scalar):
                if c.field != field:
                    raise ContextError(f"coefficient from {c.field} in algebra over {field}")
                c = c.value
            else:
                c = field(c)
            w = tuple(w)
            acc[w] = field.add(acc[w], c) if w in acc else c
        self._set(ring, acc)

    def _set(self, ring, acc: dict):
        self.ring = ring
        key = ring.key
        self.terms = tuple(
            Term(w, c) for w, c in sorted(((w, c) for w, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
        )
        self._hash = None

    @classmethod
    def from_dict(cls, ring: FreeAlgebra, acc: dict) -> Poly:
        """Trusted constructor: ``acc`` holds canonical field values."""
        p = cls.__new__(cls)
        p._set(ring, acc)
        return p

    @classmethod
    def _sorted(cls, ring: FreeAlgebra, terms: tuple) -> Poly:
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- leading data ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _nonzero(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")

    @property
    def lm(self) -> Word:
        self._nonzero()
        return self.terms[0].word

    @property
    def lc(self) -> Value:
        self._nonzero()
        return self.terms[0].coeff

    def leading(self) -> tuple[Word, Scalar]:
        self._nonzero()
        w, c = self.terms[0]
        return w, Scalar(self.ring.field, c)

    @property
    def degree(self) -> int:
        """Largest weighted degree of a term (0 for the zero polynomial)."""
        deg = self.ring.degree
        return max((deg(w) for w, _ in self.terms), default=0)

    def lh(self) -> Poly:
        """The top-degree homogeneous component."""
        self._nonzero()
        deg = self.ring.degree
        top = self.degree
        return Poly._sorted(self.ring, tuple(t for t in self.terms if deg(t.word) == top))

    def homogeneity(self) -> tuple[bool, int | None]:
        """``(True, d)`` if every term has degree d; zero gives ``(True, None)``."""
        if not self.terms:
            return True, None
        deg = self.ring.degree
        degs = {deg(w) for w, _ in self.terms}
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    @property
    def is_homogeneous(self) -> bool:
        return self.homogeneity()[0]

    def words(self) -> list[Word]:
        return [w for w, _ in self.terms]

    # -- arithmetic --------------------------------------------------------
    def _same(self, other: Poly):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise ContextError("polynomials belong to different algebras")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        field = self.ring.field
        acc = dict(self.terms)
        for w, c in other.terms:
            acc[w] = field.add(acc[w], c) if w in acc else c
        return Poly.from_dict(self.ring, acc)

    def __neg__(self) -> Poly:
        neg = self.ring.field.neg
        return Poly._sorted(self.ring, tuple(Term(w, neg(c)) for w, c in self.terms))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c) -> Poly:
        field = self.ring.field
        if isinstance(c, Scalar):
            if c.field != field:
                raise ContextError(f"scalar from {c.field} in algebra over {field}")
            c = c.value
        else:
            c = field(c)
        if not c:
            return self.ring.zero
        return Poly._sorted(self.ring, tuple(Term(w, field.mul(c, a)) for w, a in self.terms))

    def sandwich(self, left: Word = (), right: Word = ()) -> Poly:
        """``left·self·right``; order is preserved by monomial compatibility."""
        left, right = tuple(left), tuple(right)
        return Poly._sorted(self.ring, tuple(Term(left + w + right, c) for w, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._same(other)
            field = self.ring.field
            acc: dict[Word, Value] = {}
            for w1, c1 in self.terms:
                for w2, c2 in other.terms:
                    w = w1 + w2
                    c = field.mul(c1, c2)
                    acc[w] = field.add(acc[w], c) if w in acc else c
            return Poly.from_dict(self.ring, acc)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Poly):
            return other.__mul__(self)
        return self.scale(other)

    def monic(self) -> Poly:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def normalize(ring: FreeAlgebra, raw) -> Poly:
    """Build a Poly from ``(coeff, word)`` pairs."""
    return Poly(ring, ((w, c) for c, w in raw))


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def scalar_mul(c, f: Poly) -> Poly:
    return f.scale(c)


def sandwich(u: Word, f: Poly, v: Word) -> Poly:
    return f.sandwich(u, v)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    ring = f.ring
    field = ring.field
    fmt_word = ring.sig.format_word
    out = []
    for i, (w, c) in enumerate(f.terms):
        negative = field.is_rational and c < 0
        mag = -c if negative else c
        if w:
            body = fmt_word(w) if mag == 1 else f"{field.format(mag)}*{fmt_word(w)}"
        else:
            body = field.format(mag)
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)
