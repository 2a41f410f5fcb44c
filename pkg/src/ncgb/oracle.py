"""Brute-force linear algebra over the word basis.

Nothing here touches division or completion: ideal components are spanned
explicitly and ranked by exact row reduction, so the results can be used to
check the Gröbner routines.

Degree-q components are built from ``I_q = sum_x (x I_{q-m_x} + I_{q-m_x} x) + span F_q``,
which spans exactly the products ``u f v`` of degree q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .poly import FreeAlgebra, Poly
from .scalar import Field, Value
from .words import Word, count_words_of_degree, divides, words_of_degree

DEFAULT_WORD_CAP = 100_000


class OracleLimitError(ValueError):
    pass


class Echelon:
    """Rows with pairwise distinct leading (largest) columns.

    Columns are integers; a larger integer is a larger word.
    """

    def __init__(self, fld: Field):
        self.field = fld
        self.rows: dict[int, dict[int, Value]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict[int, Value]) -> dict[int, Value]:
        fld = self.field
        row = {c: v for c, v in row.items() if v}
        done: dict[int, Value] = {}
        while row:
            lead = max(row)
            piv = self.rows.get(lead)
            if piv is None:
                done[lead] = row.pop(lead)
                continue
            c = row[lead]
            for col, v in piv.items():
                nv = fld.sub(row.get(col, 0), fld.mul(c, v))
                if nv:
                    row[col] = nv
                else:
                    row.pop(col, None)
        return done

    def insert(self, row: dict[int, Value]) -> bool:
        """Add ``row`` to the span; False if it was already in it."""
        r = self.reduce(row)
        if not r:
            return False
        lead = max(r)
        inv = self.field.inv(r[lead])
        self.rows[lead] = {c: self.field.mul(inv, v) for c, v in r.items()}
        return True

    def contains(self, row: dict[int, Value]) -> bool:
        return not self.reduce(row)


@dataclass
class Columns:
    """Word <-> column index, increasing in the monomial ordering."""

    words: list[Word]
    index: dict[Word, int] = field(init=False)

    def __post_init__(self):
        self.index = {w: i for i, w in enumerate(self.words)}

    def vector(self, f: Poly) -> dict[int, Value]:
        return {self.index[w]: c for w, c in f.terms}


def _columns(ring: FreeAlgebra, degrees: Sequence[int], cap: int) -> Columns:
    words: list[Word] = []
    for q in degrees:
        if count_words_of_degree(ring.sig, q) > cap:
            raise OracleLimitError(f"degree {q} has more than {cap} words")
        words += words_of_degree(ring.sig, q)
    words.sort(key=ring.key)
    return Columns(words)


@dataclass
class OracleReport:
    max_degree: int
    ideal_dims: list[int]
    ambient_dims: list[int]
    betti: list[int]

    @property
    def quotient_dims(self) -> list[int]:
        return [a - i for a, i in zip(self.ambient_dims, self.ideal_dims)]

    def as_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "ambient_dims": self.ambient_dims,
            "ideal_dims": self.ideal_dims,
            "quotient_dims": self.quotient_dims,
            "betti": self.betti,
        }


@dataclass
class GradedSpan:
    """Per-degree echelon bases of a graded ideal."""

    ring: FreeAlgebra
    columns: list[Columns]
    spans: list[Echelon]
    lower_ranks: list[int]

    def report(self) -> OracleReport:
        D = len(self.spans) - 1
        dims = [e.rank for e in self.spans]
        ambient = [len(c.words) for c in self.columns]
        betti = [d - lo for d, lo in zip(dims, self.lower_ranks)]
        return OracleReport(D, dims, ambient, betti)

    def contains(self, f: Poly) -> bool:
        ok, q = f.homogeneity()
        if not ok:
            raise ValueError("graded membership expects a homogeneous element")
        if q is None:
            return True
        return self.spans[q].contains(self.columns[q].vector(f))


def _require_homogeneous(F: Sequence[Poly]) -> None:
    for k, f in enumerate(F):
        if not f.is_homogeneous:
            raise ValueError(f"generator {k} ({f}) is not homogeneous")


def span_ideal(F: Sequence[Poly], D: int, ring: FreeAlgebra | None = None,
               cap: int = DEFAULT_WORD_CAP) -> GradedSpan:
    """Echelon bases of the degree-q parts of the ideal of ``F``, q = 0..D."""
    F = [f for f in F if f]
    _require_homogeneous(F)
    if ring is None:
        if not F:
            raise ValueError("ring is required when F is empty")
        ring = F[0].ring
    weights = ring.sig.weights
    cols = [_columns(ring, [q], cap) for q in range(D + 1)]
    spans: list[Echelon] = []
    lower: list[int] = []
    for q in range(D + 1):
        e = Echelon(ring.field)
        index = cols[q].index
        for x, m in enumerate(weights):
            if m > q:
                continue
            src_words = cols[q - m].words
            for row in spans[q - m].rows.values():
                e.insert({index[(x,) + src_words[c]]: v for c, v in row.items()})
                e.insert({index[src_words[c] + (x,)]: v for c, v in row.items()})
        lower.append(e.rank)
        for f in F:
            if f.degree == q:
                e.insert(cols[q].vector(f))
        spans.append(e)
    return GradedSpan(ring, cols, spans, lower)


def dims(F: Sequence[Poly], D: int, ring: FreeAlgebra | None = None,
         cap: int = DEFAULT_WORD_CAP) -> OracleReport:
    return span_ideal(F, D, ring, cap).report()


def minimal_betti(F: Sequence[Poly], D: int, ring: FreeAlgebra | None = None,
                  cap: int = DEFAULT_WORD_CAP) -> list[int]:
    return span_ideal(F, D, ring, cap).report().betti


class FilteredSpan:
    """Span of all products ``u g v`` with ``d(u) + deg(g) + d(v) <= D``.

    Used for ideals with inhomogeneous generators.
    """

    def __init__(self, F: Sequence[Poly], D: int, cap: int = DEFAULT_WORD_CAP):
        F = [f for f in F if f]
        if not F:
            raise ValueError("FilteredSpan needs at least one generator")
        ring = F[0].ring
        self.ring, self.D = ring, D
        self.columns = _columns(ring, range(D + 1), cap)
        index, words = self.columns.index, self.columns.words
        # layer[k] spans the products of exact filtration degree k
        layers: list[Echelon] = []
        for k in range(D + 1):
            e = Echelon(ring.field)
            for x, m in enumerate(ring.sig.weights):
                if m > k:
                    continue
                for row in layers[k - m].rows.values():
                    e.insert({index[(x,) + words[c]]: v for c, v in row.items()})
                    e.insert({index[words[c] + (x,)]: v for c, v in row.items()})
            for f in F:
                if f.degree == k:
                    e.insert(self.columns.vector(f))
            layers.append(e)
        self.span = Echelon(ring.field)
        for e in layers:
            for row in e.rows.values():
                self.span.insert(row)

    def contains(self, f: Poly) -> bool:
        if f.degree > self.D:
            raise ValueError(f"degree {f.degree} exceeds the bound {self.D}")
        return self.span.contains(self.columns.vector(f))


def member(f: Poly, F: Sequence[Poly], D: int, cap: int = DEFAULT_WORD_CAP) -> bool:
    """Is ``f`` in the ideal of ``F``, as witnessed by products of degree <= D?

    For homogeneous ``F`` this is exact membership of each homogeneous
    component of ``f``.
    """
    if f.degree > D:
        raise ValueError(f"degree {f.degree} exceeds the bound {D}")
    F = [g for g in F if g]
    if not f:
        return True
    if not F:
        return False
    if all(g.is_homogeneous for g in F):
        span = span_ideal(F, f.degree, f.ring, cap)
        deg = f.ring.degree
        parts: dict[int, list] = {}
        for w, c in f.terms:
            parts.setdefault(deg(w), []).append((w, c))
        return all(span.contains(Poly(f.ring, terms)) for terms in parts.values())
    return FilteredSpan(F, D, cap).contains(f)


def direct_component_dim(F: Sequence[Poly], q: int) -> int:
    """dim I_q from every product ``u f v`` of degree q, with no recursion."""
    F = [f for f in F if f]
    if not F:
        return 0
    ring = F[0].ring
    cols = _columns(ring, [q], DEFAULT_WORD_CAP)
    e = Echelon(ring.field)
    for f in F:
        rest = q - f.degree
        if rest < 0:
            continue
        for du in range(rest + 1):
            for u in words_of_degree(ring.sig, du):
                for v in words_of_degree(ring.sig, rest - du):
                    e.insert({cols.index[u + w + v]: c for w, c in f.terms})
    return e.rank


def normal_word_counts(lms: Sequence[Word], ring: FreeAlgebra, D: int) -> list[int]:
    """Number of degree-q words divisible by none of ``lms``, q = 0..D."""
    return [
        sum(1 for w in words_of_degree(ring.sig, q) if not any(divides(m, w) for m in lms))
        for q in range(D + 1)
    ]
