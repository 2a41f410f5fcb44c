"""Division by a finite set of polynomials, normality and interreduction."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ._kernels import LMIndex
from .poly import Poly, Term
from .scalar import Value
from .words import Word, divides


class Summand(NamedTuple):
    coeff: Value
    left: Word
    index: int
    right: Word


@dataclass
class Representation:
    """``f = sum(coeff * left * G[index] * right) + remainder``."""

    remainder: Poly
    summands: list[Summand] = field(default_factory=list)

    def reconstruct(self, G: Sequence[Poly]) -> Poly:
        ring = self.remainder.ring
        acc: dict = dict(self.remainder.terms)
        fld = ring.field
        for c, left, i, right in self.summands:
            for w, a in G[i].terms:
                nw = left + w + right
                v = fld.mul(c, a)
                acc[nw] = fld.add(acc[nw], v) if nw in acc else v
        return Poly.from_dict(ring, acc)


def _check_divisors(f: Poly, G: Sequence[Poly]) -> None:
    for g in G:
        f._same(g)
        if not g:
            raise ValueError("division by the zero polynomial")


def _divisor_index(G: Sequence[Poly]) -> tuple[LMIndex, int | None]:
    """Index over the leading words before the first constant divisor, and
    that constant's position. A constant divides every word, so nothing
    after it is ever chosen."""
    for i, g in enumerate(G):
        if not g.lm:
            return LMIndex([h.lm for h in G[:i]]), i
    return LMIndex([g.lm for g in G]), None


def remainder(f: Poly, G: Sequence[Poly], track: bool = True) -> Representation:
    """Fully reduce ``f`` modulo ``G``.

    The largest unreduced word is rewritten by the lowest-index divisor at
    its leftmost occurrence; words no leading word divides go to the
    remainder. ``track=False`` skips recording the summands.
    """
    _check_divisors(f, G)
    ring = f.ring
    fld = ring.field
    nkey = ring.neg_key
    index, const = _divisor_index(G)
    lm_len = [len(g.lm) for g in G]
    inv_lc = [fld.inv(g.lc) for g in G]
    tails = [g.terms[1:] for g in G]
    mul, sub, neg = fld.mul, fld.sub, fld.neg

    acc = dict(f.terms)
    heap = [(nkey(w), w) for w in acc]
    heapq.heapify(heap)
    rem: list[Term] = []
    summands: list[Summand] = []
    while heap:
        w = heapq.heappop(heap)[1]
        c = acc.pop(w)
        if not c:
            continue
        hit = index.find(w)
        if hit is None and const is not None:
            hit = (const, 0)
        if hit is None:
            rem.append(Term(w, c))
            continue
        i, pos = hit
        q = mul(c, inv_lc[i])
        left, right = w[:pos], w[pos + lm_len[i]:]
        if track:
            summands.append(Summand(q, left, i, right))
        for tw, tc in tails[i]:
            nw = left + tw + right
            if nw in acc:
                acc[nw] = sub(acc[nw], mul(q, tc))
            else:
                acc[nw] = neg(mul(q, tc))
                heapq.heappush(heap, (nkey(nw), nw))
    return Representation(Poly._sorted(ring, tuple(rem)), summands)


def reduce(f: Poly, G: Sequence[Poly]) -> Poly:
    return remainder(f, G, track=False).remainder


def is_normal(f: Poly, G: Sequence[Poly]) -> bool:
    _check_divisors(f, G)
    index, const = _divisor_index(G)
    if const is not None:
        return not f
    return all(index.find(w) is None for w, _ in f.terms)


def is_lm_reduced(G: Sequence[Poly]) -> bool:
    lms = [g.lm for g in G]
    return not any(i != j and divides(a, b) for i, a in enumerate(lms) for j, b in enumerate(lms))


def interreduce(G: Sequence[Poly]) -> list[Poly]:
    """Make ``G`` LM-reduced and monic without changing the ideal.

    An element whose leading word is divisible by another leading word is
    replaced by its remainder against the others (or dropped if that is
    zero); repeated until nothing changes.
    """
    work = [g.monic() for g in G if g]
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(work):
            others = work[:i] + work[i + 1:]
            if any(divides(h.lm, g.lm) for h in others):
                r = reduce(g, others)
                if r:
                    work[i] = r.monic()
                else:
                    del work[i]
                changed = True
                break
    return work
