"""Graded monomial orderings on words."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import product
from typing import Sequence

from .words import Signature, Word, wdegree


class Cmp(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderSpec:
    """Weighted degree first, then left-to-right lex by letter precedence.

    ``precedence`` lists variable indices from highest to lowest.
    """

    precedence: tuple[int, ...]
    kind: str = "deglex"

    def __post_init__(self):
        object.__setattr__(self, "precedence", tuple(self.precedence))
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError(f"precedence {self.precedence} is not a permutation")
        if self.kind != "deglex":
            raise ValueError(f"unsupported ordering {self.kind!r}")

    @classmethod
    def deglex(cls, nvars: int) -> OrderSpec:
        """Declaration order, first variable highest."""
        return cls(tuple(range(nvars)))

    @property
    def is_graded(self) -> bool:
        return True

    def ranks(self) -> tuple[int, ...]:
        """Per-variable rank; a larger rank is a larger letter."""
        n = len(self.precedence)
        r = [0] * n
        for pos, var in enumerate(self.precedence):
            r[var] = n - pos
        return tuple(r)

    def key_function(self, sig: Signature):
        """A sort key realizing this ordering over ``sig``.

        Words of equal weighted degree can never be proper prefixes of one
        another, so plain tuple comparison of the rank sequences is exactly
        the first-difference lex rule.
        """
        if len(self.precedence) != sig.nvars:
            raise ValueError("ordering and signature disagree on the number of variables")
        ranks = self.ranks()
        weights = sig.weights

        def key(w: Word):
            return (sum(weights[i] for i in w), tuple(ranks[i] for i in w))

        return key


def compare(a: Word, b: Word, ord: OrderSpec, sig: Signature) -> Cmp:
    if a == b:
        return Cmp.EQUAL
    key = ord.key_function(sig)
    return Cmp.LESS if key(a) < key(b) else Cmp.GREATER


@dataclass
class OrderingReport:
    ok: bool
    checked: int
    violation: str | None = None

    def __bool__(self):
        return self.ok


def _all_words(nvars: int, maxlen: int) -> list[Word]:
    out: list[Word] = []
    for n in range(maxlen + 1):
        out.extend(product(range(nvars), repeat=n))
    return out


def check_monomial_ordering(ord: OrderSpec, sig: Signature, maxlen: int) -> OrderingReport:
    """Exhaustively test the monomial-ordering axioms on words up to ``maxlen``.

    Checks strict totality, gradedness, compatibility ``u < v => w u s < w v s``
    (for contexts whose product stays within ``maxlen``) and the subword rule
    ``v = w u s, v != u => u < v``.
    """
    if maxlen < 2:
        raise ValueError("maxlen must be at least 2")
    key = ord.key_function(sig)
    words = _all_words(sig.nvars, maxlen)
    keys = {w: key(w) for w in words}
    checked = 0

    def fail(msg):
        return OrderingReport(False, checked, msg)

    fmt = sig.format_word
    ranked = sorted(words, key=keys.__getitem__)
    for lo, hi in zip(ranked, ranked[1:]):
        checked += 1
        if keys[lo] == keys[hi]:
            return fail(f"distinct words {fmt(lo)} and {fmt(hi)} compare equal")
        if wdegree(lo, sig) > wdegree(hi, sig):
            return fail(f"{fmt(lo)} < {fmt(hi)} but has larger degree")
    by_len: dict[int, list[Word]] = {}
    for w in words:
        by_len.setdefault(len(w), []).append(w)
    contexts = {
        room: [(l, r) for l in words if len(l) <= room for r in words if len(l) + len(r) <= room]
        for room in range(1, maxlen + 1)
    }
    for la in range(maxlen + 1):
        for lb in range(maxlen + 1):
            room = maxlen - max(la, lb)
            if room < 1:
                continue
            ctx = contexts[room]
            for a in by_len[la]:
                for b in by_len[lb]:
                    if keys[a] >= keys[b]:
                        continue
                    for l, r in ctx:
                        checked += 1
                        if keys[l + a + r] >= keys[l + b + r]:
                            return fail(f"{fmt(a)} < {fmt(b)} but not after multiplying by {fmt(l)}, {fmt(r)}")
    for v in words:
        for i in range(len(v)):
            for j in range(i, len(v) + 1):
                u = v[i:j]
                if u == v:
                    continue
                checked += 1
                if keys[u] >= keys[v]:
                    return fail(f"subword {fmt(u)} is not below {fmt(v)}")
    return OrderingReport(True, checked)


def order_from_names(sig: Signature, names: Sequence[str]) -> OrderSpec:
    """``["x", "y"]`` (x > y) to an OrderSpec."""
    if sorted(names) != sorted(sig.names) or len(names) != sig.nvars:
        raise ValueError("order must mention every variable exactly once")
    return OrderSpec(tuple(sig.index(n) for n in names))
