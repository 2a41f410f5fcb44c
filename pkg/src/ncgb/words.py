"""Words in the free monoid on a weighted alphabet.

A word is a tuple of variable indices; ``()`` is the empty word 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import _kernels

Word = tuple


@dataclass(frozen=True)
class Signature:
    """Variable names and their positive weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        names = tuple(self.names)
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        if len(names) != len(weights):
            raise ValueError("names and weights differ in length")
        if not names:
            raise ValueError("at least one variable is required")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n, w in zip(names, weights):
            if w < 1:
                raise ValueError(f"weight of {n} must be positive, got {w}")

    @classmethod
    def uniform(cls, names: Sequence[str]) -> Signature:
        return cls(tuple(names), (1,) * len(names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def word(self, text: str) -> Word:
        """Parse ``x*y^2*x`` (or ``1``) into a word."""
        text = text.strip()
        if text == "1":
            return ()
        letters: list[int] = []
        for factor in text.split("*"):
            name, _, exp = factor.strip().partition("^")
            k = int(exp) if exp else 1
            if k < 1:
                raise ValueError(f"exponent must be positive in {factor!r}")
            letters.extend([self.index(name.strip())] * k)
        return tuple(letters)

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.names[w[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    def check(self, w: Word) -> None:
        for i in w:
            if not 0 <= i < self.nvars:
                raise ValueError(f"letter index {i} out of range for {self.nvars} variables")


class Occurrence(NamedTuple):
    left: Word
    right: Word


class OverlapShape(NamedTuple):
    """Cofactors with ``a·u == v·b`` for leading words a and b."""

    u: Word
    v: Word


def wdegree(w: Word, sig: Signature) -> int:
    return _kernels.weighted_degree(w, sig.weights)


def occurrences(u: Word, v: Word) -> list[Occurrence]:
    if not u:
        raise ValueError("cannot search for the empty word")
    k = len(u)
    return [Occurrence(v[:i], v[i + k:]) for i in _kernels.occurrences(u, v)]


def divides(u: Word, v: Word) -> bool:
    return bool(_kernels.occurrences(u, v)) if u else True


def proper_overlaps(a: Word, b: Word) -> list[OverlapShape]:
    """Shapes where a nonempty proper suffix of ``a`` is a proper prefix of ``b``.

    The shared factor is strictly shorter than both words, so neither word
    divides the other's cofactor.
    """
    if not a or not b:
        raise ValueError("overlaps need nonempty words")
    return [OverlapShape(u=b[k:], v=a[:len(a) - k]) for k in _kernels.overlap_lengths(a, b)]


def words_of_degree(sig: Signature, q: int) -> list[Word]:
    """All words of weighted degree ``q``, in no particular order."""
    table: list[list[Word]] = [[()]]
    for d in range(1, q + 1):
        row = []
        for i, m in enumerate(sig.weights):
            if m <= d:
                row.extend((i,) + w for w in table[d - m])
        table.append(row)
    return table[q] if q >= 0 else []


def count_words_of_degree(sig: Signature, q: int) -> int:
    counts = [1] + [0] * q
    for d in range(1, q + 1):
        counts[d] = sum(counts[d - m] for m in sig.weights if m <= d)
    return counts[q] if q >= 0 else 0
