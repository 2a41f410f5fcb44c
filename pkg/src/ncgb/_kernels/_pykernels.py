"""Pure-Python word kernels. Reference semantics for the compiled twin."""

from __future__ import annotations

BACKEND = "python"


def occurrences(u: tuple, v: tuple) -> list[int]:
    """Start positions of ``u`` inside ``v``, leftmost first."""
    k = len(u)
    return [i for i in range(len(v) - k + 1) if v[i:i + k] == u]


def overlap_lengths(a: tuple, b: tuple) -> list[int]:
    """Lengths k, 1 <= k < min(|a|, |b|), with a[-k:] == b[:k]."""
    m = min(len(a), len(b))
    return [k for k in range(1, m) if a[len(a) - k:] == b[:k]]


def weighted_degree(word: tuple, weights: tuple) -> int:
    return sum(weights[i] for i in word)


class LMIndex:
    """A fixed list of leading words searched as divisors."""

    def __init__(self, lms):
        self.lms = [tuple(w) for w in lms]
        for w in self.lms:
            if not w:
                raise ValueError("empty leading word")

    def __len__(self):
        return len(self.lms)

    def find(self, word: tuple):
        """``(index, position)`` of the lowest-index divisor at its leftmost
        occurrence, or ``None``."""
        n = len(word)
        for idx, u in enumerate(self.lms):
            k = len(u)
            if k > n:
                continue
            first = u[0]
            for pos in range(n - k + 1):
                if word[pos] == first and word[pos:pos + k] == u:
                    return idx, pos
        return None
