"""Minimal homogeneous generating sets of graded two-sided ideals."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .completion import TruncatedBasis, _graded_completion, _require_homogeneous, _stable_by_degree
from .division import reduce
from .poly import Poly


@dataclass
class MinGenOutput:
    kept: list[int]
    basis: TruncatedBasis
    degree_profile: dict[int, int]

    def profile_list(self, length: int) -> list[int]:
        """Profile as a dense list indexed by degree ``0..length-1``."""
        return [self.degree_profile.get(q, 0) for q in range(length)]


def min_gen_set(F: Sequence[Poly]) -> MinGenOutput:
    """Select a minimal generating subset of ``F`` and an n0-truncated basis.

    ``F`` is stably sorted by degree and n0 is its largest degree. ``kept``
    holds indices into the caller's ``F`` in processing order.
    """
    F = list(F)
    _require_homogeneous(F)
    if not F:
        return MinGenOutput([], TruncatedBasis([], 0), {})
    order = _stable_by_degree(F)
    n0 = F[order[-1]].degree
    trace = _graded_completion([F[k] for k in order], n0)
    kept = [order[k] for k in trace.kept]
    profile = Counter(F[k].degree for k in kept)
    return MinGenOutput(kept, TruncatedBasis(trace.basis, n0), dict(sorted(profile.items())))


def verify_minimal(F: Sequence[Poly], claimed: Sequence[int]) -> bool:
    """Check a claimed minimal generating subset by prefix-ideal membership.

    Each claimed generator must survive reduction by a truncated basis of the
    claimed generators processed before it, and every other generator must
    reduce to zero against a truncated basis of the whole claimed set.
    """
    F = list(F)
    _require_homogeneous(F)
    claimed = list(claimed)
    if len(set(claimed)) != len(claimed) or any(not 0 <= k < len(F) for k in claimed):
        return False
    chosen = sorted(claimed, key=lambda k: F[k].degree)
    for pos, k in enumerate(chosen):
        prefix = [F[j] for j in chosen[:pos]]
        basis = _graded_completion(prefix, F[k].degree).basis
        if not reduce(F[k], basis):
            return False
    if not F:
        return True
    n0 = max(f.degree for f in F)
    full = _graded_completion([F[k] for k in chosen], n0).basis
    dropped = set(range(len(F))) - set(claimed)
    return all(not reduce(F[k], full) for k in dropped)
