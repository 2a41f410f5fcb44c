"""Overlap elements and Buchberger-style completion, full and degree-truncated."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Sequence

from .division import interreduce, is_lm_reduced, reduce
from .poly import Poly
from .words import OverlapShape, divides, proper_overlaps


class InvariantError(RuntimeError):
    """An internal guarantee of the completion loop was broken."""


class ObstructionTask(NamedTuple):
    left: int
    right: int
    shape: OverlapShape
    degree: int


def overlap_element(f: Poly, g: Poly, shape: OverlapShape) -> Poly:
    """``f·u / LC(f) - v·g / LC(g)`` for the overlap ``LM(f)·u == v·LM(g)``."""
    f._same(g)
    a, b = f.lm, g.lm
    u, v = tuple(shape.u), tuple(shape.v)
    if a + u != v + b:
        raise ValueError("shape does not satisfy LM(f)*u == v*LM(g)")
    if not u or not v or len(u) >= len(b):
        raise ValueError("shared factor must be a proper nonempty part of both words")
    if divides(a, v) or divides(b, u):
        raise ValueError("shape is an inclusion, not an overlap")
    fld = f.ring.field
    return f.sandwich((), u).scale(fld.inv(f.lc)) - g.sandwich(v, ()).scale(fld.inv(g.lc))


def obstructions(G: Sequence[Poly], i: int, j: int) -> list[ObstructionTask]:
    """All overlap tasks of the ordered pair ``(G[i], G[j])``, shortest shared factor first."""
    a, b = G[i].lm, G[j].lm
    if not a or not b:
        return []
    deg = G[i].ring.degree
    da = deg(a)
    return [ObstructionTask(i, j, s, da + deg(s.u)) for s in proper_overlaps(a, b)]


def _task_element(G: Sequence[Poly], task: ObstructionTask) -> Poly:
    return overlap_element(G[task.left], G[task.right], task.shape)


def _require_homogeneous(F: Sequence[Poly]) -> None:
    for k, f in enumerate(F):
        if not f:
            raise ValueError(f"generator {k} is zero")
        if not f.is_homogeneous:
            raise ValueError(f"generator {k} ({f}) is not homogeneous")


# -- certification -------------------------------------------------------------

@dataclass
class GroebnerCheck:
    ok: bool
    degree: int
    witness: Poly | None = None
    task: ObstructionTask | None = None

    def __bool__(self):
        return self.ok


def is_groebner_up_to(G: Sequence[Poly], n: int) -> GroebnerCheck:
    """Do all overlap elements of degree <= n reduce to zero modulo ``G_{<=n}``?

    ``G`` must be LM-reduced. Self-overlaps are included. On failure the
    first nonzero remainder is returned as the witness.
    """
    G = list(G)
    for k, g in enumerate(G):
        if not g:
            raise ValueError(f"element {k} is zero")
    if not is_lm_reduced(G):
        raise ValueError("set is not LM-reduced")
    low = [g for g in G if g.degree <= n]
    for i, j in itertools.product(range(len(G)), repeat=2):
        for task in obstructions(G, i, j):
            if task.degree > n:
                continue
            r = reduce(_task_element(G, task), low)
            if r:
                return GroebnerCheck(False, n, r, task)
    return GroebnerCheck(True, n)


# -- full completion with guards ----------------------------------------------

class Status(Enum):
    COMPLETE = "Complete"
    GUARD_HIT = "GuardHit"


@dataclass
class CompletionResult:
    basis: list[Poly]
    status: Status
    pending: int = 0

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE


def buchberger(G0: Sequence[Poly], max_degree: int | None = None,
               max_elements: int | None = None) -> CompletionResult:
    """Complete ``G0`` to a Gröbner basis, stopping at a guard.

    The input is interreduced first. Obstructions are taken smallest degree
    first, ties in creation order; those above ``max_degree`` are left
    pending. ``max_elements`` caps the size of the basis. When a new element's
    leading word divides an older one, the older element is retired and
    queued for reduction so the working set stays LM-reduced.
    """
    if max_degree is None and max_elements is None:
        raise ValueError("a guard (max_degree or max_elements) is required")
    G = interreduce(G0)
    alive = [True] * len(G)
    queue: list = []
    seq = itertools.count()

    def push_pair(i, j):
        for task in obstructions(G, i, j):
            heapq.heappush(queue, (task.degree, next(seq), task))

    for i, j in itertools.product(range(len(G)), repeat=2):
        push_pair(i, j)

    status = Status.COMPLETE
    while queue:
        degree, _, item = queue[0]
        if max_degree is not None and degree > max_degree:
            status = Status.GUARD_HIT
            break
        heapq.heappop(queue)
        if isinstance(item, ObstructionTask):
            if not (alive[item.left] and alive[item.right]):
                continue
            element = _task_element(G, item)
        else:
            element = item
        live = [g for g, a in zip(G, alive) if a]
        r = reduce(element, live)
        if not r:
            continue
        if max_elements is not None and len(live) >= max_elements:
            heapq.heappush(queue, (degree, next(seq), item))
            status = Status.GUARD_HIT
            break
        t = len(G)
        G.append(r.monic())
        alive.append(True)
        for k in range(t):
            if alive[k] and divides(G[t].lm, G[k].lm):
                alive[k] = False
                heapq.heappush(queue, (G[k].ring.degree(G[k].lm), next(seq), G[k]))
        for k in range(t):
            if alive[k]:
                push_pair(k, t)
                push_pair(t, k)
        push_pair(t, t)
    basis = [g for g, a in zip(G, alive) if a]
    pending = len(queue) if status is Status.GUARD_HIT else 0
    return CompletionResult(basis, status, pending)


# -- degree-by-degree truncated completion -----------------------------------

@dataclass
class TruncatedBasis:
    """Homogeneous, monic, LM-reduced elements in non-decreasing degree."""

    elements: list[Poly]
    truncation_degree: int

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def degrees(self) -> list[int]:
        return [g.degree for g in self.elements]

    def up_to(self, n: int) -> list[Poly]:
        return [g for g in self.elements if g.degree <= n]


@dataclass
class _Trace:
    basis: list[Poly] = field(default_factory=list)
    kept: list[int] = field(default_factory=list)


def _graded_completion(F: Sequence[Poly], n0: int) -> _Trace:
    """Shared degree-by-degree loop.

    ``F`` is already stably sorted by degree. Pending obstructions and
    generators are both consumed first-in first-out within a degree;
    obstructions of a degree are exhausted before that degree's generators.
    ``kept`` records the positions of generators that contributed a new
    element.
    """
    trace = _Trace()
    G = trace.basis
    pending: list[ObstructionTask] = []
    W = [(k, f, f.degree) for k, f in enumerate(F) if f.degree <= n0]
    wpos = 0
    current = -1

    def append(r: Poly):
        t = len(G)
        G.append(r.monic())
        fresh: list[ObstructionTask] = []
        for i in range(t):
            fresh += obstructions(G, i, t)
            fresh += obstructions(G, t, i)
        fresh += obstructions(G, t, t)
        for task in fresh:
            if task.degree > n0:
                continue
            if task.degree <= current:
                raise InvariantError(f"new obstruction of degree {task.degree} at degree {current}")
            pending.append(task)

    while pending or wpos < len(W):
        candidates = [t.degree for t in pending]
        if wpos < len(W):
            candidates.append(W[wpos][2])
        current = min(candidates)
        batch = [t for t in pending if t.degree == current]
        pending[:] = [t for t in pending if t.degree != current]
        gens = []
        while wpos < len(W) and W[wpos][2] == current:
            gens.append(W[wpos])
            wpos += 1
        for task in batch:
            r = reduce(_task_element(G, task), G)
            if r:
                append(r)
        for k, f, _ in gens:
            r = reduce(f, G)
            if r:
                trace.kept.append(k)
                append(r)
    return trace


def _stable_by_degree(F: Sequence[Poly]) -> list[int]:
    return sorted(range(len(F)), key=lambda k: F[k].degree)


def truncated_gb(F: Sequence[Poly], n0: int) -> TruncatedBasis:
    """An ``n0``-truncated Gröbner basis of the graded ideal generated by ``F``.

    Generators above degree ``n0`` cannot affect the result and are skipped.
    """
    F = list(F)
    _require_homogeneous(F)
    if F and n0 < min(f.degree for f in F):
        raise ValueError(f"truncation degree {n0} is below the smallest generator degree")
    order = _stable_by_degree(F)
    trace = _graded_completion([F[k] for k in order], n0)
    return TruncatedBasis(trace.basis, n0)
