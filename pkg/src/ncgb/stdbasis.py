"""Standard bases of ungraded ideals via leading homogeneous parts.

Only graded orderings exist in this package, so every algebra qualifies.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .completion import GroebnerCheck, _graded_completion, _stable_by_degree, is_groebner_up_to
from .division import Representation, reduce
from .mingen import min_gen_set
from .poly import Poly
from .words import divides


@dataclass
class StdBasisOutput:
    kept: list[int]
    lh_min: list[Poly]
    basis: list[Poly]

    @property
    def lh_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(h.degree for h in self.lh_min).items()))


def _require_graded(GB: Sequence[Poly]) -> None:
    for g in GB:
        if not g.ring.order.is_graded:
            raise ValueError("standard bases need a graded monomial ordering")


def min_standard_basis(GB: Sequence[Poly]) -> StdBasisOutput:
    """Minimal standard basis extracted from a finite Gröbner basis.

    The leading homogeneous parts are run through :func:`min_gen_set`; the
    kept indices select the original elements. That ``GB`` really is a
    Gröbner basis is the caller's responsibility (see :func:`certify`).
    """
    GB = list(GB)
    for k, g in enumerate(GB):
        if not g:
            raise ValueError(f"element {k} is zero")
    _require_graded(GB)
    out = min_gen_set([g.lh() for g in GB])
    return StdBasisOutput(out.kept, [GB[k].lh() for k in out.kept], [GB[k] for k in out.kept])


def certify(GB: Sequence[Poly], degree: int) -> GroebnerCheck:
    """Partial Gröbner certificate for a possibly inhomogeneous ``GB``.

    Elements whose leading word is divisible by an earlier kept leading word
    must reduce to zero against the kept ones; the kept, LM-reduced part is
    then checked for overlaps up to ``degree``.
    """
    GB = list(GB)
    core: list[Poly] = []
    for g in GB:
        if any(divides(h.lm, g.lm) for h in core):
            continue
        core = [h for h in core if not divides(g.lm, h.lm)] + [g]
    for g in GB:
        if g.degree <= degree and reduce(g, core):
            return GroebnerCheck(False, degree, reduce(g, core))
    return is_groebner_up_to(core, degree)


@dataclass
class StandardCheck:
    ok: bool
    certified_degree: int
    witness: Poly | None = None

    def __bool__(self):
        return self.ok


def is_standard_basis(G: Sequence[Poly], GB_ref: Sequence[Poly], check_degree: int) -> StandardCheck:
    """Do the LH-ideals of ``G`` and ``GB_ref`` agree through ``check_degree``?

    Each side's leading homogeneous parts of degree <= ``check_degree`` are
    reduced against a truncated Gröbner basis of the other side's.
    """
    _require_graded(list(G) + list(GB_ref))
    lh_a = [g.lh() for g in G if g]
    lh_b = [g.lh() for g in GB_ref if g]
    for src, dst in ((lh_a, lh_b), (lh_b, lh_a)):
        ordered = [dst[k] for k in _stable_by_degree(dst)]
        basis = _graded_completion(ordered, check_degree).basis
        for h in src:
            if h.degree <= check_degree:
                r = reduce(h, basis)
                if r:
                    return StandardCheck(False, check_degree, h)
    return StandardCheck(True, check_degree)


def check_representation_bound(f: Poly, G: Sequence[Poly], rep: Representation) -> bool:
    """Is ``rep`` an exact expression of ``f`` whose summands stay within deg LH(f)?"""
    G = list(G)
    for _, _, i, _ in rep.summands:
        if not 0 <= i < len(G):
            return False
    if rep.reconstruct(G) != f:
        return False
    if not f:
        return not rep.summands
    bound = f.lh().degree
    deg = f.ring.degree
    return all(deg(left) + G[i].degree + deg(right) <= bound for c, left, i, right in rep.summands if c)
