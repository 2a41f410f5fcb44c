"""Random instance generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from ncgb import FreeAlgebra, Poly
from ncgb.words import words_of_degree


def coefficient(ring: FreeAlgebra, rng: random.Random, bound: int = 5):
    if ring.field.is_rational:
        c = 0
        while c == 0:
            c = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        return c
    return rng.randrange(1, ring.field.modulus)


def homogeneous(ring: FreeAlgebra, degree: int, rng: random.Random, max_terms: int = 3) -> Poly:
    words = words_of_degree(ring.sig, degree)
    if not words:
        return ring.zero
    chosen = rng.sample(words, min(len(words), rng.randint(1, max_terms)))
    return Poly(ring, [(w, coefficient(ring, rng)) for w in chosen])


def inhomogeneous(ring: FreeAlgebra, max_degree: int, rng: random.Random, max_terms: int = 3) -> Poly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        words = words_of_degree(ring.sig, d)
        if words:
            terms.append((rng.choice(words), coefficient(ring, rng)))
    return Poly(ring, terms)


def graded_instance(rng: random.Random, field=None, max_gens: int = 4, max_deg: int = 4):
    """A ring with 2-3 variables of weight 1 or 2 and homogeneous generators."""
    nvars = rng.choice([2, 3])
    names = "xyz"[:nvars]
    weights = [rng.choice([1, 2]) for _ in range(nvars)]
    kwargs = {"field": field} if field is not None else {}
    ring = FreeAlgebra.make(names, weights, **kwargs)
    F = []
    count = rng.randint(2, max_gens)
    while len(F) < count:
        f = homogeneous(ring, rng.randint(min(weights), max_deg), rng)
        if f:
            F.append(f)
    return ring, F


def random_word(ring: FreeAlgebra, rng: random.Random, max_len: int) -> tuple:
    return tuple(rng.randrange(ring.sig.nvars) for _ in range(rng.randint(0, max_len)))
