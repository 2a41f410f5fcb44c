import random

import pytest

from ncgb import oracle
from ncgb.completion import (
    Status,
    buchberger,
    is_groebner_up_to,
    obstructions,
    overlap_element,
    truncated_gb,
)
from ncgb.division import is_lm_reduced, reduce
from ncgb.stdbasis import certify
from ncgb.words import OverlapShape, proper_overlaps

import randpoly


def test_overlap_element_examples(R, R12):
    f = R("x^2 - y*x")
    x = R.word("x")
    assert overlap_element(f, f, OverlapShape(x, x)) == R("x*y*x - y*x^2")
    g = R("x*y - y*x")
    assert proper_overlaps(g.lm, g.lm) == []
    h = R12("x^2 - y")
    o = overlap_element(h, h, OverlapShape(x, x))
    assert o == R12("x*y - y*x")
    assert o.homogeneity() == (True, 3)


def test_overlap_element_rejects_bad_shapes(R):
    f = R("x^2 - y*x")
    with pytest.raises(ValueError):
        overlap_element(f, f, OverlapShape(R.word("y"), R.word("x")))
    with pytest.raises(ValueError):
        overlap_element(f, f, OverlapShape((), ()))


def test_overlap_elements_drop_leading_word():
    rng = random.Random(31)
    for _ in range(200):
        ring, F = randpoly.graded_instance(rng)
        f, g = rng.choice(F), rng.choice(F)
        for task in obstructions([f, g], 0, 1):
            o = overlap_element(f, g, task.shape)
            top = f.lm + task.shape.u
            assert all(ring.key(w) < ring.key(top) for w in o.words())
            assert o.homogeneity()[1] in (None, task.degree)


def test_is_groebner_up_to_examples(R):
    assert is_groebner_up_to([R("x*y - y*x")], 10)
    check = is_groebner_up_to([R("x^2 - y*x")], 3)
    assert not check and check.witness == R("x*y*x - y^2*x")
    assert is_groebner_up_to([R("x^2 - y*x"), R("x*y*x - y^2*x")], 3)
    with pytest.raises(ValueError):
        is_groebner_up_to([R("x^2"), R("x^3")], 3)


def test_buchberger_examples(R):
    res = buchberger([R("x*y - y*x")], max_degree=10)
    assert res.status is Status.COMPLETE and res.basis == [R("x*y - y*x")]

    G0 = [R("x^2 - y")]
    res = buchberger(G0, max_degree=6)
    assert res.complete
    assert res.basis == [R("x^2 - y"), R("x*y - y*x")]
    assert certify(res.basis, 6)
    assert all(oracle.member(g, G0, 4) for g in res.basis)
    assert all(not reduce(g, res.basis) for g in G0)

    res = buchberger([R("x^2")], max_elements=5)
    assert res.complete and res.basis == [R("x^2")]

    with pytest.raises(ValueError):
        buchberger([R("x")])


def test_buchberger_guard_hit(R):
    # x*y*x - y*x*y generates an ideal without a finite Gröbner basis under x > y
    res = buchberger([R("x*y*x - y*x*y")], max_degree=8)
    assert res.status is Status.GUARD_HIT and res.pending > 0
    assert is_lm_reduced(res.basis)
    assert certify(res.basis, 8)
    res = buchberger([R("x*y*x - y*x*y")], max_elements=2)
    assert res.status is Status.GUARD_HIT and len(res.basis) == 2


def test_buchberger_retires_divisible_elements(R):
    # the second generator's leading word x^3 is divisible by x^2 found later
    res = buchberger([R("x*y - y^2"), R("x^3 - y^3")], max_degree=8)
    assert is_lm_reduced(res.basis)
    G0 = [R("x*y - y^2"), R("x^3 - y^3")]
    assert all(not reduce(g, res.basis) for g in G0)


def test_truncated_gb_examples(R):
    tb = truncated_gb([R("x^2 - y*x")], 3)
    assert tb.elements == [R("x^2 - y*x"), R("x*y*x - y^2*x")]
    assert is_groebner_up_to(tb.elements, 3)
    assert truncated_gb([R("x^2 - y*x")], 2).elements == [R("x^2 - y*x")]
    assert truncated_gb([R("x*y - y*x")], 8).elements == [R("x*y - y*x")]


def test_truncated_gb_errors(R):
    with pytest.raises(ValueError):
        truncated_gb([R("x^2 - y")], 3)
    with pytest.raises(ValueError):
        truncated_gb([R("x^2")], 1)
    with pytest.raises(ValueError):
        truncated_gb([R.zero], 3)


def _instances(n, seed):
    rng = random.Random(seed)
    for _ in range(n):
        ring, F = randpoly.graded_instance(rng)
        n0 = rng.randint(max(f.degree for f in F), 6)
        yield rng, ring, F, n0


def test_truncated_gb_structure_and_certificate():
    for _, ring, F, n0 in _instances(40, 32):
        tb = truncated_gb(F, n0)
        degs = tb.degrees()
        assert degs == sorted(degs) and all(d <= n0 for d in degs)
        assert all(g.is_homogeneous and g.lc == 1 for g in tb)
        assert is_lm_reduced(tb.elements)
        assert is_groebner_up_to(tb.elements, n0)


def test_truncation_soundness_random_combinations():
    for rng, ring, F, n0 in _instances(30, 33):
        tb = truncated_gb(F, n0)
        for _ in range(5):
            d = rng.randint(min(f.degree for f in F), n0)
            combo = ring.zero
            for f in F:
                if f.degree > d:
                    continue
                for _ in range(2):
                    rest = d - f.degree
                    du = rng.randint(0, rest)
                    left = randpoly.homogeneous(ring, du, rng, 1) if du else ring.monomial(())
                    right = randpoly.homogeneous(ring, rest - du, rng, 1) if rest - du else ring.monomial(())
                    if left and right:
                        combo = combo + left * f * right
            assert not reduce(combo, tb.elements)


def test_truncated_gb_monotone():
    for _, ring, F, n0 in _instances(25, 34):
        big = truncated_gb(F, n0 + 1)
        for m in range(max(f.degree for f in F), n0 + 1):
            assert big.up_to(m) == truncated_gb(F, m).elements


def test_appending_non_divisible_element_keeps_truncation():
    rng = random.Random(35)
    done = 0
    while done < 20:
        ring, F = randpoly.graded_instance(rng)
        n0 = max(f.degree for f in F)
        tb = truncated_gb(F, n0)
        g = reduce(randpoly.homogeneous(ring, n0, rng, 4), tb.elements)
        if not g:
            continue
        assert is_groebner_up_to(tb.elements + [g.monic()], n0)
        done += 1


def test_ideal_preserved_degreewise():
    for _, ring, F, n0 in _instances(25, 36):
        tb = truncated_gb(F, n0)
        a = oracle.dims(F, n0, ring).ideal_dims
        b = oracle.dims(tb.elements, n0, ring).ideal_dims
        assert a == b
