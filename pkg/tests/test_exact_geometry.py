from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from twouniform.exact_geometry import (
    ONE,
    SQRT3,
    ZERO,
    Isometry,
    QuadExt,
    Vec2,
    angular_compare,
    apply,
    compose,
    qx_arith,
    qx_sign,
    unit_direction,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=40)
quads = st.builds(QuadExt, fractions, fractions)
vectors = st.builds(Vec2, quads, quads)


def test_arith_examples():
    assert qx_arith("add", QuadExt(1, 0), QuadExt(0, 1)) == QuadExt(1, 1)
    assert qx_arith("mul", SQRT3, SQRT3) == QuadExt(3, 0)
    q = qx_arith("div", ONE, QuadExt(1, 1))
    assert q == QuadExt(Fraction(-1, 2), Fraction(1, 2))
    assert q * QuadExt(1, 1) == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        qx_arith("div", ONE, ZERO)


def test_lowest_terms():
    x = QuadExt(Fraction(2, 4), Fraction(-6, -9))
    assert x.a == Fraction(1, 2) and x.a.denominator == 2
    assert x.b == Fraction(2, 3) and x.b.denominator > 0


def test_sign_examples():
    assert qx_sign(QuadExt(2, -1)) == 1
    assert qx_sign(ZERO) == 0
    assert qx_sign(QuadExt(1, -1)) == -1


@given(quads, quads, quads)
def test_field_axioms(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    if u:
        assert u * u.inverse() == ONE
        assert (v / u) * u == v


@given(quads)
def test_equality_is_structural(u):
    same = QuadExt(u.a, u.b)
    assert same == u and hash(same) == hash(u)
    assert (u - same) == ZERO


@settings(max_examples=2000)
@given(quads)
def test_sign_agrees_with_float(u):
    f = float(u.a) + float(u.b) * 3 ** 0.5
    assume(abs(f) > 1e-6)
    assert qx_sign(u) == (1 if f > 0 else -1)


def test_sign_agrees_with_float_ten_thousand_samples():
    import random

    rng = random.Random(7)
    done = 0
    while done < 10_000:
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
        f = float(a) + float(b) * 3 ** 0.5
        if abs(f) <= 1e-6:
            continue
        assert qx_sign(QuadExt(a, b)) == (1 if f > 0 else -1)
        done += 1


def test_angular_examples():
    assert angular_compare(Vec2.of(1, 0), Vec2.of(0, 1)) == -1
    assert angular_compare(Vec2.of(1, 0), Vec2.of(2, 0)) == 0
    h = QuadExt(0, Fraction(1, 2))
    assert angular_compare(Vec2(QuadExt(Fraction(-1, 2)), h), Vec2(QuadExt(Fraction(-1, 2)), -h)) == -1
    with pytest.raises(ValueError):
        angular_compare(Vec2.of(0, 0), Vec2.of(1, 0))


def test_twelve_directions_sort_ccw():
    from functools import cmp_to_key

    dirs = [unit_direction(k) for k in (7, 3, 11, 0, 5, 9, 1, 6, 2, 10, 4, 8)]
    dirs.sort(key=cmp_to_key(angular_compare))
    assert dirs == [unit_direction(k) for k in range(12)]
    for k in range(12):
        assert unit_direction(k).norm2() == ONE


@given(st.lists(st.integers(0, 11), min_size=2, max_size=8, unique=True), st.integers(1, 5))
def test_angular_order_is_total_on_distinct_directions(ks, scale):
    vs = [unit_direction(k).scale(scale if k % 2 else 1) for k in ks]
    for a in vs:
        for b in vs:
            c = angular_compare(a, b)
            assert c == -angular_compare(b, a)
            if a is not b:
                assert c != 0
    for a in vs:
        for b in vs:
            for c in vs:
                if angular_compare(a, b) < 0 and angular_compare(b, c) < 0:
                    assert angular_compare(a, c) < 0


def test_isometry_examples():
    t = Vec2.of(3, 5)
    inv = Isometry(-1, Vec2.of(0, 0))
    assert compose(compose(inv, Isometry(1, t)), inv) == Isometry(1, -t)
    h = Isometry(1, t)
    assert compose(Isometry.identity(), h) == h
    assert apply(Isometry(-1, Vec2.of(1, 0)), Vec2.of(2, 3)) == Vec2.of(-1, -3)


isometries = st.builds(Isometry, st.sampled_from([1, -1]), vectors)


@given(isometries, isometries, isometries, vectors)
def test_group_laws(f, g, h, p):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(g, g.inverse()) == Isometry.identity()
    assert apply(compose(f, g), p) == apply(f, apply(g, p))


@settings(max_examples=100)
@given(vectors, st.sampled_from([1, -1]), vectors)
def test_conjugating_translation(kt, eps, t):
    k = Isometry.translation(kt)
    g = Isometry(eps, t)
    assert compose(compose(g, k), g.inverse()) == k.power(eps)
