from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from cuntz import sampling
from cuntz.algebra import chi, identity, isometry, adjoint
from cuntz.cocycles import (
    DepthFunction,
    RefinementB,
    UHFKind,
    analytic_membership,
    cocycle_eval,
    constancy_witness,
    constant_function,
    cylinder_values,
    eval_function,
    first_letter,
    function_from_cocycle,
    indicator_function,
    nococycle_counterexample,
    standard_obstruction,
    trivial_extension,
    uhf_cocycle_eval,
    unboundedness_witness,
)
from cuntz.errors import NotInUHFGroupoid
from cuntz.groupoid import Cylinder, compose, in_cylinder, inverse, make_element
from cuntz.words import Ordering, Point, constant_point, lex_compare, words_of_length
from oracles import letters

ONE = constant_point(1)


def direct_cocycle(F, g, horizon=60):
    """The defining series with every term written out, for k >= 0 only."""
    assert g.k >= 0
    xs, ys = letters(g.x, horizon + 20), letters(g.y, horizon + 20)

    def f_at(seq, j):
        # tables here have depth <= 3, so ten letters decide the value
        return F.evaluate(Point(tuple(seq[j : j + 10]), (1,)))

    total = sum((f_at(xs, j) for j in range(g.k)), Fraction(0))
    for j in range(g.k, horizon):
        total += f_at(xs, j) - f_at(ys, j - g.k)
    return total


def test_eval_function_examples():
    b = RefinementB(2)
    assert eval_function(b, ONE) == 0
    assert eval_function(b, constant_point(2)) == 1
    assert eval_function(b, Point((2,), (1,))) == Fraction(1, 2)
    assert eval_function(constant_function(3, Fraction(7, 2)), Point((1, 2), (3,))) == Fraction(7, 2)


def test_cocycle_examples(rng):
    c = constant_function(2, Fraction(5, 3))
    for _ in range(50):
        g = sampling.element(rng, 2)
        assert cocycle_eval(c, g) == Fraction(5, 3) * g.k
    x1 = first_letter(2)
    assert cocycle_eval(x1, make_element(ONE, 2, ONE)) == 2
    assert cocycle_eval(x1, make_element(Point((2,), (1,)), 0, ONE)) == 1


def test_cocycle_matches_series(rng):
    for _ in range(150):
        n = rng.choice([2, 3])
        F = sampling.depth_function(rng, n)
        g = sampling.element(rng, n)
        if g.k < 0:
            g = inverse(g)
        assert cocycle_eval(F, g) == direct_cocycle(F, g)


def test_cocycle_identity_and_inverse(rng):
    for _ in range(200):
        n = rng.choice([2, 3])
        F = sampling.depth_function(rng, n)
        g = sampling.element(rng, n)
        h = sampling.element_at(rng, g.y, n)
        assert cocycle_eval(F, g) + cocycle_eval(F, h) == cocycle_eval(F, compose(g, h))
        assert cocycle_eval(F, inverse(g)) == -cocycle_eval(F, g)


def test_linearity(rng):
    for _ in range(100):
        n = rng.choice([2, 3])
        F, G = sampling.depth_function(rng, n), sampling.depth_function(rng, n)
        a, b = Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3), 3)
        g = sampling.element(rng, n)
        combo = a * F + b * G
        assert cocycle_eval(combo, g) == a * cocycle_eval(F, g) + b * cocycle_eval(G, g)


def test_round_trip_examples(rng):
    assert function_from_cocycle(constant_function(2, 1)) == constant_function(2, 1)
    assert function_from_cocycle(first_letter(3)) == first_letter(3)
    for _ in range(20):
        F = sampling.depth_function(rng, 2, depth=2)
        assert function_from_cocycle(F) == F


def test_constancy_witness_examples():
    F = first_letter(2)
    g = make_element(Point((1,), (1,)), 0, Point((2,), (1,)))
    c = constancy_witness(F, g)
    assert c == Cylinder((1, 1), (2, 1))
    assert set(cylinder_values(F, c).values()) == {-1}
    one = constant_function(2, 1)
    h = make_element(ONE, 3, ONE)
    w = constancy_witness(one, h)
    assert in_cylinder(h, w)
    assert set(cylinder_values(one, w).values()) == {3}


def test_constancy_witness_local_constancy(rng):
    for _ in range(100):
        n = rng.choice([2, 3])
        F = sampling.depth_function(rng, n)
        g = sampling.element(rng, n)
        c = constancy_witness(F, g)
        assert in_cylinder(g, c)
        value = cocycle_eval(F, g)
        # every child two levels down, sampled at several continuations
        for delta in words_of_length(n, 2):
            child = c.extend(delta)
            for tail in (ONE, constant_point(n), Point((), (1, 2))):
                assert cocycle_eval(F, child.point(tail)) == value


def test_nococycle_examples():
    x, y = nococycle_counterexample(1, 2)
    assert (x, y) == (Point((2,), (1,)), Point((1, 2), (1,)))
    x, y = nococycle_counterexample(2, 2)
    assert (x, y) == (Point((2, 2, 1, 2), (1,)), Point((2, 1, 2, 2), (1,)))


@pytest.mark.parametrize("N,n", list(itertools.product([1, 2, 3], [2, 3])))
def test_nococycle_kills_basis(N, n):
    w = nococycle_counterexample(N, n)
    assert w.x != w.y and w.windows_x == w.windows_y
    g = make_element(w.x, 0, w.y)
    for word in words_of_length(n, N):
        assert cocycle_eval(indicator_function(n, word), g) == 0


def test_unboundedness():
    assert unboundedness_witness(constant_function(2, 1), 7) == 7
    F = DepthFunction(2, 1, {(1,): 0, (2,): 5})
    assert unboundedness_witness(F, 4) == 0
    assert unboundedness_witness(first_letter(2), 3) == 3


def test_uhf_examples():
    y = Point((2,), (1,))
    assert uhf_cocycle_eval(UHFKind.REFINEMENT, ONE, y, 2) == Fraction(-1, 2)
    for n in (2, 3):
        for N in range(1, 5):
            x = Point((2,) * N, (1,))
            assert uhf_cocycle_eval(UHFKind.STANDARD, x, ONE, n) == Fraction(n**N - 1, n - 1)
    assert uhf_cocycle_eval("standard", y, y, 2) == 0
    with pytest.raises(NotInUHFGroupoid):
        uhf_cocycle_eval(UHFKind.REFINEMENT, ONE, constant_point(2), 2)


def test_refinement_sign_tracks_lex_order(rng):
    # the literal refinement sum is b(x) - b(y), so it is >= 0 exactly when x >= y
    b = RefinementB(3)
    for _ in range(200):
        x, y = sampling.uhf_pair(rng, 3)
        value = uhf_cocycle_eval(UHFKind.REFINEMENT, x, y, 3)
        assert value == b(x) - b(y)
        assert (value >= 0) == (lex_compare(x, y) != Ordering.LT)
        assert (value <= 0) == (lex_compare(x, y) != Ordering.GT)


def test_standard_obstruction():
    assert standard_obstruction(1, 2) == 1
    assert standard_obstruction(4, 2) == 8
    assert standard_obstruction(3, 3) == 9


def test_trivial_extension_examples():
    b = DepthFunction(2, 1, {(1,): 0, (2,): Fraction(1, 2)})
    f, c = trivial_extension(b)
    assert c == Fraction(3, 2)
    for w in words_of_length(2, 2):
        assert f.table[w] == Fraction(w[1] - w[0], 2)
    f0, c0 = trivial_extension(constant_function(2, 4))
    assert set(f0.values()) == {0} and c0 == 1


def test_trivial_extension_cocycle(rng):
    for _ in range(5):
        n = rng.choice([2, 3])
        b = sampling.depth_function(rng, n, depth=rng.randint(0, 2))
        f, c = trivial_extension(b)
        for _ in range(60):
            x, y = sampling.uhf_pair(rng, n)
            assert cocycle_eval(f, make_element(x, 0, y)) == b(y) - b(x)
            g = sampling.element(rng, n)
            assert cocycle_eval(f, g) == b(g.y) - b(g.x)


def test_analytic_membership_examples(rng):
    one = constant_function(2, 1)
    assert analytic_membership(isometry((1,), 2), one)
    assert not analytic_membership(adjoint(isometry((1,), 2)), one)
    for _ in range(10):
        assert analytic_membership(identity(2), sampling.depth_function(rng, 2))
    with pytest.raises(ValueError):
        analytic_membership(identity(2), RefinementB(2))


def test_analytic_membership_matches_points(rng):
    for _ in range(60):
        n = 2
        F = sampling.depth_function(rng, n, depth=rng.randint(0, 2))
        shift = Fraction(rng.randint(-2, 2))
        c = sampling.cylinder(rng, n)
        a = chi(c.alpha, c.beta, n)
        expected = all(
            cocycle_eval(F, c.point(Point(delta, tail))) + shift * c.degree >= 0
            for delta in words_of_length(n, 3)
            for tail in ((1,), (2,), (1, 2))
        )
        assert analytic_membership(a, F, shift) == expected


def test_depth_function_file_format(rng):
    F = sampling.depth_function(rng, 3, depth=2)
    assert DepthFunction.from_dict(F.to_dict()) == F
    with pytest.raises(ValueError):
        DepthFunction.from_dict({"n": 2, "depth": 1, "table": [{"word": [1], "value": "1"}]})
