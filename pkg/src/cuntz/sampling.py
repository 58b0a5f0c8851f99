"""Seeded random objects for fuzzing: words, points, groupoid elements, elements."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import AlgebraElement
from .cocycles import DepthFunction
from .groupoid import Cylinder, GroupoidElement, make_element
from .scalars import ComplexQ
from .volterra import cylinder_in_pv, cylinder_in_r
from .words import Point, Word, prepend, words_of_length


def word(rng: random.Random, n: int, max_len: int = 4, min_len: int = 0) -> Word:
    return tuple(rng.randint(1, n) for _ in range(rng.randint(min_len, max_len)))


def point(rng: random.Random, n: int, max_pre: int = 4, max_per: int = 3) -> Point:
    # bias toward the constant tails, which carry most of the structure
    roll = rng.random()
    if roll < 0.25:
        per: Word = (1,)
    elif roll < 0.4:
        per = (n,)
    else:
        per = word(rng, n, max_per, 1)
    return Point(word(rng, n, max_pre), per)


def element(rng: random.Random, n: int, max_len: int = 4, max_per: int = 3) -> GroupoidElement:
    """A random (a g, |a|-|b|, b g)."""
    gamma = point(rng, n, 2, max_per)
    a, b = word(rng, n, max_len), word(rng, n, max_len)
    return make_element(prepend(a, gamma), len(a) - len(b), prepend(b, gamma))


def element_at(rng: random.Random, x: Point, n: int, max_len: int = 4) -> GroupoidElement:
    """A random element whose range unit is x."""
    i = rng.randint(0, max_len)
    tail = x.shift(i)
    b = word(rng, n, max_len)
    return make_element(x, i - len(b), prepend(b, tail))


def uhf_pair(rng: random.Random, n: int, max_len: int = 4) -> Tuple[Point, Point]:
    gamma = point(rng, n, 2)
    m = rng.randint(0, max_len)
    return prepend(word(rng, n, m, m), gamma), prepend(word(rng, n, m, m), gamma)


def cylinder(rng: random.Random, n: int, max_len: int = 3) -> Cylinder:
    return Cylinder(word(rng, n, max_len), word(rng, n, max_len))


def scalar(rng: random.Random, complex_ok: bool = True) -> ComplexQ:
    re = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    im = Fraction(rng.randint(-2, 2), rng.randint(1, 2)) if complex_ok and rng.random() < 0.3 else 0
    if not re and not im:
        re = Fraction(1)
    return ComplexQ(re, im)


def algebra_element(
    rng: random.Random, n: int, terms: int = 3, max_len: int = 3, complex_ok: bool = True
) -> AlgebraElement:
    return AlgebraElement(
        n,
        [(cylinder(rng, n, max_len), scalar(rng, complex_ok)) for _ in range(rng.randint(1, terms))],
    )


def _cylinder_where(rng, n, max_len, test) -> Cylinder:
    while True:
        c = cylinder(rng, n, max_len)
        if test(c):
            return c


def pv_cylinder(rng: random.Random, n: int, max_len: int = 3) -> Cylinder:
    return _cylinder_where(rng, n, max_len, lambda c: cylinder_in_pv(c, n))


def r_cylinder(rng: random.Random, n: int, max_len: int = 3) -> Cylinder:
    return _cylinder_where(rng, n, max_len, lambda c: cylinder_in_r(c) and len(c.alpha) > 0)


def volterra_element(rng: random.Random, n: int, terms: int = 3, max_len: int = 3) -> AlgebraElement:
    return AlgebraElement(
        n, [(pv_cylinder(rng, n, max_len), scalar(rng)) for _ in range(rng.randint(1, terms))]
    )


def depth_function(
    rng: random.Random, n: int, depth: Optional[int] = None, values: Optional[List[Fraction]] = None
) -> DepthFunction:
    if depth is None:
        depth = rng.randint(0, 3)
    pool = values or [Fraction(v, d) for v in range(-3, 4) for d in (1, 2, 3)]
    return DepthFunction(n, depth, {w: rng.choice(pool) for w in words_of_length(n, depth)})
