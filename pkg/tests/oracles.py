"""Brute-force reference computations used to check the library.

Nothing here calls the code under test for the quantity being checked: the
convolution oracle never touches word_product, sequences are compared letter
by letter, and values are summed term by term.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List

from cuntz.algebra import AlgebraElement, evaluate
from cuntz.errors import NotInGroupoid
from cuntz.groupoid import GroupoidElement, make_element
from cuntz.scalars import ZERO, ComplexQ
from cuntz.words import Point

DEPTH = 80


def letters(x: Point, m: int = DEPTH) -> List[int]:
    out = list(x.pre)
    while len(out) < m:
        out.extend(x.per)
    return out[:m]


def raw_letters(pre, per, m: int = DEPTH) -> List[int]:
    out = list(pre)
    while len(out) < m:
        out.extend(per)
    return out[:m]


def lex_oracle(x: Point, y: Point) -> int:
    a, b = letters(x), letters(y)
    return (a > b) - (a < b)


def tail_relation_holds(g: GroupoidElement, start: int) -> bool:
    a, b = letters(g.x, DEPTH + 20), letters(g.y, DEPTH + 20)
    return all(a[j + g.k - 1] == b[j - 1] for j in range(max(start, 1 - g.k, 1), DEPTH))


def value_bounds(x: Point, n: int, m: int = 60):
    """b(x) lies in [s, s + n^-m] where s is the m-letter partial sum."""
    s = sum(Fraction(c - 1, n ** (i + 1)) for i, c in enumerate(letters(x, m)))
    return s, s + Fraction(1, n**m)


def _triple(x: Point, k: int, y: Point):
    try:
        return make_element(x, k, y)
    except NotInGroupoid:
        return None


def convolution_oracle(a: AlgebraElement, b: AlgebraElement, g: GroupoidElement) -> ComplexQ:
    """(a*b)(x,k,y) = sum over z of a(x,j,z) b(z,k-j,y).

    a is nonzero at (x, j, z) only inside one of its cylinders (al, be), and
    there z = be followed by x shifted past al. That leaves finitely many z.
    """
    mids = set()
    for c, _ in a.items():
        if letters(g.x, len(c.alpha)) == list(c.alpha):
            z = _prepend_shifted(c.beta, g.x, len(c.alpha))
            mids.add((c.degree, z))
    total = ZERO
    for j, z in mids:
        left = _triple(g.x, j, z)
        right = _triple(z, g.k - j, g.y)
        if left is None or right is None:
            continue
        total = total + evaluate(a, left) * evaluate(b, right)
    return total


def _prepend_shifted(beta, x: Point, m: int) -> Point:
    # beta followed by x_{m+1} x_{m+2} ..., built without calling shift()
    tail_pre = list(x.pre[m:])
    skip = max(0, m - len(x.pre))
    per = x.per[skip % len(x.per):] + x.per[: skip % len(x.per)]
    return Point(tuple(beta) + tuple(tail_pre), per)
