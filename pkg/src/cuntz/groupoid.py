"""The Cuntz groupoid G_n: triples (x, k, y) with x_{j+k} = y_j eventually."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .errors import ExpressionSyntaxError, NotComposable, NotInGroupoid
from .words import (
    Point,
    Word,
    constant_point,
    format_point,
    format_word,
    is_prefix,
    parse_point,
    parse_word,
    prepend,
    shift,
    words_of_length,
)


@dataclass(frozen=True)
class Cylinder:
    """The compact open set U_{alpha,beta} = {(alpha g, |alpha|-|beta|, beta g)}."""

    alpha: Word
    beta: Word

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))

    @property
    def degree(self) -> int:
        return len(self.alpha) - len(self.beta)

    @property
    def max_length(self) -> int:
        return max(len(self.alpha), len(self.beta))

    def extend(self, delta: Sequence[int]) -> "Cylinder":
        return Cylinder(self.alpha + tuple(delta), self.beta + tuple(delta))

    def swap(self) -> "Cylinder":
        return Cylinder(self.beta, self.alpha)

    def point(self, gamma: Point) -> "GroupoidElement":
        """The element (alpha gamma, k, beta gamma) of this cylinder."""
        return make_element(prepend(self.alpha, gamma), self.degree, prepend(self.beta, gamma))

    def __str__(self) -> str:
        return f"U[{format_word(self.alpha)}|{format_word(self.beta)}]"


@dataclass(frozen=True)
class GroupoidElement:
    x: Point
    k: int
    y: Point
    # smallest p >= max(1, 1 - k) with x_{j+k} = y_j for every j >= p
    tail_index: int = field(compare=False)

    @property
    def range_unit(self) -> "GroupoidElement":
        return make_element(self.x, 0, self.x)

    @property
    def domain_unit(self) -> "GroupoidElement":
        return make_element(self.y, 0, self.y)

    def presentation(self, j: Optional[int] = None) -> Cylinder:
        """The basic neighbourhood U_{alpha^j, beta^j}, alpha^j = x_1..x_{j+k}, beta^j = y_1..y_j."""
        if j is None:
            j = self.tail_index
        if j < self.tail_index:
            raise ValueError(f"presentation level {j} below tail index {self.tail_index}")
        return Cylinder(self.x.prefix(j + self.k), self.y.prefix(j))

    def __mul__(self, other: "GroupoidElement") -> "GroupoidElement":
        return compose(self, other)

    def __str__(self) -> str:
        return f"({format_point(self.x)}, {self.k}, {format_point(self.y)})"


def _tail_index(x: Point, k: int, y: Point) -> Optional[int]:
    p0 = max(1, 1 - k)
    u = shift(x, p0 + k - 1)
    v = shift(y, p0 - 1)
    m = max(len(u.pre), len(v.pre))
    if shift(u, m) != shift(v, m):
        return None
    last = 0
    for i in range(1, m + 1):
        if u.letter(i) != v.letter(i):
            last = i
    return p0 + last


def make_element(x: Point, k: int, y: Point) -> GroupoidElement:
    p = _tail_index(x, k, y)
    if p is None:
        raise NotInGroupoid(f"({format_point(x)}, {k}, {format_point(y)}) is not in G_n")
    return GroupoidElement(x, k, y, p)


def compose(g: GroupoidElement, h: GroupoidElement) -> GroupoidElement:
    """(x,k,y)(y,j,z) = (x,k+j,z)."""
    if g.y != h.x:
        raise NotComposable(f"{g} and {h} are not composable")
    return make_element(g.x, g.k + h.k, h.y)


def inverse(g: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(g.y, -g.k, g.x, g.tail_index + g.k)


def unit(x: Point) -> GroupoidElement:
    return GroupoidElement(x, 0, x, 1)


def in_cylinder(g: GroupoidElement, c: Cylinder) -> bool:
    return (
        g.k == c.degree
        and is_prefix(c.alpha, g.x.prefix(len(c.alpha)))
        and is_prefix(c.beta, g.y.prefix(len(c.beta)))
        and shift(g.x, len(c.alpha)) == shift(g.y, len(c.beta))
    )


def refine_cylinder(c: Cylinder, m: int, n: int) -> List[Cylinder]:
    """The n^m disjoint children (alpha delta, beta delta), |delta| = m."""
    if m < 0:
        raise ValueError("refinement depth must be non-negative")
    return [c.extend(delta) for delta in words_of_length(n, m)]


def cylinder_sample(c: Cylinder, n: int) -> List[GroupoidElement]:
    """A few points of U_{alpha,beta}, one per tail constant and per first letter."""
    out = []
    for i in range(1, n + 1):
        out.append(c.point(constant_point(i)))
        out.append(c.point(Point((i,), (1, n))))
    return out


_CYL_RE = re.compile(r"\s*U\s*\[\s*(\[[^\]]*\])\s*\|\s*(\[[^\]]*\])\s*\]\s*")


def parse_cylinder(text: str, n: Optional[int] = None) -> Cylinder:
    m = _CYL_RE.fullmatch(text)
    if not m:
        raise ExpressionSyntaxError(f"malformed cylinder {text!r}", text, 0)
    return Cylinder(parse_word(m.group(1), n), parse_word(m.group(2), n))


def parse_groupoid_element(text: str, n: Optional[int] = None) -> GroupoidElement:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ExpressionSyntaxError(f"groupoid element {text!r} needs parentheses", text, 0)
    parts = _split_top_level(body[1:-1])
    if len(parts) != 3:
        raise ExpressionSyntaxError(f"groupoid element {text!r} needs three fields", text, 0)
    try:
        k = int(parts[1])
    except ValueError:
        raise ExpressionSyntaxError(f"bad degree {parts[1]!r}", text, 0) from None
    return make_element(parse_point(parts[0], n), k, parse_point(parts[2], n))


def _split_top_level(text: str) -> List[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    parts.append(text[start:].strip())
    return parts
