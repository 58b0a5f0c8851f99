"""Finite words, eventually periodic points of X = {1..n}^N, and the interval model.

Words are plain tuples of ints.  Letters are 1-based, matching the usual
notation x = (x_1, x_2, ...); ``Point.letter(1)`` is the first letter.
"""
from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from .errors import EmptyPeriod, ExpressionSyntaxError, LetterOutOfRange

Word = Tuple[int, ...]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def check_word(word: Sequence[int], n: int) -> Word:
    if n < 2:
        raise ValueError(f"alphabet size must be at least 2, got {n}")
    for pos, letter in enumerate(word):
        if not 1 <= letter <= n:
            raise LetterOutOfRange(letter, n, pos)
    return tuple(word)


def is_prefix(u: Sequence[int], w: Sequence[int]) -> bool:
    return len(u) <= len(w) and tuple(w[: len(u)]) == tuple(u)


def words_of_length(n: int, length: int) -> Iterator[Word]:
    """All words of the given length, in lexicographic order."""
    return itertools.product(range(1, n + 1), repeat=length)


def primitive_root(word: Word) -> Word:
    size = len(word)
    for d in range(1, size + 1):
        if size % d == 0 and word[:d] * (size // d) == word:
            return word[:d]
    return word


def _canonicalize(pre: Word, per: Word) -> Tuple[Word, Word]:
    if not per:
        raise EmptyPeriod("period of a point must be nonempty")
    per = primitive_root(per)
    # Absorb trailing preperiod letters into a rotated period.
    while pre and pre[-1] == per[-1]:
        per = per[-1:] + per[:-1]
        pre = pre[:-1]
    return pre, per


@dataclass(frozen=True)
class Point:
    """The eventually periodic sequence pre . per . per . ...

    Always stored in canonical form (primitive period, shortest preperiod),
    so dataclass equality is equality of sequences.
    """

    pre: Word
    per: Word

    def __post_init__(self):
        pre, per = _canonicalize(tuple(self.pre), tuple(self.per))
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def letter(self, i: int) -> int:
        if i < 1:
            raise IndexError("letters are indexed from 1")
        if i <= len(self.pre):
            return self.pre[i - 1]
        return self.per[(i - len(self.pre) - 1) % len(self.per)]

    def prefix(self, m: int) -> Word:
        return tuple(self.letter(i) for i in range(1, m + 1))

    def shift(self, j: int = 1) -> "Point":
        return shift(self, j)

    def is_constant_tail(self, letter: int) -> bool:
        return self.per == (letter,)

    def __str__(self) -> str:
        return format_point(self)


def canonical_point(pre: Sequence[int], per: Sequence[int]) -> Point:
    return Point(tuple(pre), tuple(per))


def constant_point(letter: int) -> Point:
    return Point((), (letter,))


def shift(x: Point, j: int) -> Point:
    """S^j x: drop the first j letters."""
    if j < 0:
        raise ValueError("shift count must be non-negative")
    if j <= len(x.pre):
        return Point(x.pre[j:], x.per)
    r = (j - len(x.pre)) % len(x.per)
    return Point((), x.per[r:] + x.per[:r])


def prepend(alpha: Sequence[int], x: Point) -> Point:
    return Point(tuple(alpha) + x.pre, x.per)


def comparison_bound(x: Point, y: Point) -> int:
    """Past this many letters, agreement on the prefix means x == y."""
    return len(x.pre) + len(y.pre) + 2 * math.lcm(len(x.per), len(y.per))


def first_difference(x: Point, y: Point) -> Optional[int]:
    """Index of the first differing letter, or None when x == y."""
    if x == y:
        return None
    for i in range(1, comparison_bound(x, y) + 1):
        if x.letter(i) != y.letter(i):
            return i
    raise AssertionError("distinct points agree beyond the periodic bound")


def lex_compare(x: Point, y: Point) -> Ordering:
    i = first_difference(x, y)
    if i is None:
        return Ordering.EQ
    return Ordering.LT if x.letter(i) < y.letter(i) else Ordering.GT


def last_difference(x: Point, y: Point) -> Optional[int]:
    """Index of the last differing letter of two points with equal tails.

    Returns None when x == y; raises ValueError when the tails never agree.
    """
    if x == y:
        return None
    m = max(len(x.pre), len(y.pre))
    if shift(x, m) != shift(y, m):
        raise ValueError("points do not agree eventually")
    last = None
    for i in range(1, m + 1):
        if x.letter(i) != y.letter(i):
            last = i
    return last


@dataclass(frozen=True)
class IntervalQ:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not 0 <= self.lo < self.hi <= 1:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


def word_interval(alpha: Sequence[int], n: int) -> IntervalQ:
    """Range interval of S_alpha in the L^2[0,1] model."""
    lo = Fraction(0)
    scale = Fraction(1)
    for letter in alpha:
        scale /= n
        lo += (letter - 1) * scale
    return IntervalQ(lo, lo + scale)


def point_value(x: Point, n: int) -> Fraction:
    """The n-adic expansion sum (x_i - 1) / n^i, computed exactly."""
    head = word_interval(x.pre, n).lo
    size = len(x.per)
    digits = sum((c - 1) * n ** (size - i - 1) for i, c in enumerate(x.per))
    tail = Fraction(digits, n**size - 1)
    return head + tail / Fraction(n) ** len(x.pre)


def format_word(word: Sequence[int]) -> str:
    return "[" + ",".join(str(c) for c in word) + "]"


def format_point(x: Point) -> str:
    return f"{format_word(x.pre)}:{format_word(x.per)}"


_WORD_RE = re.compile(r"\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*")


def parse_word(text: str, n: Optional[int] = None) -> Word:
    m = _WORD_RE.fullmatch(text)
    if not m:
        raise ExpressionSyntaxError(f"malformed word {text!r}", text, 0)
    body = m.group(1).strip()
    word = tuple(int(tok) for tok in body.split(",")) if body else ()
    return check_word(word, n) if n is not None else word


def parse_point(text: str, n: Optional[int] = None) -> Point:
    pre, sep, per = text.partition(":")
    if not sep:
        raise ExpressionSyntaxError(f"point {text!r} needs the form pre:per", text, 0)
    return Point(parse_word(pre, n), parse_word(per, n))
