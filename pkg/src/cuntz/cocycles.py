"""Real cocycles on G_n and the functions on X that determine them.

A cocycle d is recovered from f(x) = d(x, 1, Sx) by

    d(x, k, y) = sum_{j<k} f(S^j x) + sum_{j>=k} [f(S^j x) - f(S^{j-k} y)]   (k >= 0)

and d(g^{-1}) = -d(g). For eventually periodic points the second sum is finite.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .algebra import AlgebraElement
from .errors import NotInUHFGroupoid
from .groupoid import Cylinder, GroupoidElement, inverse, make_element
from .words import Point, Word, check_word, constant_point, point_value, shift, words_of_length


class PointFunction:
    """A function X -> Q that can be evaluated exactly on eventually periodic points."""

    n: int

    @property
    def depth(self) -> Optional[int]:
        return None

    def evaluate(self, x: Point) -> Fraction:
        raise NotImplementedError

    def __call__(self, x: Point) -> Fraction:
        return self.evaluate(x)

    def __add__(self, other: "PointFunction") -> "PointFunction":
        return Combination(self.n, ((Fraction(1), self), (Fraction(1), other)))

    def __sub__(self, other: "PointFunction") -> "PointFunction":
        return Combination(self.n, ((Fraction(1), self), (Fraction(-1), other)))

    def __rmul__(self, c) -> "PointFunction":
        return Combination(self.n, ((Fraction(c), self),))

    def __neg__(self) -> "PointFunction":
        return (-1) * self


@dataclass(frozen=True, eq=False)
class DepthFunction(PointFunction):
    """f(x) = table[x_1 ... x_N]."""

    n: int
    N: int
    table: Mapping[Word, Fraction]

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("depth must be non-negative")
        table = {check_word(w, self.n): Fraction(v) for w, v in dict(self.table).items()}
        missing = [w for w in words_of_length(self.n, self.N) if w not in table]
        if missing or any(len(w) != self.N for w in table):
            raise ValueError(f"table must be total on words of length {self.N}")
        object.__setattr__(self, "table", table)

    @property
    def depth(self) -> int:
        return self.N

    def evaluate(self, x: Point) -> Fraction:
        return self.table[x.prefix(self.N)]

    def refine(self, depth: int) -> "DepthFunction":
        if depth < self.N:
            raise ValueError("cannot coarsen a table")
        return DepthFunction(
            self.n, depth, {w: self.table[w[: self.N]] for w in words_of_length(self.n, depth)}
        )

    def values(self) -> Iterable[Fraction]:
        return self.table.values()

    def __eq__(self, other):
        if not isinstance(other, DepthFunction) or other.n != self.n:
            return NotImplemented
        m = max(self.N, other.N)
        return self.refine(m).table == other.refine(m).table

    def __hash__(self):
        return hash((self.n, self.N))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "depth": self.N,
            "table": [
                {"word": list(w), "value": _frac(self.table[w])}
                for w in words_of_length(self.n, self.N)
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "DepthFunction":
        table = {tuple(e["word"]): Fraction(str(e["value"])) for e in data["table"]}
        return cls(int(data["n"]), int(data["depth"]), table)


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def constant_function(n: int, c) -> DepthFunction:
    return DepthFunction(n, 0, {(): Fraction(c)})


def first_letter(n: int) -> DepthFunction:
    """f(x) = x_1."""
    return DepthFunction(n, 1, {(i,): Fraction(i) for i in range(1, n + 1)})


def indicator_function(n: int, word: Sequence[int]) -> DepthFunction:
    word = tuple(word)
    return DepthFunction(
        n, len(word), {w: Fraction(int(w == word)) for w in words_of_length(n, len(word))}
    )


@dataclass(frozen=True, eq=False)
class RefinementB(PointFunction):
    """b(x) = sum (x_i - 1)/n^i, the n-adic value of x."""

    n: int

    def evaluate(self, x: Point) -> Fraction:
        return point_value(x, self.n)


@dataclass(frozen=True, eq=False)
class Combination(PointFunction):
    n: int
    parts: Tuple[Tuple[Fraction, PointFunction], ...]

    @property
    def depth(self) -> Optional[int]:
        depths = [f.depth for _, f in self.parts]
        if any(d is None for d in depths):
            return None
        return max(depths, default=0)

    def evaluate(self, x: Point) -> Fraction:
        return sum((c * f.evaluate(x) for c, f in self.parts), Fraction(0))


def eval_function(F: PointFunction, x: Point) -> Fraction:
    return F.evaluate(x)


# cocycle evaluation ----------------------------------------------------------------

def cocycle_eval(F: PointFunction, g: GroupoidElement) -> Fraction:
    if g.k < 0:
        return -cocycle_eval(F, inverse(g))
    k, p = g.k, g.tail_index
    total = sum((F.evaluate(shift(g.x, j)) for j in range(k)), Fraction(0))
    # S^j x and S^{j-k} y coincide once j >= p + k - 1
    for j in range(k, p + k - 1):
        total += F.evaluate(shift(g.x, j)) - F.evaluate(shift(g.y, j - k))
    return total


def function_from_cocycle(F: DepthFunction) -> DepthFunction:
    """Read f_d(x) = d(x, 1, Sx) back off the cocycle of F."""
    table = {}
    for w in words_of_length(F.n, F.N):
        x = Point(w, (1,))
        table[w] = cocycle_eval(F, make_element(x, 1, shift(x, 1)))
    return DepthFunction(F.n, F.N, table)


def _finite_depth(F: PointFunction) -> int:
    if F.depth is None:
        raise ValueError("a finite-depth function is required")
    return F.depth


def cylinder_values(F: PointFunction, c: Cylinder, extra: Optional[int] = None) -> Dict[Word, Fraction]:
    """Cocycle values on U_{a,b} at the points (a d 1.., k, b d 1..), |d| = extra."""
    if extra is None:
        extra = _finite_depth(F)
    return {
        delta: cocycle_eval(F, c.point(Point(delta, (1,))))
        for delta in words_of_length(F.n, extra)
    }


def constancy_witness(F: PointFunction, g: GroupoidElement) -> Cylinder:
    """A basic neighbourhood of g on which d_F is constant.

    On U_{a,b} the cocycle only reads the first N letters past the words, so
    checking every length-N continuation is exhaustive.
    """
    N = _finite_depth(F)
    bound = max(g.tail_index, abs(g.k)) + 1 + N + abs(g.k)
    for j in range(g.tail_index, bound + 1):
        c = g.presentation(j)
        if len(set(cylinder_values(F, c, N).values())) == 1:
            return c
    raise AssertionError(f"no constant neighbourhood found for {g}")


# counterexamples -----------------------------------------------------------------------

@dataclass(frozen=True)
class NoCocycleWitness:
    x: Point
    y: Point
    windows_x: Counter
    windows_y: Counter

    def __iter__(self):
        return iter((self.x, self.y))


def _windows(x: Point, N: int) -> Counter:
    return Counter(shift(x, i).prefix(N) for i in range(2 * N))


def nococycle_counterexample(N: int, n: int = 2) -> NoCocycleWitness:
    """x = a 2 1 a 1.., y = a 1 2 a 1.. with a = 2^{N-1}: no depth-N cocycle separates them."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    a = (2,) * (N - 1)
    x = Point(a + (2, 1) + a, (1,))
    y = Point(a + (1, 2) + a, (1,))
    make_element(x, 0, y)
    return NoCocycleWitness(x, y, _windows(x, N), _windows(y, N))


def unboundedness_witness(F: PointFunction, k: int) -> Fraction:
    """d_F(1.., k, 1..) = k F(1..)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    one = constant_point(1)
    return cocycle_eval(F, make_element(one, k, one))


# UHF cocycles -----------------------------------------------------------------------------

class UHFKind(enum.Enum):
    REFINEMENT = "refinement"
    STANDARD = "standard"


def uhf_cocycle_eval(kind: UHFKind, x: Point, y: Point, n: int) -> Fraction:
    m = max(len(x.pre), len(y.pre))
    if shift(x, m) != shift(y, m):
        raise NotInUHFGroupoid(f"({x}, 0, {y}) is not in the UHF groupoid")
    kind = UHFKind(kind)
    total = Fraction(0)
    for i in range(1, m + 1):
        diff = x.letter(i) - y.letter(i)
        if kind == UHFKind.REFINEMENT:
            total += Fraction(diff, n**i)
        else:
            total += diff * n ** (i - 1)
    return total


def standard_obstruction(N: int, n: int = 2) -> Fraction:
    """The value f(2^N 1..) forced on any extension of the standard cocycle."""
    if N < 1:
        raise ValueError("N must be at least 1")
    one = constant_point(1)
    x = Point((2,) * N, (1,))
    return uhf_cocycle_eval(UHFKind.STANDARD, x, one, n) - uhf_cocycle_eval(
        UHFKind.STANDARD, shift(x, 1), one, n
    )


# trivial cocycles and analytic sets --------------------------------------------------------

def trivial_extension(b: DepthFunction) -> Tuple[DepthFunction, Fraction]:
    """f = b o S - b, whose cocycle is b(y) - b(x), and a shift c making d_{f+c} > 0 when k > 0."""
    table = {
        w: b.table[w[1:]] - b.table[w[:-1]] for w in words_of_length(b.n, b.N + 1)
    }
    values = list(b.values())
    return DepthFunction(b.n, b.N + 1, table), max(values) - min(values) + 1


def analytic_membership(a: AlgebraElement, F: PointFunction, shift_by=0) -> bool:
    """Is d_F + shift * k nonnegative on the support of a?"""
    N = _finite_depth(F)
    c0 = Fraction(shift_by)
    for c in a.support():
        for value in cylinder_values(F, c, N).values():
            if value + c0 * c.degree < 0:
                return False
    return True
