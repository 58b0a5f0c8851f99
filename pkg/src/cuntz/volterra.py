"""The Volterra spectrum P_V = R u D0 u S_e u S_c and the algebra A(P_V)."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .algebra import (
    AlgebraElement,
    adjoint,
    chi,
    commutator,
    evaluate,
    identity,
    mul,
)
from .errors import CharacterizationMismatch, NotInAlgebra, NotInIntersection, NotInR
from .groupoid import Cylinder, GroupoidElement, inverse, make_element, unit
from .scalars import ZERO, ComplexQ
from .words import (
    Ordering,
    Point,
    Word,
    check_word,
    first_difference,
    is_prefix,
    lex_compare,
    words_of_length,
)


class Verdict(enum.Enum):
    IN_R = "IN_R"
    IN_D0 = "IN_D0"
    IN_SE = "IN_SE"
    IN_SC = "IN_SC"
    NOT_IN_PV = "NOT_IN_PV"


@dataclass(frozen=True)
class PVClassification:
    verdict: Verdict
    condition: Optional[int] = None


def pv_condition(alpha: Sequence[int], beta: Sequence[int], n: int) -> Optional[int]:
    """The first of the five word conditions met by (alpha, beta), if any."""
    a, b = tuple(alpha), tuple(beta)
    la, lb = len(a), len(b)
    if la == lb:
        return 1 if a <= b else None
    if la < lb:
        head = b[:la]
        if a < head:
            return 2
        if a == head and all(letter == n for letter in b[la:]):
            return 3
        return None
    head = a[:lb]
    if head < b:
        return 4
    if head == b and all(letter == 1 for letter in a[lb:]):
        return 5
    return None


def cylinder_in_pv(c: Cylinder, n: int) -> bool:
    return pv_condition(c.alpha, c.beta, n) is not None


def cylinder_in_r(c: Cylinder) -> bool:
    a, b = c.alpha, c.beta
    if is_prefix(a, b) or is_prefix(b, a):
        return False
    i = next(i for i in range(min(len(a), len(b))) if a[i] != b[i])
    return a[i] < b[i]


def point_verdict(g: GroupoidElement, n: int) -> Verdict:
    order = lex_compare(g.x, g.y)
    if order == Ordering.LT:
        return Verdict.IN_R
    if order == Ordering.EQ:
        if g.k == 0:
            return Verdict.IN_D0
        if g.k < 0 and g.x.per == (n,):
            return Verdict.IN_SE
        if g.k > 0 and g.x.per == (1,):
            return Verdict.IN_SC
    return Verdict.NOT_IN_PV


def long_presentation(g: GroupoidElement) -> Cylinder:
    # the first difference must sit strictly inside both words
    fd = first_difference(g.x, g.y) or 0
    return g.presentation(max(g.tail_index, fd) + abs(g.k) + 1)


def classify_pv(g: GroupoidElement, n: int) -> PVClassification:
    verdict = point_verdict(g, n)
    c = long_presentation(g)
    condition = pv_condition(c.alpha, c.beta, n)
    if (condition is None) != (verdict == Verdict.NOT_IN_PV):
        raise CharacterizationMismatch(
            f"{g}: point test gives {verdict.value}, word conditions give {condition} on {c}"
        )
    return PVClassification(verdict, condition)


# nest projections and membership -------------------------------------------------

def projection_px(w: Sequence[int], n: int) -> AlgebraElement:
    """Sum of chi_{a,a} over words a of length |w| with a <= w."""
    w = check_word(w, n)
    if not w:
        raise ValueError("cut word must be nonempty")
    return AlgebraElement(n, [(Cylinder(a, a), 1) for a in words_of_length(n, len(w)) if a <= w])


def volterra_membership(a: AlgebraElement) -> bool:
    return all(cylinder_in_pv(c, a.n) for c in a.support())


def radical_membership(a: AlgebraElement) -> bool:
    return all(cylinder_in_r(c) for c in a.support())


def nest_invariance_check(a: AlgebraElement, w: Sequence[int]) -> bool:
    p = projection_px(w, a.n)
    return mul(mul(identity(a.n) - p, a), p).is_zero()


def triangularity_check(a: AlgebraElement) -> bool:
    if not (volterra_membership(a) and volterra_membership(adjoint(a))):
        raise NotInIntersection("element and its adjoint are not both in A(P_V)")
    return all(c.alpha == c.beta for c in a.support())


def commutator_ideal_check(a: AlgebraElement, b: AlgebraElement) -> bool:
    if not (volterra_membership(a) and volterra_membership(b)):
        raise NotInAlgebra("both arguments must lie in A(P_V)")
    return radical_membership(commutator(a, b))


def _predecessor(word: Word, n: int) -> Word:
    out = list(word)
    i = len(out) - 1
    while i >= 0 and out[i] == 1:
        out[i] = n
        i -= 1
    if i < 0:
        raise ValueError("the all-ones word has no predecessor")
    out[i] -= 1
    return tuple(out)


def radical_generator_form(c: Cylinder, n: int) -> Tuple[Word, Word]:
    """Cuts w_low, w_high with chi_c = p_low chi_c (I - p_high)."""
    if not cylinder_in_r(c):
        raise NotInR(f"{c} is not contained in R")
    w_low, w_high = c.alpha, _predecessor(c.beta, n)
    x = chi(c.alpha, c.beta, n)
    lhs = mul(mul(projection_px(w_low, n), x), identity(n) - projection_px(w_high, n))
    if lhs != x:
        raise AssertionError(f"nest factorization failed for {c}")
    return w_low, w_high


# the homomorphism Phi --------------------------------------------------------

class PointClass(enum.Enum):
    GENERIC = "GENERIC"
    TAIL_ONE = "TAIL_ONE"
    TAIL_N = "TAIL_N"


def point_class(x: Point, n: int) -> PointClass:
    if x.per == (1,):
        return PointClass.TAIL_ONE
    if x.per == (n,):
        return PointClass.TAIL_N
    return PointClass.GENERIC


@dataclass(frozen=True)
class PhiValue:
    point_class: PointClass
    poly: Tuple[Tuple[int, ComplexQ], ...]

    @staticmethod
    def build(cls: PointClass, coeffs: Dict[int, ComplexQ]) -> "PhiValue":
        return PhiValue(cls, tuple(sorted((k, v) for k, v in coeffs.items() if v)))

    def coefficient(self, k: int) -> ComplexQ:
        return dict(self.poly).get(k, ZERO)

    def is_zero(self) -> bool:
        return not self.poly

    def __mul__(self, other: "PhiValue") -> "PhiValue":
        if self.point_class != other.point_class:
            raise ValueError("values at different point classes")
        out: Dict[int, ComplexQ] = {}
        for i, u in self.poly:
            for j, v in other.poly:
                out[i + j] = out.get(i + j, ZERO) + u * v
        return PhiValue.build(self.point_class, out)

    def to_dict(self) -> dict:
        return {
            "class": self.point_class.value,
            "poly": [{"k": k, "re": _frac(v.re), "im": _frac(v.im)} for k, v in self.poly],
        }

    def __str__(self) -> str:
        if not self.poly:
            return f"{self.point_class.value}: 0"
        pieces = []
        for k, v in self.poly:
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            coef = str(v) if v.im == 0 else f"({v})"
            if mono and coef == "1":
                pieces.append(mono)
            else:
                pieces.append(coef + (f" {mono}" if mono else ""))
        return f"{self.point_class.value}: " + " + ".join(pieces)


def _frac(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def phi_eval(a: AlgebraElement, x: Point) -> PhiValue:
    if not volterra_membership(a):
        raise NotInAlgebra("phi is defined on A(P_V) only")
    cls = point_class(x, a.n)
    if cls == PointClass.GENERIC:
        return PhiValue.build(cls, {0: evaluate(a, unit(x))})
    top = max((abs(k) for k in a.degrees()), default=0)
    sign = 1 if cls == PointClass.TAIL_ONE else -1
    coeffs = {k: evaluate(a, make_element(x, sign * k, x)) for k in range(top + 1)}
    return PhiValue.build(cls, coeffs)


# witnesses ---------------------------------------------------------------------

def dirichlet_gap_witness(n: int = 2) -> GroupoidElement:
    """An element outside P_V whose inverse is also outside P_V."""
    x = Point((), (1, 2))
    g = make_element(x, 2, x)
    for h in (g, inverse(g)):
        if classify_pv(h, n).verdict != Verdict.NOT_IN_PV:
            raise AssertionError(f"{h} unexpectedly lies in P_V")
    return g


def pv_nonclosed_witness(p: int, n: int = 2) -> Tuple[GroupoidElement, GroupoidElement]:
    """g_p in P_V converging to a limit outside P_V u P_V^{-1}."""
    if p < 1:
        raise ValueError("p must be at least 1")
    delta = (2, 1)
    g = make_element(Point(delta * p, (1,)), -2, Point(delta * (p + 1), (1,)))
    limit = make_element(Point((), delta), -2, Point((), delta))
    if classify_pv(g, n).verdict == Verdict.NOT_IN_PV:
        raise AssertionError(f"{g} should lie in P_V")
    for h in (limit, inverse(limit)):
        if classify_pv(h, n).verdict != Verdict.NOT_IN_PV:
            raise AssertionError(f"{h} should lie outside P_V")
    return g, limit
