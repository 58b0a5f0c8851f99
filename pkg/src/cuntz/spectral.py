"""Spectra of bimodules over the diagonal masa and named open subsets of G_n."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    AlgebraElement,
    chi,
    fourier_components,
    normalize_cylinder_map,
    split_root,
)
from .errors import DepthTooSmall, ExpressionSyntaxError
from .groupoid import Cylinder, GroupoidElement, in_cylinder, parse_cylinder
from .linalg import EchelonBasis
from .scalars import ComplexQ
from .words import Ordering, last_difference, lex_compare, words_of_length
from . import volterra

NAMED = (
    "D0",
    "P_UHF",
    "P_PLUS",
    "Q_REF",
    "Q_ST",
    "QREF_PLUS",
    "QST_PLUS",
    "P_V",
    "R",
    "S_E",
    "S_C",
)


@dataclass(frozen=True)
class SpectralSet:
    """Union of finitely many cylinders and named open sets."""

    n: int
    cylinders: Tuple[Cylinder, ...] = ()
    named: FrozenSet[str] = frozenset()

    def __post_init__(self):
        bad = set(self.named) - set(NAMED)
        if bad:
            raise ValueError(f"unknown named sets: {sorted(bad)}")
        canon = normalize_cylinder_map(
            self.n, ((c, True) for c in self.cylinders), lambda a, b: a or b, False
        )
        object.__setattr__(self, "cylinders", tuple(c for c, _ in canon))
        object.__setattr__(self, "named", frozenset(self.named))

    def is_empty(self) -> bool:
        return not self.cylinders and not self.named

    def __str__(self) -> str:
        parts = [name for name in NAMED if name in self.named]
        parts += [str(c) for c in self.cylinders]
        return " + ".join(parts) if parts else "EMPTY"


def parse_spectral_set(text: str, n: int) -> SpectralSet:
    body = text.strip()
    if body == "EMPTY":
        return SpectralSet(n)
    named, cyls = set(), []
    for piece in body.split("+"):
        piece = piece.strip()
        if piece in NAMED:
            named.add(piece)
        elif piece.startswith("U"):
            cyls.append(parse_cylinder(piece, n))
        else:
            raise ExpressionSyntaxError(f"unknown set component {piece!r}", text, text.find(piece))
    return SpectralSet(n, tuple(cyls), frozenset(named))


# point membership ----------------------------------------------------------

def _q_st(x, y) -> bool:
    i = last_difference(x, y)
    return i is None or x.letter(i) < y.letter(i)


def point_in_named(name: str, g: GroupoidElement, n: int) -> bool:
    k = g.k
    if name == "D0":
        return k == 0 and g.x == g.y
    if name == "P_UHF":
        return k == 0
    if name == "P_PLUS":
        return k >= 0
    if name == "Q_REF":
        return k == 0 and lex_compare(g.x, g.y) != Ordering.GT
    if name == "Q_ST":
        return k == 0 and _q_st(g.x, g.y)
    if name == "QREF_PLUS":
        return k > 0 or point_in_named("Q_REF", g, n)
    if name == "QST_PLUS":
        return k > 0 or point_in_named("Q_ST", g, n)
    if name == "P_V":
        return volterra.point_verdict(g, n) != volterra.Verdict.NOT_IN_PV
    if name == "R":
        return lex_compare(g.x, g.y) == Ordering.LT
    if name == "S_E":
        return g.x == g.y and k < 0 and g.x.per == (n,)
    if name == "S_C":
        return g.x == g.y and k > 0 and g.x.per == (1,)
    raise ValueError(f"unknown named set {name!r}")


def point_in(s: SpectralSet, g: GroupoidElement) -> bool:
    return any(in_cylinder(g, c) for c in s.cylinders) or any(
        point_in_named(name, g, s.n) for name in s.named
    )


# cylinder containment --------------------------------------------------------

def _lex_le(a: Sequence[int], b: Sequence[int]) -> bool:
    return tuple(a) <= tuple(b)


def _rev_le(a: Sequence[int], b: Sequence[int]) -> bool:
    return tuple(reversed(a)) <= tuple(reversed(b))


def cylinder_in_named(c: Cylinder, name: str, n: int) -> bool:
    """Exact test for U_{a,b} contained in a named set."""
    la, lb = len(c.alpha), len(c.beta)
    if name == "D0":
        return c.alpha == c.beta
    if name == "P_UHF":
        return la == lb
    if name == "P_PLUS":
        return la >= lb
    if name == "Q_REF":
        return la == lb and _lex_le(c.alpha, c.beta)
    if name == "Q_ST":
        return la == lb and _rev_le(c.alpha, c.beta)
    if name == "QREF_PLUS":
        return la > lb or cylinder_in_named(c, "Q_REF", n)
    if name == "QST_PLUS":
        return la > lb or cylinder_in_named(c, "Q_ST", n)
    if name == "P_V":
        return volterra.cylinder_in_pv(c, n)
    if name == "R":
        return volterra.cylinder_in_r(c)
    if name in ("S_E", "S_C"):
        # countable sets contain no open cylinder
        return False
    raise ValueError(f"unknown named set {name!r}")


def cylinder_in_cylinder(c: Cylinder, d: Cylinder) -> bool:
    m = len(c.alpha) - len(d.alpha)
    if m < 0 or m != len(c.beta) - len(d.beta):
        return False
    return (
        c.alpha[: len(d.alpha)] == d.alpha
        and c.beta[: len(d.beta)] == d.beta
        and c.alpha[len(d.alpha) :] == c.beta[len(d.beta) :]
    )


def _component_contains(c: Cylinder, s: SpectralSet) -> bool:
    return any(cylinder_in_cylinder(c, d) for d in s.cylinders) or any(
        cylinder_in_named(c, name, s.n) for name in s.named
    )


def _covered(c: Cylinder, s: SpectralSet, budget: int) -> bool:
    if _component_contains(c, s):
        return True
    if budget <= 0:
        return False
    return all(_covered(c.extend((i,)), s, budget - 1) for i in range(1, s.n + 1))


def cylinder_in_set(c: Cylinder, s: SpectralSet) -> bool:
    # refining past every listed cylinder makes the cylinder part exact
    budget = 0
    for d in s.cylinders:
        if d.degree == c.degree:
            budget = max(budget, len(d.alpha) - len(c.alpha), len(d.beta) - len(c.beta))
    if s.named:
        budget += 3
    return _covered(c, s, budget)


def supported_in(a: AlgebraElement, s: SpectralSet) -> bool:
    return all(cylinder_in_set(c, s) for c in a.support())


def sigma(generators: Iterable[AlgebraElement], n: Optional[int] = None) -> SpectralSet:
    gens = list(generators)
    if n is None:
        if not gens:
            raise ValueError("alphabet size needed for an empty generator list")
        n = gens[0].n
    return SpectralSet(n, tuple(c for a in gens for c in a.support()))


def indicator_generators(s: SpectralSet) -> List[AlgebraElement]:
    return [chi(c.alpha, c.beta, s.n) for c in s.cylinders]


# finite-depth bimodule membership ----------------------------------------------

def _required_depth(elements: Iterable[AlgebraElement]) -> int:
    return max((a.max_word_length() for a in elements), default=0)


def _compressions(a: AlgebraElement, depth: int) -> List[List[Tuple[Cylinder, ComplexQ]]]:
    """The nonzero pieces chi_{g,g} a chi_{h,h} with |g| = |h| = depth."""
    buckets: Dict[Tuple, List[Tuple[Cylinder, ComplexQ]]] = {}
    for c, v in a.items():
        m = max(0, depth - len(c.alpha), depth - len(c.beta))
        for delta in words_of_length(a.n, m):
            child = c.extend(delta)
            key = (child.alpha[:depth], child.beta[:depth])
            buckets.setdefault(key, []).append((child, v))
    return [buckets[key] for key in sorted(buckets)]


class _Coordinates:
    """Common refinement: every root group is refined to its longest suffix."""

    def __init__(self, n: int, families: Iterable[List[Tuple[Cylinder, ComplexQ]]]):
        self.n = n
        self.length: Dict[Tuple, int] = {}
        for terms in families:
            for c, _ in terms:
                root, suffix = split_root(c)
                self.length[root] = max(self.length.get(root, 0), len(suffix))

    def vector(self, terms: Iterable[Tuple[Cylinder, ComplexQ]]) -> Dict:
        out: Dict = {}
        for c, v in terms:
            root, suffix = split_root(c)
            extra = self.length.get(root, len(suffix)) - len(suffix)
            for delta in words_of_length(self.n, max(extra, 0)):
                key = (root, suffix + delta)
                new = out.get(key, ComplexQ(0)) + v
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return out


def _check_depth(elements: Sequence[AlgebraElement], depth: int):
    need = _required_depth(elements)
    if depth < need:
        raise DepthTooSmall(f"depth {depth} is below the maximal word length {need}")


def _membership(
    generators: Sequence[AlgebraElement], targets: Sequence[AlgebraElement], depth: int
) -> List[bool]:
    _check_depth(list(generators) + list(targets), depth)
    pieces = [p for a in generators for p in _compressions(a, depth)]
    target_terms = [list(t.items()) for t in targets]
    coords = _Coordinates(
        generators[0].n if generators else targets[0].n, pieces + target_terms
    )
    basis = EchelonBasis()
    for p in pieces:
        basis.add(coords.vector(p))
    return [basis.contains(coords.vector(t)) for t in target_terms]


def bimodule_contains(
    generators: Sequence[AlgebraElement], candidate: AlgebraElement, depth: int
) -> bool:
    """Is candidate in the span of diagonal compressions of the generators at this depth?"""
    return _membership(list(generators), [candidate], depth)[0]


def default_depth(elements: Iterable[AlgebraElement]) -> int:
    return _required_depth(elements) + 1


def reflexivity_check(
    generators: Sequence[AlgebraElement], depth: int
) -> Tuple[bool, Optional[Cylinder]]:
    gens = list(generators)
    _check_depth(gens, depth)
    if not gens:
        return True, None
    spectrum = sigma(gens)
    targets = indicator_generators(spectrum)
    if not targets:
        return True, None
    for c, ok in zip(spectrum.cylinders, _membership(gens, targets, depth)):
        if not ok:
            return False, c
    return True, None


def is_gauge_invariant(generators: Sequence[AlgebraElement], depth: int) -> bool:
    gens = list(generators)
    _check_depth(gens, depth)
    parts = [comp for a in gens for comp in fourier_components(a).values()]
    if not parts:
        return True
    return all(_membership(gens, parts, depth))
