"""The dense *-subalgebra of O_n spanned by the Cuntz partial isometries S_a S_b^*.

An element is a finite combination of cylinder indicators chi_{a,b}, kept in a
canonical form: supports are pairwise disjoint and no full family of siblings
{(a i, b i) : i = 1..n} with one common coefficient survives uncoarsened.
Equality of elements is therefore equality of term maps.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, TypeVar

from .groupoid import Cylinder, GroupoidElement, in_cylinder
from .scalars import ONE, ZERO, ComplexQ, Scalar, format_fraction
from .words import Word, check_word, format_word, words_of_length

V = TypeVar("V")


def split_root(c: Cylinder) -> Tuple[Tuple[Word, Word], Word]:
    """Strip the longest common suffix: (a0 e, b0 e) -> ((a0, b0), e).

    Two cylinders of one degree overlap exactly when they share a root and
    one suffix is a prefix of the other.
    """
    a, b = c.alpha, c.beta
    m = 0
    while m < len(a) and m < len(b) and a[len(a) - 1 - m] == b[len(b) - 1 - m]:
        m += 1
    return (a[: len(a) - m], b[: len(b) - m]), a[len(a) - m :]


def _collapse(n, prefix, acc, entries, add, zero):
    # Returns ("const", value) when the function is constant below prefix,
    # otherwise ("split", [(suffix, value), ...]) with maximal constant nodes.
    if not entries:
        return "const", acc
    depth = len(prefix) + 1
    exact: Dict[int, object] = {}
    deeper: Dict[int, Dict[Word, object]] = {i: {} for i in range(1, n + 1)}
    for suffix, value in entries.items():
        i = suffix[depth - 1]
        if len(suffix) == depth:
            exact[i] = add(exact.get(i, zero), value)
        else:
            deeper[i][suffix] = value
    results = [
        _collapse(n, prefix + (i,), add(acc, exact.get(i, zero)), deeper[i], add, zero)
        for i in range(1, n + 1)
    ]
    first = results[0]
    if all(kind == "const" for kind, _ in results) and all(v == first[1] for _, v in results):
        return first
    out = []
    for i, (kind, payload) in enumerate(results, start=1):
        if kind == "const":
            if payload != zero:
                out.append((prefix + (i,), payload))
        else:
            out.extend(payload)
    return "split", out


def normalize_cylinder_map(
    n: int,
    items: Iterable[Tuple[Cylinder, V]],
    add: Callable[[V, V], V],
    zero: V,
) -> List[Tuple[Cylinder, V]]:
    """Canonical disjoint, maximally coarsened form of a locally constant function."""
    groups: Dict[Tuple[Word, Word], Dict[Word, V]] = {}
    for cyl, value in items:
        root, suffix = split_root(cyl)
        bucket = groups.setdefault(root, {})
        bucket[suffix] = add(bucket.get(suffix, zero), value)
    out: List[Tuple[Cylinder, V]] = []
    for (a0, b0), entries in groups.items():
        acc = entries.pop((), zero)
        kind, payload = _collapse(n, (), acc, entries, add, zero)
        if kind == "const":
            payload = [((), payload)] if payload != zero else []
        for suffix, value in payload:
            out.append((Cylinder(a0 + suffix, b0 + suffix), value))
    out.sort(key=lambda cv: _term_key(cv[0]))
    return out


def _term_key(c: Cylinder):
    return (len(c.alpha) + len(c.beta), c.alpha, c.beta)


class AlgebraElement:
    """Finite combination of cylinder indicators, always in canonical form."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Iterable[Tuple[Cylinder, Scalar]] = ()):
        if n < 2:
            raise ValueError(f"alphabet size must be at least 2, got {n}")
        pairs = []
        for cyl, coef in terms:
            check_word(cyl.alpha, n)
            check_word(cyl.beta, n)
            pairs.append((cyl, ComplexQ.coerce(coef)))
        canon = normalize_cylinder_map(n, pairs, lambda a, b: a + b, ZERO)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", dict(canon))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @property
    def terms(self) -> Mapping[Cylinder, ComplexQ]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Cylinder, ComplexQ]]:
        return iter(self._terms.items())

    def support(self) -> List[Cylinder]:
        return list(self._terms)

    def coefficient(self, c: Cylinder) -> ComplexQ:
        return self._terms.get(c, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def max_word_length(self) -> int:
        return max((c.max_length for c in self._terms), default=0)

    def degrees(self) -> List[int]:
        return sorted({c.degree for c in self._terms})

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected an AlgebraElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"alphabet mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.n, list(self.items()) + list(other.items()))

    def __neg__(self):
        return AlgebraElement(self.n, [(c, -v) for c, v in self.items()])

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        try:
            return scale(other, self)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return scale(other, self)
        except TypeError:
            return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = identity(self.n)
        for _ in range(e):
            out = out * self
        return out

    def adjoint(self) -> "AlgebraElement":
        return adjoint(self)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            h = hash((self.n, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __repr__(self):
        return f"AlgebraElement(n={self.n}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def zero(n: int) -> AlgebraElement:
    return AlgebraElement(n)


def chi(alpha: Iterable[int], beta: Iterable[int], n: int, coef: Scalar = 1) -> AlgebraElement:
    """The indicator of U_{alpha,beta}, i.e. the partial isometry S_alpha S_beta^*."""
    return AlgebraElement(n, [(Cylinder(tuple(alpha), tuple(beta)), coef)])


def identity(n: int) -> AlgebraElement:
    return chi((), (), n)


def isometry(word: Iterable[int], n: int) -> AlgebraElement:
    """S_w = chi_{w, empty}; S_i for a single letter."""
    return chi(tuple(word), (), n)


def word_product(c1: Cylinder, c2: Cylinder) -> Optional[Cylinder]:
    """chi_{a,b} * chi_{c,d}, which is again a cylinder indicator or zero."""
    a, b = c1.alpha, c1.beta
    c, d = c2.alpha, c2.beta
    if len(b) <= len(c):
        if c[: len(b)] != b:
            return None
        return Cylinder(a + c[len(b) :], d)
    if b[: len(c)] != c:
        return None
    return Cylinder(a, d + b[len(c) :])


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def scale(c: Scalar, a: AlgebraElement) -> AlgebraElement:
    s = ComplexQ.coerce(c)
    return AlgebraElement(a.n, [(cyl, s * v) for cyl, v in a.items()])


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    out = []
    for c1, v1 in a.items():
        for c2, v2 in b.items():
            c = word_product(c1, c2)
            if c is not None:
                out.append((c, v1 * v2))
    return AlgebraElement(a.n, out)


def adjoint(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.n, [(c.swap(), v.conjugate()) for c, v in a.items()])


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return mul(a, b) - mul(b, a)


def evaluate(a: AlgebraElement, g: GroupoidElement) -> ComplexQ:
    for c, v in a.items():
        if in_cylinder(g, c):
            return v
    return ZERO


def fourier_component(a: AlgebraElement, k: int) -> AlgebraElement:
    """Degree-k part: the terms chi_{a,b} with |a| - |b| = k."""
    return AlgebraElement(a.n, [(c, v) for c, v in a.items() if c.degree == k])


def fourier_components(a: AlgebraElement) -> Dict[int, AlgebraElement]:
    return {k: fourier_component(a, k) for k in a.degrees()}


def gauge(a: AlgebraElement, lam: Scalar) -> AlgebraElement:
    """The gauge automorphism S_i -> lam S_i, for lam a fourth root of unity."""
    lam = ComplexQ.coerce(lam)
    if lam.abs_sq() != 1 or (lam.re != 0 and lam.im != 0):
        raise ValueError("exact gauge action is available for lam in {1, -1, i, -i} only")
    return AlgebraElement(a.n, [(c, v * lam**c.degree) for c, v in a.items()])


def sum_norm(a: AlgebraElement) -> Fraction:
    """Sum of |re| + |im| over terms; an upper bound on the C*-norm."""
    return sum((abs(v.re) + abs(v.im) for _, v in a.items()), Fraction(0))


def sup_norm_sq(a: AlgebraElement) -> Fraction:
    """Largest squared modulus of a coefficient; a lower bound on the squared C*-norm."""
    return max((v.abs_sq() for _, v in a.items()), default=Fraction(0))


def diagonal_projection(gamma: Iterable[int], n: int) -> AlgebraElement:
    gamma = tuple(gamma)
    return chi(gamma, gamma, n)


def refine_to_depth(a: AlgebraElement, depth: int) -> List[Tuple[Cylinder, ComplexQ]]:
    """Terms of a rewritten so that every beta word has length at least depth.

    The result is disjoint but deliberately not coarsened.
    """
    out = []
    for c, v in a.items():
        m = max(0, depth - len(c.beta))
        for delta in words_of_length(a.n, m):
            out.append((c.extend(delta), v))
    return out


# text form -----------------------------------------------------------------

def format_cylinder_word(c: Cylinder) -> str:
    if not c.alpha and not c.beta:
        return "I"
    out = ""
    if c.alpha:
        out += "S" + format_word(c.alpha)
    if c.beta:
        out += "S*" + format_word(c.beta)
    return out


def to_text(a: AlgebraElement) -> str:
    if a.is_zero():
        return "0"
    pieces = []
    for i, (c, v) in enumerate(a.items()):
        word = format_cylinder_word(c)
        if v.im == 0:
            sign = "-" if v.re < 0 else "+"
            mag = abs(v.re)
            coef = "" if mag == 1 else format_fraction(mag) + " "
        else:
            sign = "+"
            coef = f"({v}) "
        if i == 0:
            pieces.append(("-" if sign == "-" else "") + coef + word)
        else:
            pieces.append(f" {sign} {coef}{word}")
    return "".join(pieces)


# structured form -----------------------------------------------------------

def to_dict(a: AlgebraElement) -> dict:
    return {
        "n": a.n,
        "terms": [
            {
                "alpha": list(c.alpha),
                "beta": list(c.beta),
                "re": format_fraction(v.re),
                "im": format_fraction(v.im),
            }
            for c, v in a.items()
        ],
    }


def from_dict(data: Mapping) -> AlgebraElement:
    n = int(data["n"])
    terms = []
    for t in data["terms"]:
        coef = ComplexQ(Fraction(str(t.get("re", "0"))), Fraction(str(t.get("im", "0"))))
        terms.append((Cylinder(tuple(t["alpha"]), tuple(t["beta"])), coef))
    return AlgebraElement(n, terms)


__all__ = [
    "AlgebraElement",
    "ONE",
    "add",
    "adjoint",
    "chi",
    "commutator",
    "diagonal_projection",
    "evaluate",
    "fourier_component",
    "fourier_components",
    "from_dict",
    "gauge",
    "identity",
    "isometry",
    "mul",
    "scale",
    "sum_norm",
    "sup_norm_sq",
    "to_dict",
    "to_text",
    "word_product",
    "zero",
]
