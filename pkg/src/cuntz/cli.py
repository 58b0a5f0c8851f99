"""Command-line front end.

Elements are given either as expression text ("S[1]S*[2] + 1/2 I") or as the
path of a .json file in the structured element format. Points use the form
pre:per, e.g. "[2]:[1]", and groupoid elements "([]:[1], 0, [2]:[1])".
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import algebra as alg
from . import cocycles as coc
from . import spectral as spec
from . import volterra as vol
from .errors import CuntzError
from .groupoid import Cylinder, parse_groupoid_element
from .parsing import parse
from .scalars import ComplexQ, format_fraction
from .words import format_point, format_word, parse_point, parse_word

SET_TOKENS = {
    "d0": "D0",
    "uhf": "P_UHF",
    "pplus": "P_PLUS",
    "qref": "Q_REF",
    "qst": "Q_ST",
    "qrefplus": "QREF_PLUS",
    "qstplus": "QST_PLUS",
    "pv": "P_V",
    "r": "R",
}


def load_element(arg: str, n: int) -> alg.AlgebraElement:
    if arg.endswith(".json") and Path(arg).is_file():
        a = alg.from_dict(json.loads(Path(arg).read_text()))
        if a.n != n:
            raise CuntzError(f"{arg} has alphabet size {a.n}, expected {n}")
        return a
    return parse(arg, n)


def load_function(path: str, n: int) -> coc.DepthFunction:
    F = coc.DepthFunction.from_dict(json.loads(Path(path).read_text()))
    if F.n != n:
        raise CuntzError(f"{path} has alphabet size {F.n}, expected {n}")
    return F


def _scalar(v: ComplexQ) -> dict:
    return {"re": format_fraction(v.re), "im": format_fraction(v.im)}


def _cyl(c: Optional[Cylinder]):
    return None if c is None else {"alpha": list(c.alpha), "beta": list(c.beta)}


class Output:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, text: str, data):
        if self.as_json:
            self.stream.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")

    def element(self, a: alg.AlgebraElement):
        self.emit(alg.to_text(a), alg.to_dict(a))

    def flag(self, value: bool, key: str = "result"):
        self.emit("true" if value else "false", {key: value})


# handlers ----------------------------------------------------------------------

def cmd_eval(args, out):
    a = load_element(args.element, args.n)
    g = parse_groupoid_element(args.point, args.n)
    v = alg.evaluate(a, g)
    out.emit(str(v), {"value": _scalar(v)})


def _binary(op):
    def run(args, out):
        out.element(op(load_element(args.a, args.n), load_element(args.b, args.n)))

    return run


def cmd_adjoint(args, out):
    out.element(alg.adjoint(load_element(args.a, args.n)))


def cmd_normalize(args, out):
    out.element(load_element(args.a, args.n))


def _gens(args) -> List[alg.AlgebraElement]:
    return [load_element(t, args.n) for t in args.generators]


def _depth(args, elements) -> int:
    return args.depth if args.depth is not None else spec.default_depth(elements)


def cmd_spectrum(args, out):
    s = spec.sigma(_gens(args), args.n)
    out.emit(str(s), {"cylinders": [_cyl(c) for c in s.cylinders], "named": sorted(s.named)})


def cmd_member(args, out):
    a = load_element(args.a, args.n)
    s = spec.SpectralSet(args.n, (), frozenset({SET_TOKENS[args.set]}))
    out.flag(spec.supported_in(a, s))


def cmd_bimodule_contains(args, out):
    gens = _gens(args)
    cand = load_element(args.candidate, args.n)
    out.flag(spec.bimodule_contains(gens, cand, _depth(args, gens + [cand])))


def cmd_reflexive(args, out):
    gens = _gens(args)
    ok, witness = spec.reflexivity_check(gens, _depth(args, gens))
    text = "true" if ok else f"false (witness {witness})"
    out.emit(text, {"reflexive": ok, "witness": _cyl(witness)})


def cmd_gauge_invariant(args, out):
    gens = _gens(args)
    out.flag(spec.is_gauge_invariant(gens, _depth(args, gens)))


def cmd_cocycle_eval(args, out):
    g = parse_groupoid_element(args.point, args.n)
    if args.builtin:
        if g.k != 0:
            raise CuntzError("UHF cocycles are defined on degree-zero elements only")
        value = coc.uhf_cocycle_eval(coc.UHFKind(args.builtin), g.x, g.y, args.n)
    else:
        value = coc.cocycle_eval(load_function(args.f, args.n), g)
    out.emit(format_fraction(value), {"value": format_fraction(value)})


def cmd_counterexample(args, out):
    w = coc.nococycle_counterexample(args.depth, args.n)
    same = w.windows_x == w.windows_y
    out.emit(
        f"x = {format_point(w.x)}\ny = {format_point(w.y)}\nwindows equal: {str(same).lower()}",
        {"x": format_point(w.x), "y": format_point(w.y), "windows_equal": same},
    )


def cmd_trivial_extend(args, out):
    f, c = coc.trivial_extension(load_function(args.b, args.n))
    rows = [f"{format_word(w)} {format_fraction(v)}" for w, v in sorted(f.table.items())]
    out.emit("\n".join(rows + [f"c = {format_fraction(c)}"]), {"f": f.to_dict(), "c": format_fraction(c)})


def cmd_analytic_member(args, out):
    a = load_element(args.a, args.n)
    out.flag(coc.analytic_membership(a, load_function(args.f, args.n), Fraction(args.shift)))


def cmd_projection(args, out):
    out.element(vol.projection_px(parse_word(args.cut, args.n), args.n))


def cmd_radical_member(args, out):
    out.flag(vol.radical_membership(load_element(args.a, args.n)))


def cmd_phi(args, out):
    v = vol.phi_eval(load_element(args.a, args.n), parse_point(args.point, args.n))
    out.emit(str(v), v.to_dict())


def cmd_witnesses(args, out):
    if args.kind == "dirichlet":
        g = vol.dirichlet_gap_witness(args.n)
        out.emit(str(g), {"element": str(g)})
    else:
        g, limit = vol.pv_nonclosed_witness(args.p, args.n)
        out.emit(f"g = {g}\nlimit = {limit}", {"g": str(g), "limit": str(limit)})


# parser --------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="alphabet size")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="cuntz", description="Exact computations in the Cuntz algebra O_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("eval", cmd_eval, "evaluate an element at a groupoid point")
    p.add_argument("element")
    p.add_argument("point")
    for name, op in (("mul", alg.mul), ("add", alg.add), ("commutator", alg.commutator)):
        p = add(name, _binary(op), f"{name} of two elements")
        p.add_argument("a")
        p.add_argument("b")
    add("adjoint", cmd_adjoint, "adjoint of an element").add_argument("a")
    add("normalize", cmd_normalize, "canonical form of an element").add_argument("a")

    add("spectrum", cmd_spectrum, "support set of generators").add_argument("generators", nargs="+")
    p = add("member", cmd_member, "support containment in a named set")
    p.add_argument("a")
    p.add_argument("--set", required=True, choices=sorted(SET_TOKENS))
    for name, handler in (
        ("bimodule-contains", cmd_bimodule_contains),
        ("reflexive", cmd_reflexive),
        ("gauge-invariant", cmd_gauge_invariant),
    ):
        p = add(name, handler, f"{name} at finite depth")
        p.add_argument("generators", nargs="+")
        p.add_argument("--depth", type=int)
        if name == "bimodule-contains":
            p.add_argument("--candidate", required=True)

    p = add("cocycle-eval", cmd_cocycle_eval, "cocycle value at a groupoid point")
    p.add_argument("point")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--f", help="depth function file")
    group.add_argument("--builtin", choices=["refinement", "standard"])
    add("counterexample", cmd_counterexample, "pair no depth-N cocycle separates").add_argument(
        "--depth", type=int, required=True
    )
    add("trivial-extend", cmd_trivial_extend, "coboundary extension of b").add_argument("--b", required=True)
    p = add("analytic-member", cmd_analytic_member, "support in {d_f + shift k >= 0}")
    p.add_argument("a")
    p.add_argument("--f", required=True)
    p.add_argument("--shift", default="0")

    add("projection", cmd_projection, "nest projection for an n-adic cut").add_argument("--cut", required=True)
    add("radical-member", cmd_radical_member, "membership in rad A(P_V)").add_argument("a")
    p = add("phi", cmd_phi, "the homomorphism Phi at a point")
    p.add_argument("a")
    p.add_argument("--point", required=True)
    p = add("witnesses", cmd_witnesses, "Volterra witnesses")
    p.add_argument("kind", choices=["dirichlet", "nonclosed"])
    p.add_argument("--p", type=int, default=1)
    return parser


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json, stdout or sys.stdout)
    try:
        args.handler(args, out)
    except CuntzError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
