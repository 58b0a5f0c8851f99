"""End-to-end runs of every subcommand, byte-compared with tests/golden.

Set CUNTZ_REGEN_GOLDEN=1 to rewrite the golden files after an intended change.
"""
from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

import pytest

from cuntz import sampling
from cuntz.algebra import to_text
from cuntz.cli import main
from cuntz.parsing import parse

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"

SCRIPT = [
    ("eval", ["eval", "--n", "2", "I + S[1]", "([]:[1], 1, []:[1])"]),
    ("eval_json", ["eval", "--n", "2", "--json", "data/element.json", "([1]:[1], 0, [2]:[1])"]),
    ("mul", ["mul", "--n", "2", "I + S[1]", "S[1]S*[1]"]),
    ("mul_json", ["mul", "--n", "2", "--json", "S*[1]", "S[1]"]),
    ("add", ["add", "--n", "2", "S[1]S*[1]", "S[2]S*[2]"]),
    ("adjoint", ["adjoint", "--n", "2", "(1+2i) S[1]S*[2]"]),
    ("commutator", ["commutator", "--n", "2", "S[1]S*[1]", "S[1]S*[2]"]),
    ("normalize", ["normalize", "--n", "3", "S[1,1]S*[2,1] + S[1,2]S*[2,2] + S[1,3]S*[2,3]"]),
    ("spectrum", ["spectrum", "--n", "2", "I + S[1]"]),
    ("member_pv", ["member", "--n", "2", "--set", "pv", "S[1]S*[2] + S[1,1]S*[1]"]),
    ("member_pplus", ["member", "--n", "2", "--set", "pplus", "S*[1]"]),
    ("bimodule_contains", ["bimodule-contains", "--n", "2", "--depth", "2", "--candidate", "S[2]S*[2]", "I + S[1]"]),
    ("reflexive", ["reflexive", "--n", "2", "--depth", "3", "I + S[1]"]),
    ("reflexive_json", ["reflexive", "--n", "2", "--json", "S[1]S*[2]"]),
    ("gauge_invariant", ["gauge-invariant", "--n", "2", "--depth", "3", "I + S[1]"]),
    ("cocycle_eval", ["cocycle-eval", "--n", "2", "--f", "data/first_letter.json", "([1]:[1], 0, [2]:[1])"]),
    ("cocycle_builtin", ["cocycle-eval", "--n", "2", "--builtin", "refinement", "([]:[1], 0, [2]:[1])"]),
    ("cocycle_standard", ["cocycle-eval", "--n", "2", "--builtin", "standard", "([2,2,2]:[1], 0, []:[1])"]),
    ("counterexample", ["counterexample", "--n", "2", "--depth", "2"]),
    ("trivial_extend", ["trivial-extend", "--n", "2", "--b", "data/b_depth1.json"]),
    ("analytic_member", ["analytic-member", "--n", "2", "--f", "data/constant_one.json", "S[1]"]),
    ("analytic_member_no", ["analytic-member", "--n", "2", "--f", "data/constant_one.json", "S*[1]"]),
    ("projection", ["projection", "--n", "2", "--cut", "[1,2]"]),
    ("radical_member", ["radical-member", "--n", "2", "S[1]S*[2]"]),
    ("phi", ["phi", "--n", "2", "--point", "[]:[1]", "S[1,1]S*[1]"]),
    ("phi_json", ["phi", "--n", "2", "--json", "--point", "[]:[1]", "I + 1/2 S[1,1]S*[1]"]),
    ("witness_dirichlet", ["witnesses", "--n", "2", "dirichlet"]),
    ("witness_nonclosed", ["witnesses", "--n", "2", "nonclosed", "--p", "3"]),
    ("error_letter", ["normalize", "--n", "2", "S[3]"]),
]


def run_cli(argv):
    proc = subprocess.run(
        [sys.executable, "-m", "cuntz", *argv],
        cwd=HERE,
        capture_output=True,
        text=True,
    )
    return f"exit {proc.returncode}\n--- stdout\n{proc.stdout}--- stderr\n{proc.stderr}"


@pytest.mark.parametrize("name,argv", SCRIPT, ids=[name for name, _ in SCRIPT])
def test_golden(name, argv):
    got = run_cli(argv)
    path = GOLDEN / f"{name}.txt"
    if os.environ.get("CUNTZ_REGEN_GOLDEN"):
        path.write_text(got)
    assert got == path.read_text()


def test_every_subcommand_scripted():
    from cuntz.cli import build_parser

    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    scripted = {argv[0] for _, argv in SCRIPT}
    assert scripted == set(sub.choices)


def test_in_process_entry(capsys):
    assert main(["normalize", "--n", "2", "S[1]S*[1] + S[2]S*[2]"]) == 0
    assert capsys.readouterr().out == "I\n"
    assert main(["normalize", "--n", "2", "S[1"]) == 2
    assert "position 3" in capsys.readouterr().err


def test_print_parse_round_trip(rng):
    for _ in range(100):
        n = rng.choice([2, 3])
        a = sampling.algebra_element(rng, n, terms=4)
        assert parse(to_text(a), n) == a
