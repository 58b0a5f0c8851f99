from __future__ import annotations

from fractions import Fraction

import pytest

from cuntz import sampling
from cuntz.algebra import chi, identity, isometry, to_text, zero
from cuntz.errors import ExpressionSyntaxError, LetterOutOfRange
from cuntz.parsing import parse, parse_element
from cuntz.scalars import ComplexQ


def test_examples():
    assert parse("I", 2) == identity(2)
    parsed = parse_element("S[1]S*[2] + 1/2 I", 2)
    assert parsed.element == chi((1,), (2,), 2) + chi((), (), 2, Fraction(1, 2))
    assert parsed.spans == {0: (0, 9), 1: (12, 17)}
    with pytest.raises(LetterOutOfRange) as info:
        parse("S[3]", 2)
    assert info.value.position == 2


def test_concatenation_and_adjoints():
    assert parse("S[1]S[2]", 2) == isometry((1, 2), 2)
    assert parse("S[1,2]", 2) == isometry((1, 2), 2)
    assert parse("S*[1]", 2) == parse("S[1]*", 2) == chi((), (1,), 2)
    assert parse("S*[1]S[1]", 2) == identity(2)
    assert parse("S*[1]S[2]", 2) == zero(2)


def test_coefficients():
    assert parse("2*S[1]", 2) == chi((1,), (), 2, 2)
    assert parse("-1/3 S[1] + S[2]", 2) == chi((1,), (), 2, Fraction(-1, 3)) + isometry((2,), 2)
    assert parse("1/2+1/3i S[1]", 2) == chi((1,), (), 2, ComplexQ(Fraction(1, 2), Fraction(1, 3)))
    assert parse("(1-2i) I", 2) == chi((), (), 2, ComplexQ(1, -2))
    assert parse("i S[2]", 2) == chi((2,), (), 2, ComplexQ(0, 1))
    assert parse("2 + 3i I", 2) == chi((), (), 2, ComplexQ(2, 3))
    assert parse("0", 2) == zero(2)
    assert parse(" S[ 1 , 2 ] S* [1] ", 2) == chi((1, 2), (1,), 2)


@pytest.mark.parametrize(
    "text,position",
    [
        ("S[1", 3),
        ("S[1]]", 4),
        ("S[]", 2),
        ("T[1]", 0),
        ("S[1] +", 6),
        ("1/0 I", 2),
        ("", 0),
    ],
)
def test_errors_carry_position(text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse(text, 2)
    assert info.value.position == position


def test_round_trip(rng):
    for _ in range(150):
        n = rng.choice([2, 3, 4])
        a = sampling.algebra_element(rng, n, terms=4)
        assert parse(to_text(a), n) == a
