"""Exact combinatorics of the Cuntz algebra O_n through its groupoid G_n."""
from __future__ import annotations

from .algebra import AlgebraElement, adjoint, chi, evaluate, identity, isometry, mul, zero
from .groupoid import Cylinder, GroupoidElement, compose, inverse, make_element
from .parsing import parse, parse_element
from .scalars import ComplexQ
from .words import Point

__all__ = [
    "AlgebraElement",
    "ComplexQ",
    "Cylinder",
    "GroupoidElement",
    "Point",
    "adjoint",
    "chi",
    "compose",
    "evaluate",
    "identity",
    "inverse",
    "isometry",
    "make_element",
    "mul",
    "parse",
    "parse_element",
    "zero",
]
