"""AST for the identity language.

Nodes are frozen dataclasses, so structural equality is ==. Sums and products
are n-ary (n >= 2 when built through the helpers below); Power exponents are
plain Python ints and may be negative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Expr = Union[
    "Sum", "Product", "Power", "ThetaCall", "Var", "RootOfUnity",
    "RationalConst", "Negate", "RealPart", "ImagPart", "SpecializeQ",
]


@dataclass(frozen=True)
class Sum:
    items: tuple

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("Sum needs at least two items; use sum_of()")


@dataclass(frozen=True)
class Product:
    items: tuple

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("Product needs at least two items; use product_of()")


@dataclass(frozen=True)
class Power:
    base: Expr
    exponent: int


@dataclass(frozen=True)
class ThetaCall:
    first: Expr
    second: Expr


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if self.name not in ("a", "b", "q"):
            raise ValueError("variable must be one of a, b, q")


@dataclass(frozen=True)
class RootOfUnity:
    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("root order must be >= 1")
        object.__setattr__(self, "exponent", self.exponent % self.order)


@dataclass(frozen=True)
class RationalConst:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Negate:
    item: Expr


@dataclass(frozen=True)
class RealPart:
    item: Expr


@dataclass(frozen=True)
class ImagPart:
    item: Expr


@dataclass(frozen=True)
class SpecializeQ:
    item: Expr


def sum_of(items) -> Expr:
    items = tuple(items)
    if not items:
        return RationalConst(Fraction(0))
    if len(items) == 1:
        return items[0]
    return Sum(items)


def product_of(items) -> Expr:
    items = tuple(items)
    if not items:
        return RationalConst(Fraction(1))
    if len(items) == 1:
        return items[0]
    return Product(items)


def rational(num, den=1) -> RationalConst:
    return RationalConst(Fraction(num, den))


I_UNIT = RootOfUnity(4, 1)
OMEGA = RootOfUnity(3, 1)


def root_orders(expr: Expr) -> set[int]:
    """Orders of every RootOfUnity node in the tree."""
    found: set[int] = set()

    def walk(node):
        if isinstance(node, RootOfUnity):
            found.add(node.order)
        elif isinstance(node, (Sum, Product)):
            for item in node.items:
                walk(item)
        elif isinstance(node, Power):
            walk(node.base)
        elif isinstance(node, ThetaCall):
            walk(node.first)
            walk(node.second)
        elif isinstance(node, (Negate, RealPart, ImagPart, SpecializeQ)):
            walk(node.item)

    walk(expr)
    return found


def uses_real_imag(expr: Expr) -> bool:
    if isinstance(expr, (RealPart, ImagPart)):
        return True
    if isinstance(expr, (Sum, Product)):
        return any(uses_real_imag(i) for i in expr.items)
    if isinstance(expr, Power):
        return uses_real_imag(expr.base)
    if isinstance(expr, ThetaCall):
        return uses_real_imag(expr.first) or uses_real_imag(expr.second)
    if isinstance(expr, (Negate, SpecializeQ)):
        return uses_real_imag(expr.item)
    return False


def required_order(*exprs: Expr) -> int:
    """lcm of all root orders appearing in the given expressions (at least 1),
    bumped to a multiple of 4 when a real/imaginary split appears."""
    order = 1
    for e in exprs:
        for o in root_orders(e):
            order = math.lcm(order, o)
        if uses_real_imag(e):
            order = math.lcm(order, 4)
    return order
