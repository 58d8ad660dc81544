#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./heisenberg/OperatorExpr.py

"""
Operator expressions over the ladder letters a and a†.

Expressions are trees of atoms, products and positive integer powers. They carry no
sums, so every expression denotes a single word in a and a†.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union


@dataclass(frozen=True)
class Atom:
    """a† when dagger is True, a otherwise"""
    dagger: bool

    def to_text(self) -> str:
        return "a+" if self.dagger else "a"


@dataclass(frozen=True)
class Product:
    factors: Tuple["OperatorExpr", ...]

    def to_text(self) -> str:
        return " ".join(_wrapped(f, in_product=True) for f in self.factors)


@dataclass(frozen=True)
class Power:
    base: "OperatorExpr"
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError(f"power exponent must be positive, got {self.exponent}")

    def to_text(self) -> str:
        return f"{_wrapped(self.base, in_product=False)}^{self.exponent}"


OperatorExpr = Union[Atom, Product, Power]

CREATE = Atom(True)
ANNIHILATE = Atom(False)


def _wrapped(expr: OperatorExpr, in_product: bool) -> str:
    if isinstance(expr, Atom) or (in_product and isinstance(expr, Power)):
        return expr.to_text()
    return f"({expr.to_text()})"


def letters_of(expr: OperatorExpr) -> Tuple[bool, ...]:
    """Flattens an expression into its word; True stands for a†"""
    if isinstance(expr, Atom):
        return (expr.dagger,)
    if isinstance(expr, Product):
        return tuple(letter for factor in expr.factors for letter in letters_of(factor))
    if isinstance(expr, Power):
        return letters_of(expr.base) * expr.exponent
    raise TypeError(f"not an operator expression: {expr!r}")


def factors_of(expr: OperatorExpr) -> List[Tuple[int, int]]:
    """
    Groups the word of expr into maximal runs (a†)^r a^s, left to right

    Returns:
        List[Tuple[int, int]]: The (r, s) pairs; each has r + s ≥ 1
    """
    runs: List[Tuple[int, int]] = []
    r = s = 0
    for dagger in letters_of(expr):
        if dagger and s:
            runs.append((r, s))
            r = s = 0
        if dagger:
            r += 1
        else:
            s += 1
    if r or s:
        runs.append((r, s))
    return runs


def word_expr(factors: List[Tuple[int, int]]) -> OperatorExpr:
    """Builds the expression (a†)^{r₁}a^{s₁}⋯ from (r, s) runs"""
    parts: List[OperatorExpr] = []
    for r, s in factors:
        if r:
            parts.append(CREATE if r == 1 else Power(CREATE, r))
        if s:
            parts.append(ANNIHILATE if s == 1 else Power(ANNIHILATE, s))
    if len(parts) == 1:
        return parts[0]
    return Product(tuple(parts))
