#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./heisenberg/NormalOrdering.py

"""
Heisenberg–Weyl normal ordering

This module contains:
1. NormalMonomial / NormalPoly - (a†)^m a^n e^q e′^v and integer combinations of them
2. project - the morphism from diagrams, reading off (hf↓, hf↑, h_c, τ)
3. mul - the closed multiplication formula with contraction counts i!·C(n,i)·C(r,i)
4. normal_order - three independent routes (word rewriting, diagrams, monomial fold)
5. stirling - generalized Stirling coefficients S_{r,s}(k) of a product of runs

The central letters e (cut half-edges) and e′ (edges) are carried exactly and only
collapsed to 1 by specialize, at the user-facing boundary.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb, factorial
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from diagram import BDiagram
from hopf import DiagramSum, LinearCombination, integral_coefficient, star_product
from .OperatorExpr import OperatorExpr, factors_of, letters_of

logger = logging.getLogger(__name__)


class HeisenbergError(ValueError):
    """Raised for invalid normal-ordering requests"""


class Route(Enum):
    """Ways of computing a normal-ordered form"""
    REWRITE = "rewrite"
    DIAGRAM = "diagram"
    MONOMIAL = "monomial"

    @classmethod
    def from_string(cls, value: str) -> "Route":
        try:
            return cls(value.lower())
        except ValueError:
            raise HeisenbergError(f"unknown route {value!r}; expected one of {[r.value for r in cls]}")


@dataclass(frozen=True, order=True)
class NormalMonomial:
    """(a†)^m a^n e^q e′^v"""
    m: int
    n: int
    q: int = 0
    v: int = 0

    def __post_init__(self):
        if min(self.m, self.n, self.q, self.v) < 0:
            raise HeisenbergError(f"negative exponent in {(self.m, self.n, self.q, self.v)}")

    def to_text(self) -> str:
        parts = [f"a+^{self.m}", f"a^{self.n}"]
        if self.q:
            parts.append(f"e^{self.q}")
        if self.v:
            parts.append(f"e'^{self.v}")
        return " ".join(parts)


UNIT_MONOMIAL = NormalMonomial(0, 0)


class NormalPoly(LinearCombination[NormalMonomial]):
    """Integer combination of normal monomials"""

    @staticmethod
    def coerce(c: Any) -> int:
        try:
            return integral_coefficient(c)
        except ValueError as e:
            raise HeisenbergError(str(e)) from e

    def items(self) -> List[Tuple[NormalMonomial, int]]:
        """Terms sorted by (m, n) descending, then by the central exponents"""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0].m, -kv[0].n, kv[0].q, kv[0].v))

    def to_text(self) -> str:
        return "\n".join(f"{c} * {mono.to_text()}" for mono, c in self.items())


## ==========================================================================
## Projection and multiplication

def project(g: BDiagram) -> NormalMonomial:
    """𝔭_B(G) = (a†)^{hf↓} a^{hf↑} e^{h_c} e′^{τ}"""
    s = g.stats()
    return NormalMonomial(s.hf_down, s.hf_up, s.h_c, s.tau)


def project_sum(x: Union[BDiagram, DiagramSum]) -> NormalPoly:
    """Linear extension of project"""
    result = NormalPoly()
    for g, c in DiagramSum.of(x).terms.items():
        if c.denominator != 1:
            raise HeisenbergError(f"non-integral coefficient {c} cannot be projected to NormalPoly")
        result.add_term(project(g), c.numerator)
    return result


def mul(x: NormalMonomial, y: NormalMonomial) -> NormalPoly:
    """
    Product of two normal monomials

    Args:
        x: (m, n, q, v), the left factor
        y: (r, s, t, w), the right factor

    Returns:
        NormalPoly: Σ_i i!·C(n,i)·C(r,i)·(a†)^{m+r−i} a^{n+s−i} e^{q+t} e′^{v+w+i}
    """
    result = NormalPoly()
    for i in range(min(x.n, y.m) + 1):
        coef = factorial(i) * comb(x.n, i) * comb(y.m, i)
        result.add_term(NormalMonomial(x.m + y.m - i, x.n + y.n - i, x.q + y.q, x.v + y.v + i), coef)
    return result


def mul_poly(x: NormalPoly, y: NormalPoly) -> NormalPoly:
    result = NormalPoly()
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            for mono, k in mul(a, b).terms.items():
                result.add_term(mono, c * d * k)
    return result


def specialize(poly: NormalPoly) -> NormalPoly:
    """Collapses e = e′ = 1, merging monomials with equal (m, n)"""
    return poly.map_keys(lambda mono: NormalMonomial(mono.m, mono.n))


## ==========================================================================
## Vertex diagrams and the three routes

def vertex_diagram(r: int, s: int) -> BDiagram:
    """
    Single-vertex diagram realizing (a†)^r a^s

    The vertex has max(r, s) slots; the lowest r inner and lowest s outer half-edges
    are free, the rest cut.
    """
    if r < 0 or s < 0 or r + s == 0:
        raise HeisenbergError(f"vertex_diagram needs r, s ≥ 0 with r + s ≥ 1, got ({r}, {s})")
    return BDiagram(1, (max(r, s),), range(1, s + 1), range(1, r + 1), ())


def vertex_monomial(r: int, s: int) -> NormalMonomial:
    return project(vertex_diagram(r, s))


def rewrite_word(word: Sequence[bool]) -> NormalPoly:
    """
    Normal-orders a word by repeated use of a a† → a† a + 1

    Args:
        word: Letters left to right, True for a†

    Returns:
        NormalPoly: Result with e = e′ = 1
    """
    pending: Dict[Tuple[bool, ...], int] = {tuple(word): 1}
    result = NormalPoly()
    while pending:
        current, coef = pending.popitem()
        position = next((i for i in range(len(current) - 1) if not current[i] and current[i + 1]), None)
        if position is None:
            m = sum(current)
            result.add_term(NormalMonomial(m, len(current) - m), coef)
            continue
        swapped = current[:position] + (True, False) + current[position + 2:]
        contracted = current[:position] + current[position + 2:]
        for successor in (swapped, contracted):
            pending[successor] = pending.get(successor, 0) + coef
    return result


def _ordered_by_diagrams(factors: List[Tuple[int, int]]) -> NormalPoly:
    diagrams = [vertex_diagram(r, s) for r, s in factors]
    product = star_product(diagrams)
    logger.debug(f"diagram route: {len(factors)} factors gave {len(product)} diagrams")
    return project_sum(product)


def _ordered_by_monomials(factors: List[Tuple[int, int]]) -> NormalPoly:
    result = NormalPoly.basis(UNIT_MONOMIAL)
    for r, s in factors:
        result = mul_poly(result, NormalPoly.basis(vertex_monomial(r, s)))
    return result


def normal_order(expr: OperatorExpr, route: Union[Route, str] = Route.MONOMIAL,
                 keep_central: bool = False) -> NormalPoly:
    """
    Normal-ordered form of an operator word

    Args:
        expr: The expression to order
        route: REWRITE (letter rewriting), DIAGRAM (vertex diagrams, left factor
            lowest, ⋆-multiplied and projected) or MONOMIAL (fold of mul)
        keep_central: Keep e and e′ instead of setting them to 1; not available on
            the rewrite route

    Returns:
        NormalPoly: The ordered polynomial
    """
    if isinstance(route, str):
        route = Route.from_string(route)
    if route is Route.REWRITE:
        if keep_central:
            raise HeisenbergError("the rewrite route does not track e and e′")
        return rewrite_word(letters_of(expr))

    factors = factors_of(expr)
    if route is Route.DIAGRAM:
        poly = _ordered_by_diagrams(factors)
    else:
        poly = _ordered_by_monomials(factors)
    return poly if keep_central else specialize(poly)


## ==========================================================================
## Generalized Stirling numbers

@dataclass
class StirlingResult:
    """(a†)^α Σ_k S(k) (a†)^k a^k"""
    alpha: int
    coefficients: Dict[int, int] = field(default_factory=dict)

    def to_text(self) -> str:
        body = " ".join(f"S({k})={c}" for k, c in sorted(self.coefficients.items()))
        return f"alpha={self.alpha}; {body}"

    def to_dict(self) -> Dict[str, object]:
        return {"alpha": self.alpha, "coefficients": {str(k): c for k, c in sorted(self.coefficients.items())}}


def stirling(r_vec: Sequence[int], s_vec: Sequence[int], route: Union[Route, str] = Route.MONOMIAL) -> StirlingResult:
    """
    Normal-orders (a†)^{r_n}a^{s_n}⋯(a†)^{r_1}a^{s_1}

    Args:
        r_vec: (r_1, …, r_n), positive
        s_vec: (s_1, …, s_n), positive, same length

    Returns:
        StirlingResult: α = Σ(r_i − s_i) and the coefficients S(k) of (a†)^{α+k} a^k

    Raises:
        HeisenbergError: On a length mismatch, non-positive entries or negative α
    """
    r_vec, s_vec = list(r_vec), list(s_vec)
    if len(r_vec) != len(s_vec) or not r_vec:
        raise HeisenbergError(f"r and s must be nonempty with equal lengths, got {len(r_vec)} and {len(s_vec)}")
    if min(r_vec + s_vec) < 1:
        raise HeisenbergError("r and s entries must be positive integers")
    alpha = sum(r_vec) - sum(s_vec)
    if alpha < 0:
        raise HeisenbergError(f"alpha = {alpha} is negative")

    factors = list(zip(reversed(r_vec), reversed(s_vec)))
    if isinstance(route, str):
        route = Route.from_string(route)
    if route is Route.REWRITE:
        poly = rewrite_word([letter for r, s in factors for letter in [True] * r + [False] * s])
    elif route is Route.DIAGRAM:
        poly = specialize(_ordered_by_diagrams(factors))
    else:
        poly = specialize(_ordered_by_monomials(factors))

    coefficients: Dict[int, int] = {}
    for mono, c in poly.terms.items():
        if mono.m - mono.n != alpha:
            raise HeisenbergError(f"term {mono.to_text()} does not have excess {alpha}")
        coefficients[mono.n] = c
    return StirlingResult(alpha, dict(sorted(coefficients.items())))


def stirling_triangle(r: int, s: int, n_max: int) -> List[StirlingResult]:
    """Rows n = 1..n_max of S_{r,s}(n, k) for ((a†)^r a^s)^n"""
    return [stirling([r] * n, [s] * n) for n in range(1, n_max + 1)]


def generalized_bell(r: int, s: int, n: int) -> int:
    """B_{r,s}(n) = Σ_k S_{r,s}(n, k)"""
    return sum(stirling([r] * n, [s] * n).coefficients.values())


def lah_number(n: int, k: int) -> int:
    """C(n−1, k−1)·n!/k!, the number of partitions of an n-set into k lists"""
    if not 1 <= k <= n:
        return 0
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


def poly_from_terms(terms: Iterable[Tuple[Tuple[int, int], int]]) -> NormalPoly:
    """Builds a specialized NormalPoly from ((m, n), c) pairs"""
    result = NormalPoly()
    for (m, n), c in terms:
        result.add_term(NormalMonomial(m, n), c)
    return result
