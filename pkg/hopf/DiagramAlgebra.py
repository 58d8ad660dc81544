#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./hopf/DiagramAlgebra.py

"""
The Hopf algebra of B-diagrams

This module contains:
1. DiagramSum / TensorSum - elements of the algebra and of its tensor square
2. star, tensor_star - the bilinear ⋆ product and its componentwise tensor version
3. coproduct, reduced_coproduct, counit - the coalgebra structure
4. convolve, convolution_power and the basis maps identity/ξ/(Id−ξ)
5. eulerian, is_primitive, bracket, primitive_rank - primitive elements

Endomorphisms are plain callables from a basis diagram to a DiagramSum and are
evaluated lazily; nothing is materialized as a matrix except in primitive_rank.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, List, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from diagram import BDiagram, EMPTY_DIAGRAM, star_expand
from .LinearCombination import LinearCombination, format_coefficient

logger = logging.getLogger(__name__)


class HopfError(ValueError):
    """Raised for requests outside the domain of an algebra operation"""


class DiagramSum(LinearCombination[BDiagram]):
    """Element of ℬ: exact rational combination of canonical diagrams"""

    @classmethod
    def of(cls, x: Union[BDiagram, "DiagramSum"]) -> "DiagramSum":
        """Promotes a single diagram to a sum"""
        if isinstance(x, BDiagram):
            return cls.basis(x)
        return x

    def graded_part(self, k: int) -> "DiagramSum":
        """Restriction to ℬ_k"""
        return DiagramSum({g: c for g, c in self.terms.items() if g.weight == k})

    def weights(self) -> List[int]:
        return sorted({g.weight for g in self.terms})

    def to_text(self) -> str:
        """One term per line: coefficient then canonical JSON, sorted by diagram"""
        return "\n".join(f"{format_coefficient(c)} {g.to_json()}" for g, c in self.items())


class TensorSum(LinearCombination[Tuple[BDiagram, BDiagram]]):
    """Element of ℬ⊗ℬ keyed by ordered pairs of diagrams"""

    def to_text(self) -> str:
        return "\n".join(
            f"{format_coefficient(c)} {left.to_json()} ⊗ {right.to_json()}"
            for (left, right), c in self.items()
        )


Element = Union[BDiagram, DiagramSum]
Endomorphism = Callable[[BDiagram], DiagramSum]


## ==========================================================================
## Product

def star(x: Element, y: Element) -> DiagramSum:
    """
    The ⋆ product, bilinear extension of star_expand

    Args:
        x: Lower factor
        y: Upper factor

    Returns:
        DiagramSum: Σ c·d·(all compositions of g with h) over the terms c·g of x and d·h of y
    """
    x, y = DiagramSum.of(x), DiagramSum.of(y)
    result = DiagramSum()
    for g, c in x.terms.items():
        for h, d in y.terms.items():
            coef = c * d
            for term in star_expand(g, h):
                result.add_term(term, coef)
    return result


def star_product(factors: Iterable[Element]) -> DiagramSum:
    """Left fold of ⋆; the empty product is ε"""
    result = DiagramSum.basis(EMPTY_DIAGRAM)
    for factor in factors:
        result = star(result, factor)
    return result


def bracket(x: Element, y: Element) -> DiagramSum:
    """Lie bracket x⋆y − y⋆x"""
    return star(x, y) - star(y, x)


def tensor_star(X: TensorSum, Y: TensorSum) -> TensorSum:
    """(x₁⊗x₂)⋆(y₁⊗y₂) = (x₁⋆y₁)⊗(x₂⋆y₂), extended bilinearly"""
    result = TensorSum()
    for (x1, x2), c in X.terms.items():
        for (y1, y2), d in Y.terms.items():
            left = star(x1, y1)
            right = star(x2, y2)
            for l, lc in left.terms.items():
                for r, rc in right.terms.items():
                    result.add_term((l, r), c * d * lc * rc)
    return result


## ==========================================================================
## Coproduct and counit

@lru_cache(maxsize=None)
def _split_components(g: BDiagram) -> Tuple[Tuple[BDiagram, BDiagram], ...]:
    components = g.connected_components()
    everything = set(range(1, g.n + 1))
    pairs = []
    for mask in range(1 << len(components)):
        chosen = sorted(v for idx, comp in enumerate(components) if mask >> idx & 1 for v in comp)
        rest = sorted(everything.difference(chosen))
        pairs.append((g.subdiagram(chosen), g.subdiagram(rest)))
    return tuple(pairs)


def coproduct(x: Element) -> TensorSum:
    """
    Δ: sum over all ways of splitting the connected components into two groups

    A diagram with c components gives 2^c tensor terms; Δ(ε) = ε⊗ε.
    """
    result = TensorSum()
    for g, c in DiagramSum.of(x).terms.items():
        for pair in _split_components(g):
            result.add_term(pair, c)
    return result


def reduced_coproduct(x: Element) -> TensorSum:
    """Δ(x) − x⊗ε − ε⊗x"""
    x = DiagramSum.of(x)
    result = coproduct(x)
    for g, c in x.terms.items():
        result.add_term((g, EMPTY_DIAGRAM), -c)
        result.add_term((EMPTY_DIAGRAM, g), -c)
    return result


def counit(x: Element) -> Fraction:
    """Coefficient of ε"""
    return Fraction(DiagramSum.of(x).coefficient(EMPTY_DIAGRAM))


def is_primitive(x: Element) -> bool:
    """True iff Δ(x) = x⊗ε + ε⊗x"""
    return not reduced_coproduct(x)


## ==========================================================================
## Convolution

def identity_map(g: BDiagram) -> DiagramSum:
    return DiagramSum.basis(g)


def xi_map(g: BDiagram) -> DiagramSum:
    """ξ = η∘ε, the projection onto span(ε) and the unit of convolution"""
    return DiagramSum.basis(EMPTY_DIAGRAM) if g.is_empty else DiagramSum()


def augmentation_map(g: BDiagram) -> DiagramSum:
    """Id − ξ"""
    return DiagramSum() if g.is_empty else DiagramSum.basis(g)


def apply_map(f: Endomorphism, x: Element) -> DiagramSum:
    """Linear extension of a basis-indexed map"""
    result = DiagramSum()
    for g, c in DiagramSum.of(x).terms.items():
        for h, d in f(g).terms.items():
            result.add_term(h, c * d)
    return result


def convolve(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """
    The convolution f∗g = μ∘(f⊗g)∘Δ

    The returned map memoizes its values per basis diagram; callers must treat the
    returned sums as read-only.
    """
    @lru_cache(maxsize=None)
    def convolved(d: BDiagram) -> DiagramSum:
        result = DiagramSum()
        for left, right in _split_components(d):
            fl = f(left)
            if not fl:
                continue
            gr = g(right)
            if not gr:
                continue
            result = result + star(fl, gr)
        return result

    return convolved


def convolution_power(f: Endomorphism, k: int) -> Endomorphism:
    """f^{∗k}; the zeroth power is ξ"""
    if k < 0:
        raise HopfError(f"negative convolution power {k}")
    power: Endomorphism = xi_map
    for _ in range(k):
        power = convolve(power, f)
    return power


def eulerian(g: BDiagram) -> DiagramSum:
    """
    Eulerian idempotent π₁(G) = Σ_{k=1}^{c} ((−1)^{k+1}/k)·(Id−ξ)^{∗k}(G)

    The series stops at the number c of connected components, beyond which every
    convolution power of Id−ξ vanishes on G.

    Raises:
        HopfError: For the empty diagram
    """
    if g.is_empty:
        raise HopfError("the Eulerian idempotent is not defined on the empty diagram")
    c = len(g.connected_components())
    result = DiagramSum()
    power: Endomorphism = augmentation_map
    for k in range(1, c + 1):
        result = result + Fraction((-1) ** (k + 1), k) * power(g)
        if k < c:
            power = convolve(power, augmentation_map)
    logger.debug(f"eulerian: {c} components, {len(result)} terms")
    return result


def eulerian_map(g: BDiagram) -> DiagramSum:
    """π₁ as an endomorphism (zero on ε)"""
    return DiagramSum() if g.is_empty else eulerian(g)


def primitive_rank(diagrams: Iterable[BDiagram]) -> int:
    """
    Dimension of the span of π₁ over the given diagrams

    Args:
        diagrams: Typically every diagram of one weight p, so that the result is
            the dimension of the primitive part of ℬ_p

    Returns:
        int: Exact rank over ℚ
    """
    images = [eulerian(g) for g in diagrams if not g.is_empty]
    if not images:
        return 0
    columns = sorted({h for image in images for h in image.terms})
    index = {h: j for j, h in enumerate(columns)}
    rows = []
    for image in images:
        row = [QQ.zero] * len(columns)
        for h, c in image.terms.items():
            row[index[h]] = QQ(c.numerator, c.denominator)
        rows.append(row)
    matrix = DomainMatrix(rows, (len(rows), len(columns)), QQ)
    return matrix.rank()
