#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./enumeration/DiagramEnumerator.py

"""
Exhaustive enumeration of B-diagrams and the counting recurrence

This module contains:
1. DiagramEnumerator - sharded brute-force generation of every diagram of a weight
2. CountTable / d_table / alpha - the d_{p,q} recurrence and its row sums
3. CrosscheckReport / crosscheck - brute force against the recurrence
4. indivisible_counts, monoid_census, primitive_dimensions - free monoid and free Lie
   algebra bookkeeping derived from the counts

Generation order is deterministic: compositions λ of p sorted colexicographically
(by reversed tuple), then E↑ and E↓ as ascending bitmasks, then matchings with the
sources taken in increasing order, each source first left unmatched and then matched
to its candidate targets in increasing order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from sympy import divisors, mobius

from diagram import BDiagram
from visualisering import as_category_logger

logger = logging.getLogger(__name__)

MAX_WEIGHT = 7


## ==========================================================================
## Generation

def compositions(p: int) -> List[Tuple[int, ...]]:
    """All compositions of p, colexicographically ordered; [()] for p = 0"""
    if p == 0:
        return [()]
    result = []
    for mask in range(1 << (p - 1)):
        parts, run = [], 1
        for bit in range(p - 1):
            if mask >> bit & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        result.append(tuple(parts))
    return sorted(result, key=lambda c: tuple(reversed(c)))


def _vertex_table(lam: Tuple[int, ...]) -> List[int]:
    return [0] + [v for v, size in enumerate(lam, start=1) for _ in range(size)]


def _bits(mask: int, p: int) -> Tuple[int, ...]:
    return tuple(k + 1 for k in range(p) if mask >> k & 1)


def iter_matchings(sources: Tuple[int, ...], candidates: Dict[int, List[int]]) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """
    Every partial injective matching of sources into their candidate targets

    Args:
        sources: Source slots in increasing order
        candidates: Admissible targets per source, increasing

    Returns:
        Iterator of edge tuples sorted by source
    """
    used = set()
    chosen: List[Tuple[int, int]] = []

    def extend(idx: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
        if idx == len(sources):
            yield tuple(chosen)
            return
        a = sources[idx]
        yield from extend(idx + 1)
        for b in candidates[a]:
            if b in used:
                continue
            used.add(b)
            chosen.append((a, b))
            yield from extend(idx + 1)
            chosen.pop()
            used.discard(b)

    return extend(0)


def _iter_shard(lam: Tuple[int, ...]) -> Iterator[BDiagram]:
    p = sum(lam)
    vertex = _vertex_table(lam)
    n = len(lam)
    for up_mask in range(1 << p):
        up = _bits(up_mask, p)
        for down_mask in range(1 << p):
            down = _bits(down_mask, p)
            candidates = {a: [b for b in down if vertex[b] > vertex[a]] for a in up}
            for edges in iter_matchings(up, candidates):
                yield BDiagram._trusted(n, lam, up, down, edges)


def _shard_list(lam: Tuple[int, ...]) -> List[BDiagram]:
    return list(_iter_shard(lam))


def _shard_histogram(lam: Tuple[int, ...]) -> Dict[int, int]:
    """hf↑ histogram of one shard; hf↑ = |E↑| − |E| since every source lies in E↑"""
    p = sum(lam)
    vertex = _vertex_table(lam)
    counts: Dict[int, int] = {}
    for up_mask in range(1 << p):
        up = _bits(up_mask, p)
        for down_mask in range(1 << p):
            down = _bits(down_mask, p)
            candidates = {a: [b for b in down if vertex[b] > vertex[a]] for a in up}
            for edges in iter_matchings(up, candidates):
                q = len(up) - len(edges)
                counts[q] = counts.get(q, 0) + 1
    return counts


@dataclass
class CrosscheckReport:
    """Brute-force histogram against the recurrence row for one weight"""
    p: int
    brute: List[int] = field(default_factory=list)
    recurrence: List[int] = field(default_factory=list)
    mismatches: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return not self.mismatches

    @property
    def total(self) -> int:
        return sum(self.brute)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "brute": self.brute,
            "recurrence": self.recurrence,
            "total": self.total,
            "mismatches": [{"q": q, "brute": b, "recurrence": r} for q, b, r in self.mismatches],
            "matches": self.matches,
        }

    def __bool__(self) -> bool:
        return self.matches


class DiagramEnumerator:
    """
    Brute-force enumerator sharded by composition λ

    With workers > 1 the shards run in a process pool; executor.map keeps the shard
    order, so the merged stream is identical for every worker count.
    """

    def __init__(self, workers: int = 1, logger: Optional[logging.Logger] = None,
                 progress: Optional[Callable[[int], None]] = None):
        """
        Args:
            workers: Number of worker processes, 1 runs in-process
            logger: Logger for shard progress
            progress: Called with 1 after each finished shard
        """
        if workers < 1:
            raise ValueError(f"workers must be ≥ 1, got {workers}")
        self.workers = workers
        self.logger = as_category_logger(logger or logging.getLogger(__name__))
        self.progress = progress

    def _check_weight(self, p: int) -> None:
        if not 0 <= p <= MAX_WEIGHT:
            raise ValueError(f"weight {p} outside 0..{MAX_WEIGHT}")

    def _map_shards(self, fn: Callable[[Tuple[int, ...]], Any], shards: List[Tuple[int, ...]]) -> Iterator[Any]:
        if self.workers == 1:
            for lam in shards:
                yield fn(lam)
            return
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            yield from executor.map(fn, shards)

    def enumerate(self, p: int) -> Iterator[BDiagram]:
        """Every diagram of weight p exactly once, in the documented order"""
        self._check_weight(p)
        shards = compositions(p)
        self.logger.enumeration(f"Enumerating weight {p} over {len(shards)} shards with {self.workers} worker(s)")
        if self.workers == 1:
            for lam in shards:
                yield from _iter_shard(lam)
                self._tick()
            return
        for shard in self._map_shards(_shard_list, shards):
            yield from shard
            self._tick()

    def histogram(self, p: int, key: Optional[Callable[[BDiagram], int]] = None) -> Dict[int, int]:
        """
        Brute-force histogram of a statistic over all diagrams of weight p

        Args:
            p: Weight
            key: Statistic to bin by; hf↑ when omitted (served by the fast shard path)

        Returns:
            Dict[int, int]: value → number of diagrams, sorted by value
        """
        self._check_weight(p)
        counts: Dict[int, int] = {}
        if key is None:
            shards = compositions(p)
            for partial in self._map_shards(_shard_histogram, shards):
                for q, c in partial.items():
                    counts[q] = counts.get(q, 0) + c
                self._tick()
        else:
            for g in self.enumerate(p):
                value = key(g)
                counts[value] = counts.get(value, 0) + 1
        return dict(sorted(counts.items()))

    def crosscheck(self, p: int, brute: Optional[List[int]] = None) -> CrosscheckReport:
        """
        Compares the hf↑ histogram of weight p with row p of the recurrence

        Args:
            p: Weight
            brute: An already counted histogram row; enumerated when omitted
        """
        if brute is None:
            brute_counts = self.histogram(p)
            brute = [brute_counts.get(q, 0) for q in range(p + 1)]
        recurrence = d_table(p).row(p)
        report = CrosscheckReport(p=p, brute=brute, recurrence=recurrence)
        for q, (b, r) in enumerate(zip(brute, recurrence)):
            if b != r:
                report.mismatches.append((q, b, r))
        if report.matches:
            self.logger.enumeration(f"Weight {p}: {report.total} diagrams, histogram matches the recurrence")
        else:
            self.logger.warning(f"Weight {p}: recurrence disagrees with brute force at {report.mismatches}")
        return report

    def _tick(self) -> None:
        if self.progress is not None:
            self.progress(1)


def enumerate_all(p: int, workers: int = 1) -> Iterator[BDiagram]:
    """Every B-diagram of weight p, each exactly once"""
    return DiagramEnumerator(workers=workers).enumerate(p)


def crosscheck(p: int, workers: int = 1) -> CrosscheckReport:
    return DiagramEnumerator(workers=workers).crosscheck(p)


## ==========================================================================
## The recurrence

@dataclass
class CountTable:
    """d_{p,q}: number of diagrams with ω = p and hf↑ = q"""
    p_max: int
    cells: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def get(self, p: int, q: int) -> int:
        return self.cells.get((p, q), 0)

    def row(self, p: int) -> List[int]:
        return [self.get(p, q) for q in range(p + 1)]

    def alpha(self, p: int) -> int:
        return sum(self.row(p))

    def rows(self) -> List[List[int]]:
        return [self.row(p) for p in range(self.p_max + 1)]


def d_table(p_max: int) -> CountTable:
    """
    d_{p,q} for p ≤ p_max by the recurrence

    The last vertex is an elementary diagram with i slots, j free inner half-edges and
    k free outer ones; ℓ of its inner half-edges attach to free outer half-edges of the
    remaining diagram:

        d_{p,q} = Σ_{i=1..p} Σ_{j=0..i} Σ_{k=0..i} Σ_{ℓ=0..j}
                  ℓ!·C(j,ℓ)·C(q−k+ℓ,ℓ)·C(i,j)·C(i,k)·d_{p−i,q−k+ℓ}

    with d_{0,0} = 1 and d_{p,q} = 0 outside 0 ≤ q ≤ p.
    """
    if p_max < 0:
        raise ValueError(f"p_max must be ≥ 0, got {p_max}")
    table = CountTable(p_max=p_max, cells={(0, 0): 1})
    for p in range(1, p_max + 1):
        for q in range(p + 1):
            total = 0
            for i in range(1, p + 1):
                for j in range(i + 1):
                    for k in range(i + 1):
                        for l in range(j + 1):
                            rest = q - k + l
                            if rest < 0:
                                continue
                            previous = table.get(p - i, rest)
                            if not previous:
                                continue
                            total += (factorial(l) * comb(j, l) * comb(rest, l)
                                      * comb(i, j) * comb(i, k) * previous)
            if total:
                table.cells[(p, q)] = total
    return table


def alpha(p: int) -> int:
    """α_p, the number of diagrams of weight p"""
    return d_table(p).alpha(p)


## ==========================================================================
## Free monoid and free Lie algebra bookkeeping

def indivisible_counts(p_max: int, workers: int = 1) -> List[int]:
    """Number of indivisible diagrams of each weight 0..p_max (brute force)"""
    enumerator = DiagramEnumerator(workers=workers)
    counts = [0]
    for p in range(1, p_max + 1):
        counts.append(sum(1 for g in enumerator.enumerate(p) if g.is_indivisible()))
    return counts


def monoid_census(indivisible: List[int]) -> List[int]:
    """Number of sequences of indivisibles of each total weight"""
    census = [1]
    for p in range(1, len(indivisible)):
        census.append(sum(indivisible[w] * census[p - w] for w in range(1, p + 1)))
    return census


def primitive_dimensions(p_max: int) -> List[int]:
    """
    Graded dimensions of the free Lie algebra on the indivisible diagrams

    With A(t) = Σ α_p t^p = ∏_m (1 − t^m)^{−L_m}, the numbers a_m = m·[t^m] log A(t)
    satisfy a_m = m·α_m − Σ_{j<m} a_j·α_{m−j}, and m·L_m = Σ_{d|m} μ(m/d)·a_d.

    Returns:
        List[int]: [0, L_1, …, L_{p_max}]
    """
    counts = d_table(p_max)
    alphas = [counts.alpha(p) for p in range(p_max + 1)]
    a = [0] * (p_max + 1)
    for m in range(1, p_max + 1):
        a[m] = m * alphas[m] - sum(a[j] * alphas[m - j] for j in range(1, m))
    dims = [0]
    for m in range(1, p_max + 1):
        value = Fraction(sum(int(mobius(m // d)) * a[d] for d in divisors(m)), m)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral Lie dimension {value} at weight {m}")
        dims.append(value.numerator)
    return dims
