#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./fusion/FusionWords.py

"""
Path-word realization of the diagram algebra

This module contains:
1. FusionLetter / FusionMonomial - canonical path-words, one letter per decorated path
2. FusionSum - exact combinations of path-words
3. word_of / diagram_of - the encoding of a diagram and its inverse
4. shift / fstar - the shifted product computed by the pairing expansion

Only canonical path-words are represented. Each letter stands for the pair formed by a
red letter (carrying the start decoration) and a blue letter (carrying the end
decoration); red letters commute among themselves and so do blue ones, so sorting the
letters by first slot gives a normal form.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Tuple, Union

from diagram import BDiagram, DiagramError, EMPTY_DIAGRAM
from hopf import LinearCombination, format_coefficient

logger = logging.getLogger(__name__)

SeqEntry = Tuple[int, int]


class FusionError(ValueError):
    """Raised when a monomial cannot be decoded into a diagram"""


@dataclass(frozen=True, order=True)
class FusionLetter:
    """A decorated path: its (vertex, slot) sequence and endpoint flags"""
    seq: Tuple[SeqEntry, ...]
    start_free: bool
    end_free: bool

    @property
    def first_slot(self) -> int:
        return self.seq[0][1]

    def shifted(self, dv: int, ds: int) -> "FusionLetter":
        return FusionLetter(tuple((v + dv, s + ds) for v, s in self.seq), self.start_free, self.end_free)

    def red_text(self) -> str:
        return f"R{'>' if self.start_free else '<'}({_seq_text(self.seq)})"

    def blue_text(self) -> str:
        return f"B({_seq_text(self.seq)}){'<' if self.end_free else '>'}"


def _seq_text(seq: Iterable[SeqEntry]) -> str:
    return "".join(f"({v},{s})" for v, s in seq)


@dataclass(frozen=True, order=True)
class FusionMonomial:
    """A multiset of letters kept sorted by first slot; the empty monomial is the unit"""
    letters: Tuple[FusionLetter, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[FusionLetter]) -> "FusionMonomial":
        return cls(tuple(sorted(letters, key=lambda letter: letter.first_slot)))

    @property
    def is_unit(self) -> bool:
        return not self.letters

    @property
    def size(self) -> int:
        """|u|, the largest vertex label (0 for the unit)"""
        return max((v for letter in self.letters for v, _ in letter.seq), default=0)

    @property
    def weight(self) -> int:
        """ω(u), the largest slot label (0 for the unit)"""
        return max((s for letter in self.letters for _, s in letter.seq), default=0)

    def to_text(self) -> str:
        """All red letters, then all blue letters, each in canonical order"""
        if self.is_unit:
            return "1"
        reds = [letter.red_text() for letter in self.letters]
        blues = [letter.blue_text() for letter in self.letters]
        return " ".join(reds + blues)


UNIT = FusionMonomial()


class FusionSum(LinearCombination[FusionMonomial]):
    """Exact combination of canonical path-words"""

    def to_text(self) -> str:
        return "\n".join(f"{format_coefficient(c)} {m.to_text()}" for m, c in self.items())


def monomial_weight(m: FusionMonomial) -> int:
    return m.weight


def monomial_size(m: FusionMonomial) -> int:
    return m.size


## ==========================================================================
## Encoding and decoding

def word_of(g: BDiagram) -> FusionMonomial:
    """w(G): one letter per path of G"""
    return FusionMonomial(tuple(FusionLetter(p.seq, p.start_free, p.end_free) for p in g.paths()))


def diagram_of(m: FusionMonomial) -> BDiagram:
    """
    Decodes a canonical path-word back to its diagram

    Args:
        m: A monomial satisfying the path-word invariants

    Returns:
        BDiagram: The unique G with word_of(G) = m

    Raises:
        FusionError: On gaps in the slot labeling, inconsistent vertices or non-increasing seqs
    """
    entries = [entry for letter in m.letters for entry in letter.seq]
    if not entries:
        return EMPTY_DIAGRAM

    by_slot = sorted(entries, key=lambda e: e[1])
    slots = [s for _, s in by_slot]
    if slots != list(range(1, len(slots) + 1)):
        raise FusionError(f"slot labels {slots} are not exactly 1..{len(slots)}")

    vertices = [v for v, _ in by_slot]
    if vertices[0] != 1 or any(b - a not in (0, 1) for a, b in zip(vertices, vertices[1:])):
        raise FusionError(f"vertex labels {vertices} do not number consecutive slot blocks from 1")

    lam = [0] * vertices[-1]
    for v in vertices:
        lam[v - 1] += 1

    up, down, edges = [], [], []
    for letter in m.letters:
        seq = letter.seq
        for (v1, s1), (v2, s2) in zip(seq, seq[1:]):
            if v2 <= v1 or s2 <= s1:
                raise FusionError(f"letter {_seq_text(seq)} is not increasing at ({v1},{s1})({v2},{s2})")
            edges.append((s1, s2))
            up.append(s1)
            down.append(s2)
        if letter.start_free:
            down.append(seq[0][1])
        if letter.end_free:
            up.append(seq[-1][1])

    try:
        return BDiagram(len(lam), tuple(lam), up, down, edges)
    except DiagramError as e:
        raise FusionError(f"monomial does not describe a B-diagram: {e}") from e


## ==========================================================================
## Shifted product

def shift(m: FusionMonomial, dv: int, ds: int) -> FusionMonomial:
    """Adds dv to every vertex and ds to every slot"""
    return FusionMonomial(tuple(letter.shifted(dv, ds) for letter in m.letters))


def iter_fstar(u: FusionMonomial, v: FusionMonomial) -> Iterator[FusionMonomial]:
    """
    Yields the terms of u ⋆ v in generation order

    v is shifted past u; then every k-subset of u's end-free letters is paired
    injectively with v's start-free letters, k ascending. A pair concatenates the two
    seqs, keeping the start flag of the u-letter and the end flag of the v-letter.
    """
    lifted = shift(v, u.size, u.weight)
    lower, upper = u.letters, lifted.letters
    ends = [i for i, letter in enumerate(lower) if letter.end_free]
    starts = [j for j, letter in enumerate(upper) if letter.start_free]
    for k in range(min(len(ends), len(starts)) + 1):
        for chosen in combinations(ends, k):
            for targets in permutations(starts, k):
                merged = [
                    FusionLetter(lower[i].seq + upper[j].seq, lower[i].start_free, upper[j].end_free)
                    for i, j in zip(chosen, targets)
                ]
                kept = [letter for i, letter in enumerate(lower) if i not in chosen]
                kept += [letter for j, letter in enumerate(upper) if j not in targets]
                yield FusionMonomial.of(kept + merged)


def fstar(u: Union[FusionMonomial, FusionSum], v: Union[FusionMonomial, FusionSum]) -> FusionSum:
    """The shifted product, extended bilinearly to FusionSum"""
    left = FusionSum.basis(u) if isinstance(u, FusionMonomial) else u
    right = FusionSum.basis(v) if isinstance(v, FusionMonomial) else v
    result = FusionSum()
    for a, c in left.terms.items():
        for b, d in right.terms.items():
            for term in iter_fstar(a, b):
                result.add_term(term, c * d)
    return result


def words_of(terms: Iterable[BDiagram]) -> FusionSum:
    """Σ word_of over a collection of diagrams (with multiplicity)"""
    result = FusionSum()
    for g in terms:
        result.add_term(word_of(g), 1)
    return result


def fusion_letters_text(m: FusionMonomial) -> str:
    return m.to_text()
