#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./tests/test_fusion.py

import pytest
from hypothesis import given

from conftest import diagrams, diagrams_of_weight
from diagram import BDiagram, EMPTY_DIAGRAM, star_expand
from fusion import (FusionError, FusionLetter, FusionMonomial, FusionSum, UNIT, diagram_of, fstar,
                    fusion_letters_text, monomial_size, monomial_weight, shift, word_of, words_of)


def test_word_of_chained(chained):
    assert fusion_letters_text(word_of(chained)) == (
        "R>((1,1)(3,6)) R>((1,2)(2,4)(3,5)) R>((1,3)) "
        "B((1,1)(3,6))> B((1,2)(2,4)(3,5))< B((1,3))<"
    )


def test_cut_start_renders_as_closed_red_letter():
    g = BDiagram(1, (1,), (), (), ())
    assert word_of(g).to_text() == "R<((1,1)) B((1,1))>"


def test_unit_word():
    assert word_of(EMPTY_DIAGRAM) == UNIT
    assert UNIT.to_text() == "1"
    assert diagram_of(UNIT) == EMPTY_DIAGRAM
    assert monomial_size(UNIT) == monomial_weight(UNIT) == 0


def test_size_and_weight(chained):
    word = word_of(chained)
    assert monomial_size(word) == chained.n
    assert monomial_weight(word) == chained.weight
    assert shift(word, 2, 5).letters[0].seq == ((3, 6), (5, 11))


@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_round_trip_for_every_diagram(p):
    for g in diagrams_of_weight(p):
        assert diagram_of(word_of(g)) == g


@pytest.mark.slow
def test_round_trip_weight_four():
    for g in diagrams_of_weight(4):
        assert diagram_of(word_of(g)) == g


def test_word_of_is_injective_on_weight_two():
    words = [word_of(g) for g in diagrams_of_weight(2)]
    assert len(set(words)) == len(words) == 36


@given(diagrams(2), diagrams(2))
def test_word_realization_is_a_morphism(g, h):
    assert fstar(word_of(g), word_of(h)) == words_of(star_expand(g, h))


def test_fstar_unit(chained):
    word = word_of(chained)
    assert fstar(UNIT, word) == FusionSum.basis(word)
    assert fstar(word, UNIT) == FusionSum.basis(word)


def test_fstar_is_bilinear(chained, two_component):
    u, v = word_of(chained), word_of(two_component)
    both = FusionSum({u: 1, v: 2})
    assert fstar(both, u) == fstar(u, u) + 2 * fstar(v, u)


@pytest.mark.parametrize("letters", [
    # slot 1 missing
    (FusionLetter(((1, 2),), True, True),),
    # vertex labels skip 2
    (FusionLetter(((1, 1),), True, True), FusionLetter(((3, 2),), True, True)),
    # a path that goes down
    (FusionLetter(((2, 2), (1, 1)), True, True),),
])
def test_diagram_of_rejects_inconsistent_words(letters):
    with pytest.raises(FusionError):
        diagram_of(FusionMonomial.of(letters))
