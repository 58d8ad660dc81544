#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./tests/test_hopf.py

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import diagrams, diagrams_of_weight, nonempty_diagrams
from diagram import BDiagram, EMPTY_DIAGRAM
from enumeration import primitive_dimensions
from hopf import (DiagramSum, HopfError, LinearCombination, TensorSum, augmentation_map, bracket,
                  convolution_power, convolve, coproduct, counit, eulerian, format_coefficient, identity_map,
                  is_primitive, primitive_rank, reduced_coproduct, star, star_product, tensor_star, xi_map)

HALF_OPEN_VERTEX = BDiagram(1, (2,), (1,), (1, 2), ())
OPEN_VERTEX = BDiagram(1, (2,), (1, 2), (1, 2), ())


## ==========================================================================
## Linear combinations

def test_linear_combination_drops_cancelled_terms():
    x = LinearCombination({"a": 1, "b": Fraction(1, 2)})
    y = LinearCombination({"b": Fraction(-1, 2)})
    assert (x + y).terms == {"a": 1}
    assert (x - x) == 0
    assert not (x - x)
    assert (2 * x).coefficient("b") == 1
    assert x.coefficient("missing") == 0


def test_format_coefficient():
    assert format_coefficient(3) == "3"
    assert format_coefficient(Fraction(-1, 2)) == "-1/2"
    assert format_coefficient(Fraction(4, 2)) == "2"


## ==========================================================================
## Product

def test_half_open_square_has_three_terms():
    product = star(HALF_OPEN_VERTEX, HALF_OPEN_VERTEX)
    assert len(product) == 3
    assert all(c == 1 for _, c in product.items())


def test_open_square_has_seven_terms():
    product = star(OPEN_VERTEX, OPEN_VERTEX)
    assert len(product) == 7
    assert sorted(len(g.edges) for g in product) == [0, 1, 1, 1, 1, 2, 2]


@given(diagrams(3))
def test_empty_diagram_is_the_unit(g):
    assert star(EMPTY_DIAGRAM, g) == DiagramSum.basis(g)
    assert star(g, EMPTY_DIAGRAM) == DiagramSum.basis(g)


@given(diagrams(1), diagrams(2), diagrams(1))
def test_star_is_associative(x, y, z):
    assert star(star(x, y), z) == star(x, star(y, z))


@given(diagrams(2), diagrams(2))
def test_star_is_triangular(g, h):
    product = star(g, h)
    juxtaposed = g | h
    assert product.coefficient(juxtaposed) == 1
    limit = len(g.connected_components()) + len(h.connected_components())
    assert len(juxtaposed.connected_components()) == limit
    for term in product:
        if term != juxtaposed:
            assert len(term.connected_components()) < limit


def test_star_is_bilinear():
    a = BDiagram(1, (1,), (1,), (), ())
    b = BDiagram(1, (1,), (), (1,), ())
    x = DiagramSum({a: Fraction(1, 2), b: 3})
    assert star(x, b) == Fraction(1, 2) * star(a, b) + 3 * star(b, b)


def test_star_product_of_nothing_is_unit():
    assert star_product([]) == DiagramSum.basis(EMPTY_DIAGRAM)
    assert star_product([OPEN_VERTEX, OPEN_VERTEX]) == star(OPEN_VERTEX, OPEN_VERTEX)


def test_bracket_is_antisymmetric():
    a = BDiagram(1, (1,), (1,), (), ())
    b = BDiagram(1, (1,), (), (1,), ())
    assert bracket(a, b) == -bracket(b, a)
    assert bracket(a, a) == 0
    # a has a free outer half-edge and b a free inner one; only a⋆b can connect them
    connected = BDiagram(2, (1, 1), (1,), (2,), ((1, 2),))
    assert bracket(a, b) == DiagramSum({a | b: 1, connected: 1, b | a: -1})


def test_graded_part():
    x = DiagramSum({HALF_OPEN_VERTEX: 1, EMPTY_DIAGRAM: 2})
    assert x.graded_part(2) == DiagramSum.basis(HALF_OPEN_VERTEX)
    assert x.weights() == [0, 2]


## ==========================================================================
## Coproduct and counit

def test_coproduct_of_connected_diagram(chained):
    delta = coproduct(chained)
    assert delta == TensorSum({(chained, EMPTY_DIAGRAM): 1, (EMPTY_DIAGRAM, chained): 1})
    assert is_primitive(chained)
    assert not reduced_coproduct(chained)


def test_coproduct_splits_components(two_component):
    delta = coproduct(two_component)
    left = two_component.subdiagram([1, 3])
    right = two_component.subdiagram([2, 4])
    assert len(delta) == 4
    assert delta.coefficient((left, right)) == 1
    assert delta.coefficient((right, left)) == 1
    assert not is_primitive(two_component)


def test_coproduct_of_unit():
    assert coproduct(EMPTY_DIAGRAM) == TensorSum.basis((EMPTY_DIAGRAM, EMPTY_DIAGRAM))
    assert counit(EMPTY_DIAGRAM) == 1
    assert counit(HALF_OPEN_VERTEX) == 0
    assert counit(DiagramSum({EMPTY_DIAGRAM: Fraction(3, 4), HALF_OPEN_VERTEX: 5})) == Fraction(3, 4)


@given(diagrams(3))
def test_coproduct_is_cocommutative_and_counital(g):
    delta = coproduct(g)
    assert TensorSum({(r, l): c for (l, r), c in delta.terms.items()}) == delta
    left, right = DiagramSum(), DiagramSum()
    for (l, r), c in delta.terms.items():
        left.add_term(l, c * counit(r))
        right.add_term(r, c * counit(l))
    assert left == right == DiagramSum.basis(g)


@given(diagrams(3))
def test_coproduct_is_coassociative(g):
    left, right = LinearCombination(), LinearCombination()
    for (a, b), c in coproduct(g).terms.items():
        for (a1, a2), d in coproduct(a).terms.items():
            left.add_term((a1, a2, b), c * d)
        for (b1, b2), d in coproduct(b).terms.items():
            right.add_term((a, b1, b2), c * d)
    assert left == right


@given(diagrams(2), diagrams(2))
def test_coproduct_is_multiplicative(x, y):
    assert coproduct(star(x, y)) == tensor_star(coproduct(x), coproduct(y))


def test_bialgebra_law_on_every_weight_two_pair():
    twos = diagrams_of_weight(2)
    for x in twos:
        for y in twos:
            assert coproduct(star(x, y)) == tensor_star(coproduct(x), coproduct(y))
            for z in diagrams_of_weight(1):
                assert star(star(x, y), z) == star(x, star(y, z))


## ==========================================================================
## Convolution and primitives

def test_convolution_basics(two_component):
    assert convolution_power(identity_map, 0) is xi_map
    assert xi_map(EMPTY_DIAGRAM) == DiagramSum.basis(EMPTY_DIAGRAM)
    assert augmentation_map(EMPTY_DIAGRAM) == 0
    # (Id − ξ)^{∗2} on a two-component diagram: both ordered splittings into nonempty parts
    square = convolution_power(augmentation_map, 2)(two_component)
    left, right = two_component.subdiagram([1, 3]), two_component.subdiagram([2, 4])
    assert square == star(left, right) + star(right, left)
    with pytest.raises(HopfError):
        convolution_power(identity_map, -1)


@given(diagrams(3))
def test_xi_is_the_convolution_unit(g):
    assert convolve(xi_map, identity_map)(g) == DiagramSum.basis(g)
    assert convolve(identity_map, xi_map)(g) == DiagramSum.basis(g)


@given(diagrams(3))
def test_augmentation_powers_vanish_past_the_component_count(g):
    c = len(g.connected_components())
    if c:
        assert convolution_power(augmentation_map, c)(g)
    assert convolution_power(augmentation_map, c + 1)(g) == 0
    assert convolution_power(augmentation_map, c + 2)(g) == 0


def test_eulerian_fixes_connected_diagrams(chained):
    assert eulerian(chained) == DiagramSum.basis(chained)


def test_eulerian_half_coefficients(three_vertex_example):
    b, x, y = three_vertex_example
    image = eulerian(b)
    assert image.coefficient(b) == 1
    assert image.coefficient(x) == Fraction(-1, 2)
    assert image.coefficient(y) == Fraction(-1, 2)
    assert is_primitive(image)


def test_eulerian_of_empty_diagram_is_undefined():
    with pytest.raises(HopfError):
        eulerian(EMPTY_DIAGRAM)


@given(nonempty_diagrams(3))
def test_eulerian_image_is_primitive(g):
    assert is_primitive(eulerian(g))


@given(nonempty_diagrams(2))
def test_eulerian_is_idempotent(g):
    image = eulerian(g)
    again = DiagramSum()
    for h, c in image.items():
        again = again + c * eulerian(h)
    assert again == image


@given(nonempty_diagrams(2), nonempty_diagrams(2))
def test_bracket_of_primitives_is_primitive(g, h):
    assert is_primitive(bracket(eulerian(g), eulerian(h)))


@pytest.mark.parametrize("p", [1, 2])
def test_primitive_rank_matches_free_lie_dimensions(p):
    assert primitive_rank(diagrams_of_weight(p)) == primitive_dimensions(p)[p]


def test_primitive_rank_values():
    assert primitive_rank(diagrams_of_weight(1)) == 4
    assert primitive_rank(diagrams_of_weight(2)) == 26
    assert primitive_rank([]) == 0


@pytest.mark.slow
def test_primitive_rank_weight_three():
    assert primitive_rank(diagrams_of_weight(3)) == primitive_dimensions(3)[3]


@pytest.mark.slow
def test_every_weight_four_image_is_primitive():
    for g in diagrams_of_weight(4):
        assert is_primitive(eulerian(g))
