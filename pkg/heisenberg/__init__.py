#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Heisenberg–Weyl algebra with the central letters e and e′.

Main components:
    * Atom, Product, Power - operator expressions in a and a†
    * NormalMonomial, NormalPoly - normal-ordered monomials and polynomials
    * project, mul - the morphism from diagrams and the multiplication formula
    * normal_order, stirling - normal ordering by three routes and generalized Stirling numbers
"""

from .OperatorExpr import (
    Atom,
    Product,
    Power,
    OperatorExpr,
    CREATE,
    ANNIHILATE,
    letters_of,
    factors_of,
    word_expr,
)
from .NormalOrdering import (
    HeisenbergError,
    Route,
    NormalMonomial,
    NormalPoly,
    UNIT_MONOMIAL,
    StirlingResult,
    project,
    project_sum,
    mul,
    mul_poly,
    specialize,
    vertex_diagram,
    vertex_monomial,
    rewrite_word,
    normal_order,
    stirling,
    stirling_triangle,
    generalized_bell,
    lah_number,
    poly_from_terms,
)

__all__ = [
    'Atom',
    'Product',
    'Power',
    'OperatorExpr',
    'CREATE',
    'ANNIHILATE',
    'letters_of',
    'factors_of',
    'word_expr',
    'HeisenbergError',
    'Route',
    'NormalMonomial',
    'NormalPoly',
    'UNIT_MONOMIAL',
    'StirlingResult',
    'project',
    'project_sum',
    'mul',
    'mul_poly',
    'specialize',
    'vertex_diagram',
    'vertex_monomial',
    'rewrite_word',
    'normal_order',
    'stirling',
    'stirling_triangle',
    'generalized_bell',
    'lah_number',
    'poly_from_terms',
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
