#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Path-word realization ℱ_ℋ of the diagram algebra.

Main components:
    * FusionLetter, FusionMonomial, FusionSum - canonical path-words and their combinations
    * word_of, diagram_of - encoding and decoding
    * shift, fstar - the shifted product
"""

from .FusionWords import (
    FusionError,
    FusionLetter,
    FusionMonomial,
    FusionSum,
    UNIT,
    word_of,
    words_of,
    diagram_of,
    shift,
    iter_fstar,
    fstar,
    monomial_weight,
    monomial_size,
    fusion_letters_text,
)

__all__ = [
    'FusionError',
    'FusionLetter',
    'FusionMonomial',
    'FusionSum',
    'UNIT',
    'word_of',
    'words_of',
    'diagram_of',
    'shift',
    'iter_fstar',
    'fstar',
    'monomial_weight',
    'monomial_size',
    'fusion_letters_text',
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
