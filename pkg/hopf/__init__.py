#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The algebra ℬ of B-diagrams with exact rational coefficients.

Main components:
    * LinearCombination - sparse exact-coefficient vectors shared by every algebra in the project
    * DiagramSum, TensorSum - elements of ℬ and ℬ⊗ℬ
    * star, coproduct, counit - the bialgebra structure
    * convolve, eulerian, is_primitive - convolution and primitive elements
"""

from .LinearCombination import LinearCombination, format_coefficient, integral_coefficient
from .DiagramAlgebra import (
    HopfError,
    DiagramSum,
    TensorSum,
    star,
    star_product,
    bracket,
    tensor_star,
    coproduct,
    reduced_coproduct,
    counit,
    is_primitive,
    identity_map,
    xi_map,
    augmentation_map,
    apply_map,
    convolve,
    convolution_power,
    eulerian,
    eulerian_map,
    primitive_rank,
)

__all__ = [
    'LinearCombination',
    'format_coefficient',
    'integral_coefficient',
    'HopfError',
    'DiagramSum',
    'TensorSum',
    'star',
    'star_product',
    'bracket',
    'tensor_star',
    'coproduct',
    'reduced_coproduct',
    'counit',
    'is_primitive',
    'identity_map',
    'xi_map',
    'augmentation_map',
    'apply_map',
    'convolve',
    'convolution_power',
    'eulerian',
    'eulerian_map',
    'primitive_rank',
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
