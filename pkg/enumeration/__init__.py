#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Enumeration and counting of B-diagrams.

Main components:
    * DiagramEnumerator - sharded brute-force generation
    * d_table, alpha - the d_{p,q} recurrence
    * crosscheck - brute force against the recurrence
    * indivisible_counts, monoid_census, primitive_dimensions - derived counts
"""

from .DiagramEnumerator import (
    MAX_WEIGHT,
    CountTable,
    CrosscheckReport,
    DiagramEnumerator,
    compositions,
    iter_matchings,
    enumerate_all,
    crosscheck,
    d_table,
    alpha,
    indivisible_counts,
    monoid_census,
    primitive_dimensions,
)

__all__ = [
    'MAX_WEIGHT',
    'CountTable',
    'CrosscheckReport',
    'DiagramEnumerator',
    'compositions',
    'iter_matchings',
    'enumerate_all',
    'crosscheck',
    'd_table',
    'alpha',
    'indivisible_counts',
    'monoid_census',
    'primitive_dimensions',
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
