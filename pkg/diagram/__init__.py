#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
B-diagram value type and structural queries.

Main components:
    * BDiagram - immutable canonical 5-tuple (n, λ, E↑, E↓, E)
    * DiagramStats, DecoratedPath - statistics and decorated paths
    * validate, check_diagram - construction from raw tuples with clause-level errors
    * compose, juxtapose, star_expand - the monoid and the ⋆ expansion
    * from_json, from_dict - the JSON interchange format
"""

from .BDiagram import (
    BDiagram,
    DiagramStats,
    DecoratedPath,
    DiagramCheck,
    DiagramClause,
    DiagramError,
    EMPTY_DIAGRAM,
    validate,
    check_diagram,
    compose,
    juxtapose,
    iter_compositions,
    star_expand,
    from_dict,
    from_json,
)

__all__ = [
    'BDiagram',
    'DiagramStats',
    'DecoratedPath',
    'DiagramCheck',
    'DiagramClause',
    'DiagramError',
    'EMPTY_DIAGRAM',
    'validate',
    'check_diagram',
    'compose',
    'juxtapose',
    'iter_compositions',
    'star_expand',
    'from_dict',
    'from_json',
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
