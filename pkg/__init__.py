#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Hopf algebra of B-diagrams.

B-diagrams are directed graphs on ordered vertices with numbered half-edge slots.
They encode the normal ordering of words in the creation and annihilation operators. This package
implements their algebra and everything around it:
    * a ⋆ product, an unshuffle coproduct over connected components and primitive elements
    * the fusion-word realization
    * the projection onto the Heisenberg–Weyl algebra and generalized Stirling numbers
    * enumeration by weight, cross-checked against a counting recurrence
    * the sub-algebras of set partitions (WSym) and set partitions into lists (BWSym)

Main components:
    * diagram - the B-diagram type, composition and statistics
    * hopf - linear combinations, ⋆, Δ, ε and the Eulerian idempotent
    * fusion - fusion words and the word realization
    * heisenberg - operator expressions, normal ordering and Stirling numbers
    * enumeration - diagrams by weight and the counting recurrence
    * partitions - WSym and BWSym
    * config - configuration from defaults, files and BDIAG_ environment variables
    * visualisering - logging and terminal output
    * cli - the `bdiagram` command line
"""

from config import *
from visualisering import *
from diagram import *
from hopf import *
from fusion import *
from heisenberg import *
from enumeration import *
from partitions import *
from cli import *

# Version information
__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
