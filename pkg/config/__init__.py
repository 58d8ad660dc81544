#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Configuration for the B-diagram toolkit.

Main components:
    * ConfigManager - loads, overrides and validates the configuration
    * ValidationError - one failed configuration check
    * DEFAULT_CONFIG - values used when nothing overrides them

Values are read with dot paths such as "enumeration.workers" and can be overridden
from a YAML/JSON file or from BDIAG_* environment variables.
"""

from .ConfigManager import (
    ConfigManager,
    ValidationError,
    DEFAULT_CONFIG,
    LOG_LEVELS,
    SHIPPED_CONFIG_PATH
)

__all__ = [
    'ConfigManager',
    'ValidationError',
    'DEFAULT_CONFIG',
    'LOG_LEVELS',
    'SHIPPED_CONFIG_PATH'
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
