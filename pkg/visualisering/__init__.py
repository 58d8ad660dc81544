#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Logging and terminal presentation for the B-diagram toolkit.

Main components:
    * ColoredLogger, CategoryAdapter - loggers with enumeration/algebra/oracle/selftest methods
    * TerminalVisualizer - tables, JSON and error panels
    * ProgressTracker - progress bars on stderr
    * setup_logger - configures logging from the 'general' config section

Uses rich when available and ANSI colors otherwise.
"""

from .visualiseringshanterare import (
    ColoredLogger,
    CategoryAdapter,
    as_category_logger,
    TerminalVisualizer,
    ProgressTracker,
    LogCategory,
    ColoredFormatter,
    setup_logger,
    TermColors,
    RICH_AVAILABLE
)

__all__ = [
    'ColoredLogger',
    'CategoryAdapter',
    'as_category_logger',
    'TerminalVisualizer',
    'ProgressTracker',
    'LogCategory',
    'ColoredFormatter',
    'setup_logger',
    'TermColors',
    'RICH_AVAILABLE'
]

__version__ = '1.0.0'
__author__ = 'B-diagram Hopf algebra team'
