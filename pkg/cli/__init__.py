#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command-line surface of the B-diagram toolkit.

Main components:
    * main, BDiagramCli - verb dispatch and exit codes
    * parse_expr - the a / a+ expression language
    * SelfTestRunner - the self-validation suite behind `selftest`
    * read_diagram_file, render_* - diagram files in, deterministic text out
"""

from .ExpressionParser import ExpressionSyntaxError, parse_expr
from .Rendering import (
    parse_diagram_document,
    read_diagram_file,
    render_enumeration,
    render_crosscheck,
    render_sum,
    render_side_by_side,
    render_word_sum,
    parse_int_list,
)
from .SelfTest import CheckResult, SelfTestReport, SelfTestRunner
from .BDiagramCli import (
    EXIT_OK,
    EXIT_FAILURE,
    EXIT_USAGE,
    UsageError,
    BDiagramCli,
    build_parser,
    main,
)

__all__ = [
    'ExpressionSyntaxError',
    'parse_expr',
    'parse_diagram_document',
    'read_diagram_file',
    'render_enumeration',
    'render_crosscheck',
    'render_sum',
    'render_side_by_side',
    'render_word_sum',
    'parse_int_list',
    'CheckResult',
    'SelfTestReport',
    'SelfTestRunner',
    'EXIT_OK',
    'EXIT_FAILURE',
    'EXIT_USAGE',
    'UsageError',
    'BDiagramCli',
    'build_parser',
    'main',
]

__version__ = '1.0.0'
