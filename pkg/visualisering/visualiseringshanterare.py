#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./visualisering/visualiseringshanterare.py

"""
Logging and terminal presentation for the B-diagram toolkit

This module contains:
1. LogCategory / ColoredLogger - categorized log records (enumeration, algebra, oracle, selftest)
2. CategoryAdapter / as_category_logger - the same category methods on any stdlib logger
3. TerminalVisualizer - rich tables, JSON panels and error panels
4. ProgressTracker - progress bars for shard-by-shard enumeration

Log records, progress bars, tables and panels all go to stderr, so the plain
command output on stdout stays byte-identical whatever the display settings.
"""

import sys
import json
import time
import logging
from enum import Enum
from typing import Dict, Any, Optional, List, Tuple

try:
    from rich.console import Console
    from rich.panel import Panel
    from rich.table import Table
    from rich.progress import Progress, TextColumn, BarColumn, TimeElapsedColumn, TimeRemainingColumn
    from rich.syntax import Syntax
    from rich.logging import RichHandler
    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False


class TermColors:
    """ANSI fallbacks when rich is missing or disabled"""
    RESET = "\033[0m"
    BOLD = "\033[1m"
    DIM = "\033[2m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BLUE = "\033[34m"
    MAGENTA = "\033[35m"
    CYAN = "\033[36m"
    WHITE = "\033[37m"
    BRIGHT_RED = "\033[91m"
    BRIGHT_WHITE = "\033[97m"


class LogCategory(Enum):
    """Categories of log records"""
    GENERAL = "general"
    ENUMERATION = "enumeration"
    ALGEBRA = "algebra"
    ORACLE = "oracle"
    SELFTEST = "selftest"
    ERROR = "error"
    WARNING = "warning"
    DEBUG = "debug"

    @classmethod
    def from_string(cls, value: str) -> "LogCategory":
        try:
            return cls(value.lower())
        except ValueError:
            return cls.GENERAL


class ColoredFormatter(logging.Formatter):
    """Colors a record by its category, falling back to its level"""

    def __init__(self, fmt: Optional[str] = None, color_config: Optional[Dict[str, str]] = None):
        super().__init__(fmt or "%(asctime)s - %(levelname)s - %(message)s")
        self.color_config = color_config or {
            LogCategory.GENERAL.value: TermColors.WHITE,
            LogCategory.ENUMERATION.value: TermColors.CYAN,
            LogCategory.ALGEBRA.value: TermColors.BLUE,
            LogCategory.ORACLE.value: TermColors.MAGENTA,
            LogCategory.SELFTEST.value: TermColors.GREEN,
            LogCategory.ERROR.value: TermColors.RED,
            LogCategory.WARNING.value: TermColors.YELLOW,
            LogCategory.DEBUG.value: TermColors.DIM,
        }
        self.level_colors = {
            logging.DEBUG: TermColors.DIM,
            logging.INFO: TermColors.BRIGHT_WHITE,
            logging.WARNING: TermColors.YELLOW,
            logging.ERROR: TermColors.RED,
            logging.CRITICAL: TermColors.BRIGHT_RED + TermColors.BOLD,
        }

    def format(self, record: logging.LogRecord) -> str:
        category = getattr(record, 'category', None)
        if category in self.color_config and record.levelno < logging.WARNING:
            color = self.color_config[category]
        else:
            color = self.level_colors.get(record.levelno, TermColors.WHITE)
        return f"{color}{super().format(record)}{TermColors.RESET}"


class _CategoryMethods:
    """Category shortcuts shared by ColoredLogger and CategoryAdapter"""

    def _log_with_category(self, level: int, msg: str, category: LogCategory, *args, **kwargs) -> None:
        raise NotImplementedError

    def enumeration(self, msg: str, *args, **kwargs) -> None:
        """Shard progress and enumeration totals"""
        self._log_with_category(logging.INFO, msg, LogCategory.ENUMERATION, *args, **kwargs)

    def algebra(self, msg: str, *args, **kwargs) -> None:
        """Products, coproducts and projections"""
        self._log_with_category(logging.INFO, msg, LogCategory.ALGEBRA, *args, **kwargs)

    def oracle(self, msg: str, *args, **kwargs) -> None:
        """Comparisons against independent oracles"""
        self._log_with_category(logging.INFO, msg, LogCategory.ORACLE, *args, **kwargs)

    def selftest(self, msg: str, *args, **kwargs) -> None:
        self._log_with_category(logging.INFO, msg, LogCategory.SELFTEST, *args, **kwargs)


class ColoredLogger(_CategoryMethods, logging.Logger):
    """Logger class installed by TerminalVisualizer.setup_logging"""

    def _log_with_category(self, level: int, msg: str, category: LogCategory, *args, **kwargs) -> None:
        if not self.isEnabledFor(level):
            return
        extra = dict(kwargs.pop('extra', None) or {})
        extra['category'] = category.value
        super().log(level, msg, *args, extra=extra, **kwargs)


class CategoryAdapter(_CategoryMethods, logging.LoggerAdapter):
    """Gives a plain stdlib logger the category methods of ColoredLogger"""

    def __init__(self, logger: logging.Logger):
        super().__init__(logger, {})

    def _log_with_category(self, level: int, msg: str, category: LogCategory, *args, **kwargs) -> None:
        if not self.isEnabledFor(level):
            return
        extra = dict(kwargs.pop('extra', None) or {})
        extra['category'] = category.value
        self.logger.log(level, msg, *args, extra=extra, **kwargs)


def as_category_logger(logger: Any):
    """Returns logger itself when it already has category methods, an adapter otherwise"""
    if isinstance(logger, (_CategoryMethods,)):
        return logger
    return CategoryAdapter(logger)


class TerminalVisualizer:
    """
    Terminal presentation: logging setup, tables, JSON and progress bars
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Args:
            config: 'use_rich' (bool), 'log_level' (int) and 'colors' (category → rich style)
        """
        self.config = config or {}
        self.use_rich = RICH_AVAILABLE and self.config.get('use_rich', True)

        if self.use_rich:
            self.err_console = Console(stderr=True)

        self.colors = self.config.get('colors') or {
            LogCategory.ENUMERATION.value: "cyan",
            LogCategory.ALGEBRA.value: "blue",
            LogCategory.ORACLE.value: "magenta",
            LogCategory.SELFTEST.value: "green",
            LogCategory.ERROR.value: "red",
            LogCategory.WARNING.value: "yellow",
            LogCategory.DEBUG.value: "dim",
        }

        self.setup_logging()

    def setup_logging(self) -> None:
        """Installs ColoredLogger and a single stderr handler on the root logger"""
        logging.setLoggerClass(ColoredLogger)
        level = self.config.get('log_level', logging.WARNING)

        if self.use_rich:
            handler: logging.Handler = RichHandler(console=self.err_console, rich_tracebacks=True, show_path=False)
        else:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(ColoredFormatter())

        logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]",
                            handlers=[handler], force=True)

    def get_logger(self, name: str) -> Any:
        """Logger with the category methods, whatever class it was created with"""
        return as_category_logger(logging.getLogger(name))

    def display_json(self, data: Any, title: Optional[str] = None) -> None:
        text = json.dumps(data, indent=2, ensure_ascii=False)
        if self.use_rich:
            syntax = Syntax(text, "json", theme="monokai")
            self.err_console.print(Panel(syntax, title=title) if title else syntax)
        else:
            if title:
                print(f"\n{TermColors.BOLD}{title}{TermColors.RESET}", file=sys.stderr)
            print(text, file=sys.stderr)

    def display_table(self, headers: List[str], rows: List[List[Any]], title: Optional[str] = None) -> None:
        """
        Prints a table to stderr

        Args:
            headers: Column headers
            rows: Table rows, cells rendered with str
            title: Optional caption above the table
        """
        if self.use_rich:
            table = Table(title=title)
            for header in headers:
                table.add_column(header, justify="right")
            for row in rows:
                table.add_row(*[str(cell) for cell in row])
            self.err_console.print(table)
            return

        if title:
            print(f"\n{TermColors.BOLD}{title}{TermColors.RESET}", file=sys.stderr)
        widths = [len(h) for h in headers]
        for row in rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(str(cell)))
        separator = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        print(separator, file=sys.stderr)
        print("| " + " | ".join(h.rjust(w) for h, w in zip(headers, widths)) + " |", file=sys.stderr)
        print(separator, file=sys.stderr)
        for row in rows:
            print("| " + " | ".join(str(cell).rjust(w) for cell, w in zip(row, widths)) + " |", file=sys.stderr)
        print(separator, file=sys.stderr)

    def display_error(self, error_msg: str, exception: Optional[BaseException] = None) -> None:
        """Error panel on stderr; with an exception attached, its traceback as well"""
        if self.use_rich:
            if exception is not None:
                self.err_console.print(f"[bold red]{error_msg}[/bold red]")
                self.err_console.print_exception()
            else:
                self.err_console.print(Panel(error_msg, title="Error", border_style="red"))
        else:
            print(f"{TermColors.RED}{TermColors.BOLD}ERROR: {error_msg}{TermColors.RESET}", file=sys.stderr)

    def create_progress_bar(self, total: int, description: str) -> 'ProgressTracker':
        return ProgressTracker(self, total, description)


class ProgressTracker:
    """
    Progress bar on stderr, usable as a context manager
    """

    def __init__(self, visualizer: TerminalVisualizer, total: int, description: str):
        """
        Args:
            visualizer: Owning visualizer
            total: Number of units, e.g. shards
            description: Label shown before the bar
        """
        self.visualizer = visualizer
        self.total = max(total, 1)
        self.description = description
        self.completed = 0
        self.start_time = time.time()
        self.last_update_time = self.start_time
        self.update_interval = 0.1

        if self.visualizer.use_rich:
            self.progress = Progress(
                TextColumn("[bold blue]{task.description}"),
                BarColumn(),
                TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
                TextColumn("({task.completed}/{task.total})"),
                TimeElapsedColumn(),
                TimeRemainingColumn(),
                console=self.visualizer.err_console,
                transient=True,
            )
            self.task_id = self.progress.add_task(description, total=self.total)
            self.progress.start()
        else:
            self._render()

    def update(self, increment: int = 1) -> None:
        self.completed += increment
        now = time.time()
        if now - self.last_update_time < self.update_interval and self.completed < self.total:
            return
        self.last_update_time = now
        if self.visualizer.use_rich:
            self.progress.update(self.task_id, completed=self.completed)
        else:
            self._render()

    def _render(self) -> None:
        percent = min(100, int(self.completed / self.total * 100))
        filled = percent // 2
        bar = '█' * filled + '░' * (50 - filled)
        elapsed = int(time.time() - self.start_time)
        sys.stderr.write(f"\r{self.description} {bar} {percent}% ({self.completed}/{self.total}) | {elapsed}s")
        sys.stderr.flush()

    def close(self) -> None:
        if self.visualizer.use_rich:
            self.progress.stop()
        else:
            self._render()
            sys.stderr.write("\n")

    def __enter__(self) -> 'ProgressTracker':
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def setup_logger(config: Dict[str, Any]) -> Tuple[Any, TerminalVisualizer]:
    """
    Configures logging and returns the application logger and visualizer

    Args:
        config: The 'general' config section: 'loglevel' (level name) and 'rich' (bool)

    Returns:
        Tuple[logger, TerminalVisualizer]: The 'bdiagram' logger and the visualizer
    """
    level_name = str(config.get('loglevel', 'WARNING')).upper()
    log_level = getattr(logging, level_name, None)
    if not isinstance(log_level, int):
        raise ValueError(f"unknown log level {level_name!r}")

    visualizer = TerminalVisualizer({
        'use_rich': config.get('rich', RICH_AVAILABLE),
        'log_level': log_level,
        'colors': config.get('colors', {}),
    })
    return visualizer.get_logger('bdiagram'), visualizer
