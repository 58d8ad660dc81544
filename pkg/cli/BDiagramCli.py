#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./cli/BDiagramCli.py

"""
Command-line front end for the B-diagram toolkit

This module contains:
1. build_parser - argparse sub-commands, one per verb
2. BDiagramCli - dispatches a parsed command to the library and prints the result
3. main - configuration, logging setup and the mapping of errors to exit codes

Exit codes: 0 success, 1 library error or failed check, 2 usage, configuration or
syntax error. Command output goes to stdout, logs and --pretty tables to stderr.
"""

import sys
import argparse
import logging
from collections import Counter
from typing import Any, List, Optional

from config import ConfigManager, LOG_LEVELS, SHIPPED_CONFIG_PATH
from diagram import DiagramError
from enumeration import DiagramEnumerator, compositions
from fusion import FusionError
from heisenberg import HeisenbergError, Route, normal_order, stirling
from hopf import HopfError, apply_map, coproduct, eulerian_map, is_primitive, star
from partitions import (PartitionError, SetPartition, SetPartitionIntoLists, bwsym_product_oracle,
                        bwsym_product_via_diagrams, wsym_product_oracle, wsym_product_via_diagrams)
from visualisering import TerminalVisualizer, setup_logger
from .ExpressionParser import ExpressionSyntaxError, parse_expr
from .Rendering import (parse_int_list, read_diagram_file, render_crosscheck, render_enumeration,
                        render_side_by_side, render_sum, render_word_sum)
from .SelfTest import SelfTestRunner

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """A request the command line cannot serve; exits with code 2"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdiagram",
        description="Hopf algebra of B-diagrams: products, coproducts, primitives, "
                    "normal ordering and enumeration",
    )
    parser.add_argument("--config", metavar="PATH",
                        help="YAML or JSON configuration file, config/bdiagram_config.json when omitted")
    parser.add_argument("--log-level", choices=LOG_LEVELS, help="overrides general.loglevel")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="COMMAND")

    p = sub.add_parser("enumerate", help="count every diagram of one weight")
    p.add_argument("--weight", type=int, required=True, help="the weight p")
    p.add_argument("--by-hfup", action="store_true", help="one 'q count' line per value of hf↑")
    p.add_argument("--emit-diagrams", metavar="FILE", help="write every diagram as one JSON line")
    p.add_argument("--check", action="store_true", help="compare with the counting recurrence")
    p.add_argument("--progress", action="store_true", help="show a progress bar on stderr")
    p.add_argument("--pretty", action="store_true", help="also render a table on stderr")

    p = sub.add_parser("star", help="⋆ product of two diagram files")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("coproduct", help="coproduct of a diagram file")
    p.add_argument("file")

    p = sub.add_parser("primitive", help="Eulerian idempotent of a diagram file")
    p.add_argument("file")

    p = sub.add_parser("normal-order", help="normal-order an expression in a and a+")
    p.add_argument("expr")
    p.add_argument("--route", choices=["rewrite", "diagram", "monomial", "all"], default="monomial")
    p.add_argument("--keep-central", action="store_true", help="keep the central letters e and e'")

    p = sub.add_parser("stirling", help="generalized Stirling numbers of a run product")
    p.add_argument("--r", required=True, metavar="LIST", help="r_1,…,r_n")
    p.add_argument("--s", required=True, metavar="LIST", help="s_1,…,s_n")

    p = sub.add_parser("wsym", help="product of two set partitions, e.g. {1,3|2} {1|2}")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("bwsym", help="product of two set partitions into lists, e.g. {[3,1]|[2]} {[1,2]}")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("word", help="fusion word of a diagram file")
    p.add_argument("file")

    p = sub.add_parser("config", help="print the effective configuration")
    p.add_argument("--section", help="only this top-level section, e.g. enumeration")
    p.add_argument("--save", metavar="PATH", help="write the effective configuration to a .json or .yaml file")
    p.add_argument("--pretty", action="store_true", help="also render the configuration on stderr")

    p = sub.add_parser("selftest", help="run the self-validation suite")
    p.add_argument("--level", choices=["quick", "deep"], default=None)
    p.add_argument("--pretty", action="store_true", help="also render a table on stderr")
    return parser


class BDiagramCli:
    """Runs one parsed command"""

    def __init__(self, config: ConfigManager, logger: Any, visualizer: TerminalVisualizer):
        self.config = config
        self.logger = logger
        self.visualizer = visualizer

    def run(self, args: argparse.Namespace) -> int:
        handler = getattr(self, "cmd_" + args.verb.replace("-", "_"))
        self.logger.debug(f"Running {args.verb}")
        return handler(args)

    def emit(self, text: str) -> None:
        print(text)

    ## ----------------------------------------------------------------------

    def cmd_enumerate(self, args: argparse.Namespace) -> int:
        p = args.weight
        max_weight = self.config.get("enumeration.maxweight")
        if not 0 <= p <= max_weight:
            raise UsageError(f"--weight must lie in 0..{max_weight}, got {p}")

        tracker = None
        if args.progress:
            tracker = self.visualizer.create_progress_bar(len(compositions(p)), f"weight {p}")
        enumerator = DiagramEnumerator(
            workers=self.config.get("enumeration.workers"),
            logger=self.logger,
            progress=tracker.update if tracker else None,
        )
        try:
            if args.emit_diagrams:
                counts: Counter = Counter()
                with open(args.emit_diagrams, "w", encoding="utf-8") as out:
                    for g in enumerator.enumerate(p):
                        out.write(g.to_json() + "\n")
                        counts[g.stats().hf_up] += 1
            else:
                counts = Counter(enumerator.histogram(p))
        finally:
            if tracker:
                tracker.close()

        row = [counts.get(q, 0) for q in range(p + 1)]
        self.emit(render_enumeration(sum(row), row, args.by_hfup))
        if args.pretty:
            self.visualizer.display_table(["hf↑", "diagrams"], [[q, c] for q, c in enumerate(row)],
                                          title=f"B-diagrams of weight {p}")

        if args.check:
            report = enumerator.crosscheck(p, brute=row)
            self.emit(render_crosscheck(report))
            return EXIT_OK if report else EXIT_FAILURE
        return EXIT_OK

    def cmd_star(self, args: argparse.Namespace) -> int:
        product = star(read_diagram_file(args.left), read_diagram_file(args.right))
        self.logger.algebra(f"⋆ product has {len(product)} terms")
        self.emit(render_sum(product))
        return EXIT_OK

    def cmd_coproduct(self, args: argparse.Namespace) -> int:
        self.emit(render_sum(coproduct(read_diagram_file(args.file))))
        return EXIT_OK

    def cmd_primitive(self, args: argparse.Namespace) -> int:
        image = apply_map(eulerian_map, read_diagram_file(args.file))
        verdict = is_primitive(image)
        self.emit(render_sum(image))
        self.emit(f"primitive: {'yes' if verdict else 'no'}")
        return EXIT_OK if verdict else EXIT_FAILURE

    def cmd_normal_order(self, args: argparse.Namespace) -> int:
        expr = parse_expr(args.expr)
        if args.route == "all":
            routes = [r for r in Route if not (args.keep_central and r is Route.REWRITE)]
        else:
            routes = [Route.from_string(args.route)]
        if args.keep_central and routes == [Route.REWRITE]:
            raise UsageError("--keep-central is not available with the rewrite route")

        results = [(route, normal_order(expr, route, args.keep_central)) for route in routes]
        first = results[0][1]
        if all(poly == first for _, poly in results[1:]):
            self.emit(render_sum(first))
            return EXIT_OK
        for route, poly in results:
            self.emit(f"[{route.value}]\n{render_sum(poly)}")
        self.logger.error("Normal-ordering routes disagree")
        return EXIT_FAILURE

    def cmd_stirling(self, args: argparse.Namespace) -> int:
        try:
            r_vec, s_vec = parse_int_list(args.r), parse_int_list(args.s)
        except ValueError as e:
            raise UsageError(str(e))
        self.emit(stirling(r_vec, s_vec).to_text())
        return EXIT_OK

    def cmd_wsym(self, args: argparse.Namespace) -> int:
        left, right = SetPartition.from_text(args.left), SetPartition.from_text(args.right)
        text, agree = render_side_by_side(dict(Counter(wsym_product_oracle(left, right))),
                                          wsym_product_via_diagrams(left, right))
        self.emit(text)
        return EXIT_OK if agree else EXIT_FAILURE

    def cmd_bwsym(self, args: argparse.Namespace) -> int:
        left = SetPartitionIntoLists.from_text(args.left)
        right = SetPartitionIntoLists.from_text(args.right)
        text, agree = render_side_by_side(dict(Counter(bwsym_product_oracle(left, right))),
                                          bwsym_product_via_diagrams(left, right))
        self.emit(text)
        return EXIT_OK if agree else EXIT_FAILURE

    def cmd_word(self, args: argparse.Namespace) -> int:
        self.emit(render_word_sum(read_diagram_file(args.file)))
        return EXIT_OK

    def cmd_config(self, args: argparse.Namespace) -> int:
        if args.section and self.config.get(args.section) is None:
            raise UsageError(f"unknown configuration section {args.section!r}")
        if args.save:
            if not self.config.save_config(args.save):
                self.visualizer.display_error(f"config: could not write {args.save}")
                return EXIT_FAILURE
            return EXIT_OK
        self.config.print_config(args.section)
        if args.pretty:
            self.visualizer.display_json(self.config.get(args.section) if args.section else self.config.config,
                                         title=args.section or "configuration")
        return EXIT_OK

    def cmd_selftest(self, args: argparse.Namespace) -> int:
        runner = SelfTestRunner(
            level=args.level or self.config.get("selftest.level", "quick"),
            samples=self.config.get("selftest.samples"),
            seed=self.config.get("selftest.seed"),
            workers=self.config.get("enumeration.workers"),
            logger=self.logger,
        )
        report = runner.run()
        self.emit(report.to_text())
        if args.pretty:
            self.visualizer.display_table(
                ["check", "result", "seconds", "detail"],
                [[c.name, "PASS" if c.passed else "FAIL", f"{c.seconds:.2f}", c.detail] for c in report.checks],
                title=f"selftest ({report.level})",
            )
        return EXIT_OK if report else EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point

    Args:
        argv: Arguments without the program name; sys.argv[1:] when omitted

    Returns:
        int: The exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    config_path = args.config or (SHIPPED_CONFIG_PATH if SHIPPED_CONFIG_PATH.exists() else None)
    config = ConfigManager(config_path)
    if config.validation_errors:
        for error in config.validation_errors:
            print(f"configuration error: {error.path}: {error.message}", file=sys.stderr)
        return EXIT_USAGE

    if args.log_level:
        config.set("general.loglevel", args.log_level)
    logger, visualizer = setup_logger(config.get("general"))

    try:
        return BDiagramCli(config, logger, visualizer).run(args)
    except (UsageError, ExpressionSyntaxError, PartitionError) as e:
        print(f"bdiagram {args.verb}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DiagramError, FusionError, HeisenbergError, HopfError, OSError) as e:
        logging.getLogger(__name__).debug("command failed", exc_info=True)
        visualizer.display_error(f"{args.verb}: {e}")
        return EXIT_FAILURE
