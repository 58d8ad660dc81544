#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./cli/SelfTest.py

"""
Self-validation suite run by `bdiagram selftest`

This module contains:
1. CheckResult / SelfTestReport - outcome of each check and of the run
2. SelfTestRunner - the twelve checks, from the enumeration table to the
   projection morphism, at a quick or a deep level

Every check compares two independent computations or a computation against a
published value; nothing is compared against itself.
"""

import time
import random
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, List, Optional, Tuple

from diagram import BDiagram, compose, star_expand
from enumeration import DiagramEnumerator, alpha, d_table, enumerate_all
from fusion import diagram_of, fstar, word_of, words_of
from heisenberg import (NormalMonomial, Route, lah_number, mul, normal_order, project, project_sum,
                        specialize, stirling, vertex_diagram)
from hopf import (DiagramSum, LinearCombination, TensorSum, coproduct, counit, eulerian,
                  is_primitive, star, tensor_star)
from partitions import (SetPartition, SetPartitionIntoLists, all_partitions_into_lists,
                        all_set_partitions, b_of, bwsym_product_oracle, bwsym_product_via_diagrams,
                        enumerate_g21, m_of, wsym_product_oracle, wsym_product_via_diagrams)
from visualisering import as_category_logger
from .ExpressionParser import parse_expr

HFUP_ROWS = [
    [1],
    [2, 2],
    [10, 18, 8],
    [62, 154, 124, 32],
    [462, 1426, 1596, 760, 128],
    [3982, 14506, 20380, 13680, 4336, 512],
    [38646, 161042, 269284, 229448, 104032, 23520, 2048],
]

ALPHAS = [1, 4, 36, 372, 4372, 57396, 828020]

CHAINED = BDiagram(3, (3, 1, 2), range(1, 6), range(1, 7), ((1, 6), (2, 4), (4, 5)))
TWO_COMPONENT = BDiagram(4, (1, 3, 2, 2), (1, 3, 4, 6), (1, 3, 6, 7), ((1, 6), (3, 7)))
COMPOSED_JSON = ('{"n":7,"lambda":[1,3,2,2,3,1,2],"up":[1,3,4,6,9,10,11,12,13],'
             '"down":[1,3,6,7,9,10,11,12,13,14],'
             '"edges":[[1,6],[3,7],[4,11],[6,9],[9,14],[10,12],[12,13]]}')
HALF_OPEN_VERTEX = BDiagram(1, (2,), (1,), (1, 2), ())
OPEN_VERTEX = BDiagram(1, (2,), (1, 2), (1, 2), ())


@dataclass
class CheckResult:
    """Outcome of one check"""
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


@dataclass
class SelfTestReport:
    """Results of a selftest run"""
    level: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_text(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in self.checks]
        lines.append(f"{len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {"level": self.level, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def __bool__(self) -> bool:
        return self.passed


## ==========================================================================
## Algebraic laws on one pair

def _coassociative(g: BDiagram) -> bool:
    left: LinearCombination = LinearCombination()
    right: LinearCombination = LinearCombination()
    for (a, b), c in coproduct(g).terms.items():
        for (a1, a2), d in coproduct(a).terms.items():
            left.add_term((a1, a2, b), c * d)
        for (b1, b2), d in coproduct(b).terms.items():
            right.add_term((a, b1, b2), c * d)
    return left == right


def _cocommutative(g: BDiagram) -> bool:
    delta = coproduct(g)
    return TensorSum({(r, l): c for (l, r), c in delta.terms.items()}) == delta


def _counital(g: BDiagram) -> bool:
    left, right = DiagramSum(), DiagramSum()
    for (l, r), c in coproduct(g).terms.items():
        right.add_term(r, c * counit(l))
        left.add_term(l, c * counit(r))
    return left == DiagramSum.basis(g) == right


def _pair_failures(x: BDiagram, y: BDiagram, z: BDiagram) -> List[str]:
    """Names of the laws that fail on the pair (x, y), z serving as third factor"""
    failures = []
    xy = star(x, y)
    if star(xy, z) != star(x, star(y, z)):
        failures.append("associativity")
    if coproduct(xy) != tensor_star(coproduct(x), coproduct(y)):
        failures.append("bialgebra")
    for g in (x, y):
        if not (_coassociative(g) and _cocommutative(g) and _counital(g)):
            failures.append("coalgebra")
    if fstar(word_of(x), word_of(y)) != words_of(star_expand(x, y)):
        failures.append("word morphism")
    if project_sum(xy) != mul(project(x), project(y)):
        failures.append("projection")
    return failures


class SelfTestRunner:
    """
    Runs the self-validation checks

    The quick level enumerates up to weight 5, checks the laws on every weight-1 pair,
    on all 36 × 36 weight-2 pairs and on seeded random pairs of weight 3, and checks π₁
    up to weight 3. The deep level adds weight 6, mixed random pairs of weights 2 and 3
    and π₁ at weight 4.
    """

    def __init__(self, level: str = "quick", samples: int = 200, seed: int = 2016,
                 workers: int = 1, logger: Optional[logging.Logger] = None):
        """
        Args:
            level: "quick" or "deep"
            samples: Number of random pairs
            seed: Seed of the random pair generator
            workers: Worker processes for enumeration
            logger: Logger for per-check progress
        """
        if level not in ("quick", "deep"):
            raise ValueError(f"unknown selftest level {level!r}")
        self.level = level
        self.samples = samples
        self.seed = seed
        self.workers = workers
        self.logger = as_category_logger(logger or logging.getLogger(__name__))
        self.enumerator = DiagramEnumerator(workers=workers, logger=logger)
        self._diagrams: Dict[int, List[BDiagram]] = {}
        self._failures: Optional[Tuple[int, Counter]] = None
        self._rows: Dict[int, List[int]] = {}

    @property
    def deep(self) -> bool:
        return self.level == "deep"

    def diagrams(self, p: int) -> List[BDiagram]:
        if p not in self._diagrams:
            self._diagrams[p] = list(enumerate_all(p, workers=self.workers))
        return self._diagrams[p]

    def checks(self) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
        return [
            ("enumeration table", self.check_enumeration_table),
            ("recurrence agreement", self.check_recurrence),
            ("totals", self.check_totals),
            ("normal ordering", self.check_normal_ordering),
            ("star golden counts", self.check_star_golden),
            ("hopf axioms", self.check_hopf_axioms),
            ("word realization", self.check_word_realization),
            ("primitives", self.check_primitives),
            ("stirling tables", self.check_stirling),
            ("wsym", self.check_wsym),
            ("bwsym", self.check_bwsym),
            ("projection morphism", self.check_projection),
        ]

    def run(self) -> SelfTestReport:
        report = SelfTestReport(level=self.level)
        for name, check in self.checks():
            start = time.perf_counter()
            try:
                passed, detail = check()
            except Exception as e:
                self.logger.exception(f"Check {name} raised")
                passed, detail = False, f"{type(e).__name__}: {e}"
            result = CheckResult(name, passed, detail, time.perf_counter() - start)
            self.logger.selftest(f"{'PASS' if passed else 'FAIL'} {name} ({result.seconds:.2f}s)")
            report.checks.append(result)
        return report

    ## ----------------------------------------------------------------------
    ## Counting

    def _max_weight(self) -> int:
        return 6 if self.deep else 5

    def brute_row(self, p: int) -> List[int]:
        if p not in self._rows:
            counts = self.enumerator.histogram(p)
            self._rows[p] = [counts.get(q, 0) for q in range(p + 1)]
        return self._rows[p]

    def check_enumeration_table(self) -> Tuple[bool, str]:
        bad = [p for p in range(self._max_weight() + 1) if self.brute_row(p) != HFUP_ROWS[p]]
        return not bad, f"rows 0..{self._max_weight()}" + (f", wrong rows {bad}" if bad else "")

    def check_recurrence(self) -> Tuple[bool, str]:
        table = d_table(self._max_weight())
        bad = [p for p in range(self._max_weight() + 1) if table.row(p) != self.brute_row(p)]
        return not bad, "d_table matches brute force" if not bad else f"rows {bad} differ"

    def check_totals(self) -> Tuple[bool, str]:
        limit = self._max_weight()
        values = [sum(self.brute_row(p)) for p in range(limit + 1)]
        recurrence = [alpha(p) for p in range(limit + 1)]
        return values == recurrence == ALPHAS[:limit + 1], "alpha = " + ", ".join(map(str, values))

    ## ----------------------------------------------------------------------
    ## Products

    def check_normal_ordering(self) -> Tuple[bool, str]:
        expr = parse_expr("a+^2 a^2 * a+^2 a^2")
        expected = {NormalMonomial(4, 4): 1, NormalMonomial(3, 3): 4, NormalMonomial(2, 2): 2}
        results = [normal_order(expr, route).terms for route in Route]
        product = star(vertex_diagram(2, 2), vertex_diagram(2, 2))
        multiplicities = specialize(project_sum(product)).terms
        ok = all(r == expected for r in results) and len(product) == 7 and multiplicities == expected
        return ok, f"{len(product)} diagrams, three routes {'agree' if ok else 'differ'}"

    def check_star_golden(self) -> Tuple[bool, str]:
        half_open = star(HALF_OPEN_VERTEX, HALF_OPEN_VERTEX)
        open_square = star(OPEN_VERTEX, OPEN_VERTEX)
        composed = compose(TWO_COMPONENT, CHAINED, (4, 6), (3, 1)).to_json()
        ok = (len(half_open) == 3 and len(open_square) == 7 and composed == COMPOSED_JSON
              and all(c == 1 for _, c in half_open.items() + open_square.items()))
        return ok, (f"half-open square {len(half_open)} terms, open square {len(open_square)} terms, "
                    f"composition {'exact' if composed == COMPOSED_JSON else 'differs'}")

    def population(self) -> List[Tuple[BDiagram, BDiagram, BDiagram]]:
        """Triples (x, y, z) on which the pair laws are checked"""
        rng = random.Random(self.seed)
        ones = self.diagrams(1)
        twos, threes = self.diagrams(2), self.diagrams(3)
        triples = [(x, y, ones[(i + j) % len(ones)]) for i, x in enumerate(ones) for j, y in enumerate(ones)]
        triples += [(x, y, ones[(i + j) % len(ones)]) for i, x in enumerate(twos) for j, y in enumerate(twos)]
        for _ in range(self.samples):
            triples.append((rng.choice(threes), rng.choice(threes), rng.choice(ones)))
        if self.deep:
            for _ in range(self.samples):
                triples.append((rng.choice(threes), rng.choice(twos), rng.choice(twos)))
                triples.append((rng.choice(twos), rng.choice(threes), rng.choice(twos)))
        return triples

    def _law_failures(self) -> Tuple[int, Counter]:
        """Failure counts per law over the population, computed once per run"""
        if self._failures is None:
            population = self.population()
            failing: Counter = Counter()
            for x, y, z in population:
                failing.update(_pair_failures(x, y, z))
            self._failures = (len(population), failing)
        return self._failures

    def _pairs_report(self, *laws: str) -> Tuple[bool, str]:
        size, failing = self._law_failures()
        relevant = {law: failing[law] for law in laws if failing[law]}
        return not relevant, f"{size} pairs" + (f", failures {relevant}" if relevant else "")

    def check_hopf_axioms(self) -> Tuple[bool, str]:
        return self._pairs_report("associativity", "bialgebra", "coalgebra")

    def check_word_realization(self) -> Tuple[bool, str]:
        ok, detail = self._pairs_report("word morphism")
        round_trip = sum(1 for p in range(5) for g in self.diagrams(p) if diagram_of(word_of(g)) != g)
        return ok and not round_trip, f"{detail}; round trip failures up to weight 4: {round_trip}"

    def check_projection(self) -> Tuple[bool, str]:
        return self._pairs_report("projection")

    ## ----------------------------------------------------------------------
    ## Primitives and Stirling numbers

    def check_primitives(self) -> Tuple[bool, str]:
        limit = 4 if self.deep else 3
        checked = not_primitive = not_fixed = 0
        for p in range(1, limit + 1):
            for g in self.diagrams(p):
                image = eulerian(g)
                checked += 1
                if not is_primitive(image):
                    not_primitive += 1
                if g.is_connected() and image != DiagramSum.basis(g):
                    not_fixed += 1

        b = BDiagram(3, (2, 2, 2), (1, 3, 5), range(1, 7), ((1, 5),))
        x = BDiagram(3, (2, 2, 2), (1, 3, 5), range(1, 7), ((1, 3),))
        y = BDiagram(3, (2, 2, 2), (1, 3, 5), range(1, 7), ((3, 5),))
        image = eulerian(b)
        example = (image.coefficient(b) == 1 and image.coefficient(x) == Fraction(-1, 2)
                   and image.coefficient(y) == Fraction(-1, 2) and is_primitive(image))
        ok = not not_primitive and not not_fixed and example
        return ok, (f"{checked} diagrams up to weight {limit}, {not_primitive} not primitive, "
                    f"{not_fixed} connected not fixed, half-coefficient example {'ok' if example else 'wrong'}")

    def check_stirling(self) -> Tuple[bool, str]:
        bad = []
        for n in range(1, 7):
            fast = stirling([1] * n, [1] * n)
            oracle = stirling([1] * n, [1] * n, route=Route.REWRITE)
            if fast != oracle:
                bad.append(("S", n))
            lah = stirling([2] * n, [1] * n)
            if lah.alpha != n or lah.coefficients != {k: lah_number(n, k) for k in range(1, n + 1)}:
                bad.append(("Lah", n))
        return not bad, "second-kind and Lah rows n ≤ 6" + (f", wrong {bad}" if bad else "")

    ## ----------------------------------------------------------------------
    ## Set partitions

    def check_wsym(self) -> Tuple[bool, str]:
        left = SetPartition(((1, 3), (2,)))
        right = SetPartition(((1,), (2,)))
        oracle = dict(Counter(wsym_product_oracle(left, right)))
        diagrams = wsym_product_via_diagrams(left, right)
        bell = [len({b_of(pi) for pi in all_set_partitions(n)}) for n in range(5)]
        ok = sum(oracle.values()) == 7 and oracle == diagrams and bell == [1, 1, 2, 5, 15]
        return ok, f"{sum(oracle.values())} terms, Bell counts {bell}"

    def check_bwsym(self) -> Tuple[bool, str]:
        left = SetPartitionIntoLists(((3, 1), (2,)))
        right = SetPartitionIntoLists(((1, 2),))
        oracle = dict(Counter(bwsym_product_oracle(left, right)))
        diagrams = bwsym_product_via_diagrams(left, right)

        def sizes(results: Dict[SetPartitionIntoLists, int]) -> Counter:
            return Counter(tuple(sorted(len(l) for l in r.lists)) for r, c in results.items() for _ in range(c))

        g21 = [sum(1 for _ in enumerate_g21(n)) for n in range(1, 5)]
        connected = [sum(1 for g in enumerate_g21(n) if g.is_connected()) for n in range(1, 5)]
        images = [len({m_of(pi) for pi in all_partitions_into_lists(n)}) for n in range(1, 5)]
        ok = (sum(oracle.values()) == 6 and oracle == diagrams and sizes(oracle) == sizes(diagrams)
              and g21 == [1, 3, 13, 73] and images == g21
              and connected == [factorial(n) for n in range(1, 5)])
        return ok, f"{sum(oracle.values())} terms, 𝒢²₁ counts {g21}, connected {connected}"
