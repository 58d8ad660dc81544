#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./cli/Rendering.py

"""
Deterministic text emitters and the diagram-file reader used by the CLI

This module contains:
1. read_diagram_file - the three accepted JSON layouts of a diagram file
2. render_* - one function per command output, all with fixed orderings
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

from diagram import DiagramClause, DiagramError, from_dict
from enumeration import CrosscheckReport
from fusion import word_of
from hopf import DiagramSum, format_coefficient


def _parse_coefficient(raw: Any) -> Fraction:
    if isinstance(raw, bool):
        raise DiagramError(DiagramClause.FORMAT, f"invalid coefficient {raw!r}")
    try:
        return Fraction(raw) if not isinstance(raw, float) else Fraction(str(raw))
    except (TypeError, ValueError, ZeroDivisionError):
        raise DiagramError(DiagramClause.FORMAT, f"invalid coefficient {raw!r}")


def parse_diagram_document(data: Any) -> DiagramSum:
    """
    Reads a decoded diagram document

    Args:
        data: A diagram object, a list of diagram objects (their sum), or a list of
            {"coef": "p/q", "diagram": {...}} objects

    Returns:
        DiagramSum: The element of ℬ the document describes
    """
    if isinstance(data, dict):
        return DiagramSum.basis(from_dict(data))
    if not isinstance(data, list):
        raise DiagramError(DiagramClause.FORMAT, "diagram file must hold an object or a list")
    result = DiagramSum()
    for entry in data:
        if isinstance(entry, dict) and "diagram" in entry:
            result.add_term(from_dict(entry["diagram"]), _parse_coefficient(entry.get("coef", 1)))
        elif isinstance(entry, dict):
            result.add_term(from_dict(entry), 1)
        else:
            raise DiagramError(DiagramClause.FORMAT, f"unexpected list entry {entry!r}")
    return result


def read_diagram_file(path: Union[str, Path]) -> DiagramSum:
    """Loads a diagram file; OSError propagates for unreadable paths"""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(DiagramClause.FORMAT, f"{path}: invalid JSON: {e}")
    return parse_diagram_document(data)


def render_enumeration(total: int, row: Sequence[int], by_hfup: bool) -> str:
    """
    Total on the first line, then the hf↑ histogram

    With by_hfup the histogram is one "q count" line per value of hf↑, otherwise a
    single space-separated row.
    """
    lines = [str(total)]
    if by_hfup:
        lines.extend(f"{q} {c}" for q, c in enumerate(row))
    else:
        lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines)


def render_crosscheck(report: CrosscheckReport) -> str:
    if report.matches:
        return "recurrence: match"
    return "\n".join(["recurrence: MISMATCH"] + [
        f"q={q} brute={b} recurrence={r}" for q, b, r in report.mismatches
    ])


def render_sum(x: Any) -> str:
    """Sums render one term per line; the zero sum renders as 0"""
    text = x.to_text()
    return text if text else "0"


def render_side_by_side(oracle: Dict[Any, int], diagrams: Dict[Any, int]) -> Tuple[str, bool]:
    """
    Oracle and diagram-route multiplicities per result, with a verdict line

    Returns:
        Tuple[str, bool]: The text and whether both routes agree
    """
    keys = sorted(set(oracle) | set(diagrams))
    width = max((len(k.to_text()) for k in keys), default=0)
    lines = [f"{'result'.ljust(width)}  oracle  diagrams"]
    for key in keys:
        lines.append(f"{key.to_text().ljust(width)}  {oracle.get(key, 0):>6}  {diagrams.get(key, 0):>8}")
    agree = oracle == diagrams
    lines.append(f"terms: {sum(oracle.values())} oracle, {sum(diagrams.values())} diagrams; "
                 + ("routes agree" if agree else "ROUTES DISAGREE"))
    return "\n".join(lines), agree


def render_word_sum(x: DiagramSum) -> str:
    if len(x) == 1 and x.coefficient(x.keys()[0]) == 1:
        return word_of(x.keys()[0]).to_text()
    return "\n".join(f"{format_coefficient(c)} {word_of(g).to_text()}" for g, c in x.items())


def parse_int_list(text: str) -> List[int]:
    """'1,1,1' → [1, 1, 1]"""
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")
