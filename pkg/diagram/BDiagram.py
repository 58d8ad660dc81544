#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./diagram/BDiagram.py

"""
B-diagrams and their structural queries

This module contains:
1. BDiagram - The immutable 5-tuple (n, λ, E↑, E↓, E) with canonical (sorted) storage
2. DiagramStats - The seven counting statistics of a diagram
3. DecoratedPath - A maximal edge chain together with its endpoint decorations
4. DiagramCheck - Collected validation result for a raw candidate tuple
5. Free functions for validation, composition, juxtaposition, the ⋆ expansion and JSON I/O

Half-edges (slots) are numbered 1..ω(G) from the bottom vertex upwards. Every slot has
an inner side (member of E↓ unless cut) and an outer side (member of E↑ unless cut); an
edge (a, b) joins the outer side of slot a to the inner side of slot b on a later vertex.
"""

import json
import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import accumulate, combinations, permutations
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
SeqEntry = Tuple[int, int]


class DiagramClause(Enum):
    """The individual clauses of the B-diagram definition"""
    FORMAT = "format"
    SHAPE = "shape"
    SLOT_COUNT = "slot_count"
    SLOT_RANGE = "slot_range"
    EDGE_SOURCE = "edge_source"
    EDGE_TARGET = "edge_target"
    EDGE_DIRECTION = "edge_direction"
    DUPLICATE_SOURCE = "duplicate_source"
    DUPLICATE_TARGET = "duplicate_target"
    SELECTION = "selection"
    COMPOSITION = "composition"


class DiagramError(ValueError):
    """Raised when a tuple, an index or a composition request violates the B-diagram rules"""

    def __init__(self, clause: DiagramClause, message: str):
        super().__init__(f"{clause.value}: {message}")
        self.clause = clause
        self.message = message


@dataclass
class DiagramCheck:
    """Result of checking a raw candidate tuple"""
    valid: bool = True
    problems: List[Tuple[DiagramClause, str]] = field(default_factory=list)

    def add_error(self, clause: DiagramClause, message: str) -> None:
        """Records a failing clause"""
        self.problems.append((clause, message))
        self.valid = False

    @property
    def errors(self) -> List[str]:
        return [f"{clause.value}: {message}" for clause, message in self.problems]

    def raise_first(self) -> None:
        """Raises DiagramError for the first failing clause, if any"""
        if self.problems:
            clause, message = self.problems[0]
            raise DiagramError(clause, message)

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class DiagramStats:
    """Counting statistics of a diagram"""
    vertices: int
    weight: int
    tau: int
    h_up: int
    h_down: int
    hf_up: int
    hf_down: int
    h_c: int

    def to_dict(self) -> Dict[str, int]:
        return {
            "vertices": self.vertices,
            "weight": self.weight,
            "tau": self.tau,
            "h_up": self.h_up,
            "h_down": self.h_down,
            "hf_up": self.hf_up,
            "hf_down": self.hf_down,
            "h_c": self.h_c,
        }


@dataclass(frozen=True)
class DecoratedPath:
    """
    A maximal chain of edges.

    start_free is True when the first slot's inner side is free (•=⟩) and False when it
    is cut (•=⟨). end_free is True when the last slot's outer side is free (♦=⟨) and
    False when it is cut (♦=⟩).
    """
    indices: Tuple[int, ...]
    start_free: bool
    end_free: bool
    seq: Tuple[SeqEntry, ...]

    @property
    def first(self) -> int:
        return self.indices[0]

    @property
    def last(self) -> int:
        return self.indices[-1]


def _sorted_unique(values: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(set(values)))


def _is_index(value: Any) -> bool:
    """Exact integers only; bool and float are rejected"""
    return type(value) is int


def _non_integer_field(n: Any, lam: Sequence[Any], up: Sequence[Any], down: Sequence[Any],
                       edges: Sequence[Any]) -> Optional[str]:
    """Describes the first field holding something other than an int, or None"""
    if not _is_index(n):
        return f"n={n!r} is not an integer"
    for name, values in (("lambda", lam), ("up", up), ("down", down)):
        bad = [v for v in values if not _is_index(v)]
        if bad:
            return f"{name} contains non-integers {bad}"
    for e in edges:
        if not isinstance(e, tuple) or len(e) != 2 or not all(_is_index(x) for x in e):
            return f"edge {e!r} is not a pair of integers"
    return None


@dataclass(frozen=True, order=True)
class BDiagram:
    """
    A labeled B-diagram (n, λ, E↑, E↓, E).

    Fields are stored canonically: lam as a tuple, up and down as sorted tuples and the
    edge set as a lexicographically sorted tuple of pairs, so equality is structural and
    the field order doubles as the canonical sort key.
    """
    n: int
    lam: Tuple[int, ...]
    up: Tuple[int, ...]
    down: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        lam, up, down = tuple(self.lam), tuple(self.up), tuple(self.down)
        edges = tuple(tuple(e) if isinstance(e, (tuple, list)) else e for e in self.edges)
        problem = _non_integer_field(self.n, lam, up, down, edges)
        if problem:
            raise DiagramError(DiagramClause.FORMAT, problem)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "up", _sorted_unique(up))
        object.__setattr__(self, "down", _sorted_unique(down))
        object.__setattr__(self, "edges", tuple(sorted(set(edges))))
        _check_fields(self.n, self.lam, self.up, self.down, self.edges).raise_first()

    @classmethod
    def _trusted(cls, n: int, lam: Tuple[int, ...], up: Iterable[int],
                 down: Iterable[int], edges: Iterable[Edge]) -> "BDiagram":
        """Builds a diagram known to be valid by construction, skipping the checks"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "lam", tuple(lam))
        object.__setattr__(obj, "up", tuple(sorted(up)))
        object.__setattr__(obj, "down", tuple(sorted(down)))
        object.__setattr__(obj, "edges", tuple(sorted(edges)))
        return obj

    def __getstate__(self):
        return (self.n, self.lam, self.up, self.down, self.edges)

    def __setstate__(self, state):
        for name, value in zip(("n", "lam", "up", "down", "edges"), state):
            object.__setattr__(self, name, value)

    def __or__(self, other: "BDiagram") -> "BDiagram":
        return juxtapose(self, other)

    def __repr__(self) -> str:
        return f"BDiagram({self.n}, {list(self.lam)}, {list(self.up)}, {list(self.down)}, {[list(e) for e in self.edges]})"

    ## ==========================================================================
    ## Basic statistics

    @cached_property
    def _ends(self) -> Tuple[int, ...]:
        return tuple(accumulate(self.lam))

    @property
    def weight(self) -> int:
        """ω(G), the total number of slots"""
        return self._ends[-1] if self.n else 0

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    @cached_property
    def _sources(self) -> Dict[int, int]:
        return dict(self.edges)

    @cached_property
    def _targets(self) -> frozenset:
        return frozenset(b for _, b in self.edges)

    def vertex_of(self, k: int) -> int:
        """
        Returns the vertex owning slot k

        Args:
            k: Half-edge index in 1..ω(G)

        Returns:
            int: The vertex i with λ₁+…+λ_{i−1} < k ≤ λ₁+…+λ_i
        """
        if not 1 <= k <= self.weight:
            raise DiagramError(DiagramClause.SLOT_RANGE, f"slot {k} outside 1..{self.weight}")
        return bisect_left(self._ends, k) + 1

    def slots_of(self, i: int) -> range:
        """The slot range of vertex i"""
        if not 1 <= i <= self.n:
            raise DiagramError(DiagramClause.SELECTION, f"vertex {i} outside 1..{self.n}")
        start = self._ends[i - 2] if i > 1 else 0
        return range(start + 1, self._ends[i - 1] + 1)

    def hf_up_set(self) -> Tuple[int, ...]:
        """H_f↑(G): free outer half-edges, sorted"""
        sources = self._sources
        return tuple(a for a in self.up if a not in sources)

    def hf_down_set(self) -> Tuple[int, ...]:
        """H_f↓(G): free inner half-edges, sorted"""
        targets = self._targets
        return tuple(b for b in self.down if b not in targets)

    def stats(self) -> DiagramStats:
        weight = self.weight
        tau = len(self.edges)
        hf_up = len(self.hf_up_set())
        hf_down = len(self.hf_down_set())
        h_up = weight - tau
        h_down = weight - tau
        return DiagramStats(
            vertices=self.n,
            weight=weight,
            tau=tau,
            h_up=h_up,
            h_down=h_down,
            hf_up=hf_up,
            hf_down=hf_down,
            h_c=(h_up - hf_up) + (h_down - hf_down),
        )

    ## ==========================================================================
    ## Sub-diagrams, connectivity and factorization

    def subdiagram(self, selection: Sequence[int]) -> "BDiagram":
        """
        Restricts the diagram to a strictly increasing sequence of vertices

        Half-edges are relabeled by the unique increasing bijection onto 1..ω′ and only
        edges with both endpoints on selected vertices are kept.

        Args:
            selection: Strictly increasing vertex indices in 1..n

        Returns:
            BDiagram: G[i₁,…,i_n′]
        """
        selection = tuple(selection)
        for prev, cur in zip(selection, selection[1:]):
            if cur <= prev:
                raise DiagramError(DiagramClause.SELECTION, f"selection {list(selection)} is not strictly increasing")
        if selection and (selection[0] < 1 or selection[-1] > self.n):
            raise DiagramError(DiagramClause.SELECTION, f"selection {list(selection)} outside 1..{self.n}")

        relabel: Dict[int, int] = {}
        for i in selection:
            for k in self.slots_of(i):
                relabel[k] = len(relabel) + 1

        return BDiagram._trusted(
            len(selection),
            tuple(self.lam[i - 1] for i in selection),
            (relabel[a] for a in self.up if a in relabel),
            (relabel[b] for b in self.down if b in relabel),
            ((relabel[a], relabel[b]) for a, b in self.edges if a in relabel and b in relabel),
        )

    def connected_components(self) -> List[Tuple[int, ...]]:
        """Maximal connected vertex sets, each sorted, listed by smallest vertex"""
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(self.vertex_of(a)), find(self.vertex_of(b))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        groups: Dict[int, List[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), []).append(v)
        return sorted(tuple(g) for g in groups.values())

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def isolated_sets(self) -> List[Tuple[int, ...]]:
        """All unions of connected components, ordered by component bitmask"""
        components = self.connected_components()
        result = []
        for mask in range(1 << len(components)):
            chosen = [v for idx, comp in enumerate(components) if mask >> idx & 1 for v in comp]
            result.append(tuple(sorted(chosen)))
        return result

    def _prefix_splits(self) -> List[int]:
        """Vertex counts k (0 < k < n) such that ⟦1,k⟧ and ⟦k+1,n⟧ are both isolated"""
        blocked = [False] * (self.n + 1)
        for a, b in self.edges:
            for k in range(self.vertex_of(a), self.vertex_of(b)):
                blocked[k] = True
        return [k for k in range(1, self.n) if not blocked[k]]

    def factorize(self) -> List["BDiagram"]:
        """
        Decomposes the diagram into indivisible juxtaposition factors

        Returns:
            List[BDiagram]: G₁, …, G_m with G = G₁|…|G_m; empty for ε
        """
        if self.is_empty:
            return []
        bounds = [0] + self._prefix_splits() + [self.n]
        return [self.subdiagram(range(lo + 1, hi + 1)) for lo, hi in zip(bounds, bounds[1:])]

    def is_indivisible(self) -> bool:
        return not self.is_empty and not self._prefix_splits()

    ## ==========================================================================
    ## Paths

    def paths(self) -> List[DecoratedPath]:
        """
        Returns every maximal edge chain, ordered by first slot

        A chain starts at a slot whose inner side is not an edge target and follows the
        edge leaving the same slot's outer side until it reaches a slot whose outer side
        is not an edge source. Endpoints may be free or cut.
        """
        sources = self._sources
        targets = self._targets
        down = set(self.down)
        up = set(self.up)
        result = []
        for k in range(1, self.weight + 1):
            if k in targets:
                continue
            chain = [k]
            while chain[-1] in sources:
                chain.append(sources[chain[-1]])
            result.append(DecoratedPath(
                indices=tuple(chain),
                start_free=chain[0] in down,
                end_free=chain[-1] in up,
                seq=tuple((self.vertex_of(s), s) for s in chain),
            ))
        return result

    ## ==========================================================================
    ## Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "lambda": list(self.lam),
            "up": list(self.up),
            "down": list(self.down),
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        """Compact canonical JSON encoding"""
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def ascii_dump(self) -> str:
        """
        Debug rendering, one line per vertex.

        Each slot is shown as k(inner/outer) with '.' free, 'x' cut and '*' used by an edge.
        """
        if self.is_empty:
            return "ε (empty diagram)"
        up, down = set(self.up), set(self.down)
        lines = [f"B-diagram n={self.n} ω={self.weight} τ={len(self.edges)}"]
        for i in range(self.n, 0, -1):
            cells = []
            for k in self.slots_of(i):
                inner = "*" if k in self._targets else ("." if k in down else "x")
                outer = "*" if k in self._sources else ("." if k in up else "x")
                cells.append(f"{k}({inner}/{outer})")
            lines.append(f"  v{i}: " + " ".join(cells))
        if self.edges:
            lines.append("  edges: " + " ".join(f"{a}->{b}" for a, b in self.edges))
        return "\n".join(lines)


EMPTY_DIAGRAM = BDiagram._trusted(0, (), (), (), ())


## ==========================================================================
## Validation

def _check_fields(n: Any, lam: Sequence[Any], up: Sequence[int], down: Sequence[int],
                  edges: Sequence[Edge]) -> DiagramCheck:
    check = DiagramCheck()

    if not _is_index(n) or n < 0:
        check.add_error(DiagramClause.SHAPE, f"n={n!r} is not a nonnegative integer")
        return check
    if len(lam) != n:
        check.add_error(DiagramClause.SHAPE, f"lambda has {len(lam)} entries, expected {n}")
        return check
    bad_counts = [i + 1 for i, x in enumerate(lam) if x <= 0]
    if bad_counts:
        check.add_error(DiagramClause.SLOT_COUNT, f"λ_i ≤ 0 at vertices {bad_counts}")
        return check

    ends = list(accumulate(lam))
    weight = ends[-1] if ends else 0
    for name, values in (("up", up), ("down", down)):
        outside = [k for k in values if not 1 <= k <= weight]
        if outside:
            check.add_error(DiagramClause.SLOT_RANGE, f"{name} contains {outside} outside 1..{weight}")
    if not check.valid:
        return check

    up_set, down_set = set(up), set(down)
    seen_sources, seen_targets = set(), set()
    for a, b in edges:
        if a not in up_set:
            check.add_error(DiagramClause.EDGE_SOURCE, f"edge ({a},{b}) starts outside E↑")
        if b not in down_set:
            check.add_error(DiagramClause.EDGE_TARGET, f"edge ({a},{b}) ends outside E↓")
        if 1 <= a <= weight and 1 <= b <= weight:
            va, vb = bisect_left(ends, a) + 1, bisect_left(ends, b) + 1
            if va >= vb:
                check.add_error(DiagramClause.EDGE_DIRECTION,
                                f"edge ({a},{b}) violates v(a) < v(b) with v(a)={va}, v(b)={vb}")
        if a in seen_sources:
            check.add_error(DiagramClause.DUPLICATE_SOURCE, f"half-edge {a} is the source of two edges")
        if b in seen_targets:
            check.add_error(DiagramClause.DUPLICATE_TARGET, f"half-edge {b} is the target of two edges")
        seen_sources.add(a)
        seen_targets.add(b)
    return check


def check_diagram(raw: Sequence[Any]) -> DiagramCheck:
    """
    Checks a raw candidate 5-tuple without raising

    Args:
        raw: (n, lambda, up, down, edges) in any iterable form

    Returns:
        DiagramCheck: Every failing clause, in order of detection
    """
    try:
        n, lam, up, down, edges = raw
        lam, up, down = list(lam), list(up), list(down)
        edges = [tuple(e) for e in edges]
    except (TypeError, ValueError) as e:
        check = DiagramCheck()
        check.add_error(DiagramClause.FORMAT, f"malformed 5-tuple: {e}")
        return check
    problem = _non_integer_field(n, lam, up, down, edges)
    if problem:
        check = DiagramCheck()
        check.add_error(DiagramClause.FORMAT, problem)
        return check
    return _check_fields(n, lam, sorted(set(up)), sorted(set(down)), edges)


def validate(raw: Sequence[Any]) -> BDiagram:
    """
    Returns the diagram described by a raw 5-tuple

    Raises:
        DiagramError: Naming the first violated clause
    """
    check_diagram(raw).raise_first()
    n, lam, up, down, edges = raw
    return BDiagram(n, tuple(lam), tuple(up), tuple(down), tuple(tuple(e) for e in edges))


def from_dict(data: Dict[str, Any]) -> BDiagram:
    try:
        raw = (data["n"], data["lambda"], data["up"], data["down"], data["edges"])
    except (KeyError, TypeError) as e:
        raise DiagramError(DiagramClause.FORMAT, f"missing key {e} in diagram object")
    return validate(raw)


def from_json(text: str) -> BDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(DiagramClause.FORMAT, f"invalid JSON: {e}")
    return from_dict(data)


## ==========================================================================
## Composition and the ⋆ expansion

def compose(lower: BDiagram, upper: BDiagram, A: Sequence[int], B: Sequence[int]) -> BDiagram:
    """
    Grafts upper on top of lower

    upper's vertices and half-edges are shifted past lower's, and a new edge
    (a_ℓ, b_ℓ + ω(lower)) is added for every position ℓ.

    Args:
        lower: The diagram G
        upper: The diagram G′
        A: Strictly increasing free outer half-edges of G
        B: Distinct free inner half-edges of G′, same length as A

    Returns:
        BDiagram: The (n + n′)-vertex composite; the juxtaposition G|G′ when A and B are empty
    """
    A, B = tuple(A), tuple(B)
    if len(A) != len(B):
        raise DiagramError(DiagramClause.COMPOSITION, f"|A|={len(A)} differs from |B|={len(B)}")
    if any(y <= x for x, y in zip(A, A[1:])):
        raise DiagramError(DiagramClause.COMPOSITION, f"A={list(A)} is not strictly increasing")
    if len(set(B)) != len(B):
        raise DiagramError(DiagramClause.COMPOSITION, f"B={list(B)} repeats a half-edge")
    free_up = set(lower.hf_up_set())
    free_down = set(upper.hf_down_set())
    if not set(A) <= free_up:
        raise DiagramError(DiagramClause.COMPOSITION, f"A={list(A)} is not contained in H_f↑={sorted(free_up)}")
    if not set(B) <= free_down:
        raise DiagramError(DiagramClause.COMPOSITION, f"B={list(B)} is not contained in H_f↓={sorted(free_down)}")
    return _compose_unchecked(lower, upper, A, B)


def _compose_unchecked(lower: BDiagram, upper: BDiagram, A: Sequence[int], B: Sequence[int]) -> BDiagram:
    w = lower.weight
    edges = list(lower.edges)
    edges.extend((a + w, b + w) for a, b in upper.edges)
    edges.extend((a, b + w) for a, b in zip(A, B))
    return BDiagram._trusted(
        lower.n + upper.n,
        lower.lam + upper.lam,
        lower.up + tuple(a + w for a in upper.up),
        lower.down + tuple(b + w for b in upper.down),
        edges,
    )


def juxtapose(lower: BDiagram, upper: BDiagram) -> BDiagram:
    """G|G′, the composition without new edges"""
    return _compose_unchecked(lower, upper, (), ())


def iter_compositions(lower: BDiagram, upper: BDiagram) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], BDiagram]]:
    """Yields (A, B, compose(lower, upper, A, B)) for every admissible pair, k ascending"""
    free_up = lower.hf_up_set()
    free_down = upper.hf_down_set()
    for k in range(min(len(free_up), len(free_down)) + 1):
        for A in combinations(free_up, k):
            for B in permutations(free_down, k):
                yield A, B, _compose_unchecked(lower, upper, A, B)


def star_expand(lower: BDiagram, upper: BDiagram) -> List[BDiagram]:
    """
    All compositions of lower with upper

    The results are pairwise distinct; their number is
    Σ_k k!·C(hf↑(lower), k)·C(hf↓(upper), k).
    """
    result = [g for _, _, g in iter_compositions(lower, upper)]
    logger.debug(f"star_expand: {lower.n}+{upper.n} vertices gave {len(result)} diagrams")
    return result
