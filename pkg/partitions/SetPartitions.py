#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./partitions/SetPartitions.py

"""
Set partitions, set partitions into lists, and their diagram images

This module contains:
1. SetPartition / SetPartitionIntoLists - canonical value types with the {1,3|2} and
   {[3,1]|[2]} text syntax
2. b_of / partition_of - set partitions ↔ diagrams with one slot per vertex
3. m_of / lists_of - partitions into lists ↔ diagrams of the 𝒢²₁ shape, one increasing
   binary tree per list
4. wsym_product_oracle / bwsym_product_oracle - products computed without diagrams
5. wsym_coproduct / bwsym_coproduct, std, is_indivisible, generators and counts

Lists are built into trees as follows: the minimum of a list is the root, the part to
its left hangs from the root's outer slot 2i − 1 and the part to its right from outer
slot 2i, each child entering through its inner slot 2j − 1 (vertex i carries value i).
Reading a tree in order gives back the list.
"""

import logging
from dataclasses import dataclass
from itertools import permutations, product
from typing import Any, Dict, Iterator, List, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_partitions

from diagram import BDiagram
from enumeration import iter_matchings
from hopf import LinearCombination, integral_coefficient, star

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


class PartitionError(ValueError):
    """Raised for malformed set partitions or partitions into lists"""


def _check_cover(parts: Sequence[Block], what: str) -> int:
    entries = [x for part in parts for x in part]
    if any(not part for part in parts):
        raise PartitionError(f"{what} has an empty part")
    if any(not isinstance(x, int) or isinstance(x, bool) for x in entries):
        raise PartitionError(f"{what} entries must be integers")
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        raise PartitionError(f"{what} must cover 1..{n} exactly once, got {sorted(entries)}")
    return n


@dataclass(frozen=True, order=True)
class SetPartition:
    """Blocks of ⟦1,n⟧, each sorted, ordered by minimum"""
    blocks: Tuple[Block, ...] = ()

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        _check_cover(blocks, "set partition")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __or__(self, other: "SetPartition") -> "SetPartition":
        """π ⊎ π′, the blocks of other shifted by n"""
        return SetPartition(self.blocks + tuple(tuple(x + self.n for x in b) for b in other.blocks))

    def to_text(self) -> str:
        return "{" + "|".join(",".join(map(str, b)) for b in self.blocks) + "}"

    @classmethod
    def from_text(cls, text: str) -> "SetPartition":
        return cls(tuple(_parse_parts(text, lists=False)))


@dataclass(frozen=True, order=True)
class SetPartitionIntoLists:
    """Lists covering ⟦1,n⟧, ordered by minimum entry"""
    lists: Tuple[Block, ...] = ()

    def __post_init__(self):
        lists = tuple(sorted((tuple(l) for l in self.lists), key=lambda l: min(l) if l else 0))
        _check_cover(lists, "set partition into lists")
        object.__setattr__(self, "lists", lists)

    @property
    def n(self) -> int:
        return sum(len(l) for l in self.lists)

    def __or__(self, other: "SetPartitionIntoLists") -> "SetPartitionIntoLists":
        return SetPartitionIntoLists(self.lists + tuple(tuple(x + self.n for x in l) for l in other.lists))

    def to_text(self) -> str:
        return "{" + "|".join("[" + ",".join(map(str, l)) + "]" for l in self.lists) + "}"

    @classmethod
    def from_text(cls, text: str) -> "SetPartitionIntoLists":
        return cls(tuple(_parse_parts(text, lists=True)))


def _parse_parts(text: str, lists: bool) -> List[Block]:
    """Parses the body of {1,3|2} or {[3,1]|[2]}"""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise PartitionError(f"expected braces around {text!r}")
    body = body[1:-1].strip()
    if not body:
        return []
    parts = []
    for chunk in body.split("|"):
        chunk = chunk.strip()
        if lists:
            if not (chunk.startswith("[") and chunk.endswith("]")):
                raise PartitionError(f"expected a bracketed list, got {chunk!r}")
            chunk = chunk[1:-1]
        try:
            parts.append(tuple(int(x) for x in chunk.split(",")))
        except ValueError:
            raise PartitionError(f"malformed part {chunk!r} in {text!r}")
    return parts


def std(selection: Union[SetPartition, SetPartitionIntoLists, Sequence[Block]],
        as_lists: bool = False) -> Union[SetPartition, SetPartitionIntoLists]:
    """
    Relabels a selection of blocks or lists by the increasing bijection onto ⟦1,k⟧

    Args:
        selection: A partition object or a sequence of blocks / lists
        as_lists: For raw sequences, treat the parts as lists (order kept)
    """
    if isinstance(selection, SetPartitionIntoLists):
        parts, as_lists = selection.lists, True
    elif isinstance(selection, SetPartition):
        parts, as_lists = selection.blocks, False
    else:
        parts = [tuple(p) for p in selection]
    rank = {x: i for i, x in enumerate(sorted(x for p in parts for x in p), start=1)}
    relabeled = tuple(tuple(rank[x] for x in p) for p in parts)
    return SetPartitionIntoLists(relabeled) if as_lists else SetPartition(relabeled)


def _splits_prefix(parts: Sequence[Block], n: int) -> bool:
    for k in range(1, n):
        if all(max(p) <= k or min(p) > k for p in parts):
            return True
    return False


def is_indivisible(x: Union[SetPartition, SetPartitionIntoLists]) -> bool:
    """No proper prefix ⟦1,k⟧ is a union of parts; the empty partition is not indivisible"""
    parts = x.lists if isinstance(x, SetPartitionIntoLists) else x.blocks
    return x.n > 0 and not _splits_prefix(parts, x.n)


## ==========================================================================
## WSym: b_π

def b_of(pi: SetPartition) -> BDiagram:
    """(n, [1,…,1], ⟦1,n⟧, ⟦1,n⟧, E_π), one edge from each element to its successor in its block"""
    n = pi.n
    edges = [(a, b) for block in pi.blocks for a, b in zip(block, block[1:])]
    return BDiagram(n, (1,) * n, range(1, n + 1), range(1, n + 1), edges)


def partition_of(g: BDiagram) -> SetPartition:
    """Inverse of b_of; the blocks are the paths of g"""
    n = g.n
    full = tuple(range(1, n + 1))
    if g.lam != (1,) * n or g.up != full or g.down != full:
        raise PartitionError(f"{g!r} is not the diagram of a set partition")
    return SetPartition(tuple(path.indices for path in g.paths()))


def wsym_product_oracle(pi: SetPartition, pi2: SetPartition) -> List[SetPartition]:
    """
    Product of set partitions by partial matchings of blocks

    Every result keeps the blocks of π and the shifted blocks of π′, with some blocks
    of π′ each merged into a distinct block of π.

    Returns:
        List[SetPartition]: Results with multiplicity, in generation order
    """
    lower = list(pi.blocks)
    upper = [tuple(x + pi.n for x in b) for b in pi2.blocks]
    results: List[SetPartition] = []

    def place(idx: int, merged: Dict[int, Block]) -> None:
        if idx == len(upper):
            blocks = [lower[i] + merged.get(i, ()) for i in range(len(lower))]
            blocks += [b for j, b in enumerate(upper) if j not in placed]
            results.append(SetPartition(tuple(blocks)))
            return
        place(idx + 1, merged)
        for i in range(len(lower)):
            if i in merged:
                continue
            merged[i] = upper[idx]
            placed.add(idx)
            place(idx + 1, merged)
            placed.discard(idx)
            del merged[i]

    placed: set = set()
    place(0, {})
    return results


def wsym_product_via_diagrams(pi: SetPartition, pi2: SetPartition) -> Dict[SetPartition, int]:
    """b_of(π) ⋆ b_of(π′) decoded term by term"""
    return {partition_of(g): integral_coefficient(c) for g, c in star(b_of(pi), b_of(pi2)).items()}


class PartitionTensor(LinearCombination[Tuple[object, object]]):
    """Integer combination of pairs of partitions"""

    @staticmethod
    def coerce(c: Any) -> int:
        try:
            return integral_coefficient(c)
        except ValueError as e:
            raise PartitionError(str(e)) from e

    def to_text(self) -> str:
        return "\n".join(f"{c} {l.to_text()} ⊗ {r.to_text()}" for (l, r), c in self.items())


def wsym_coproduct(pi: SetPartition) -> PartitionTensor:
    """Σ over splittings of the blocks into (e, f) of std(e) ⊗ std(f)"""
    return _coproduct(pi.blocks, as_lists=False)


def _coproduct(parts: Tuple[Block, ...], as_lists: bool) -> PartitionTensor:
    result = PartitionTensor()
    for mask in range(1 << len(parts)):
        left = [p for i, p in enumerate(parts) if mask >> i & 1]
        right = [p for i, p in enumerate(parts) if not mask >> i & 1]
        result.add_term((std(left, as_lists), std(right, as_lists)), 1)
    return result


## ==========================================================================
## BWSym: m_Π

def _tree_edges(values: Block) -> List[Tuple[int, int]]:
    edges: List[Tuple[int, int]] = []

    def build(part: Block) -> int:
        root_pos = part.index(min(part))
        root = part[root_pos]
        left, right = part[:root_pos], part[root_pos + 1:]
        if left:
            edges.append((2 * root - 1, 2 * build(left) - 1))
        if right:
            edges.append((2 * root, 2 * build(right) - 1))
        return root

    if values:
        build(values)
    return edges


def m_of(lists: SetPartitionIntoLists) -> BDiagram:
    """
    Diagram of a set partition into lists

    Returns:
        BDiagram: (n, [2,…,2], ⟦1,2n⟧, {1,3,…,2n−1}, E) where every list becomes the
        increasing binary tree of its entries
    """
    n = lists.n
    edges = [e for l in lists.lists for e in _tree_edges(l)]
    return BDiagram(n, (2,) * n, range(1, 2 * n + 1), range(1, 2 * n, 2), edges)


def m_of_permutation(sigma: Sequence[int]) -> BDiagram:
    return m_of(SetPartitionIntoLists((tuple(sigma),)))


def _is_g21(g: BDiagram) -> bool:
    n = g.n
    return (g.lam == (2,) * n and g.up == tuple(range(1, 2 * n + 1))
            and g.down == tuple(range(1, 2 * n, 2)))


def lists_of(g: BDiagram) -> SetPartitionIntoLists:
    """Inverse of m_of: the in-order traversal of each tree"""
    if not _is_g21(g):
        raise PartitionError(f"{g!r} is not of the 𝒢²₁ shape")
    children = {a: (b + 1) // 2 for a, b in g.edges}
    targets = {(b + 1) // 2 for _, b in g.edges}

    def in_order(v: int) -> List[int]:
        left = in_order(children[2 * v - 1]) if 2 * v - 1 in children else []
        right = in_order(children[2 * v]) if 2 * v in children else []
        return left + [v] + right

    return SetPartitionIntoLists(tuple(tuple(in_order(v)) for v in range(1, g.n + 1) if v not in targets))


def bwsym_product_oracle(lists: SetPartitionIntoLists, lists2: SetPartitionIntoLists) -> List[SetPartitionIntoLists]:
    """
    Product of partitions into lists by insertion into gaps

    Each shifted list of Π′ either stays separate or is inserted as a contiguous
    block into one gap of a list of Π (ℓ + 1 gaps for a list of length ℓ), distinct
    lists of Π′ going to distinct gaps.

    Returns:
        List[SetPartitionIntoLists]: Results with multiplicity, in generation order
    """
    lower = list(lists.lists)
    upper = [tuple(x + lists.n for x in l) for l in lists2.lists]
    gaps = [(i, pos) for i, l in enumerate(lower) for pos in range(len(l) + 1)]
    results: List[SetPartitionIntoLists] = []
    filled: Dict[Tuple[int, int], Block] = {}
    separate: List[Block] = []

    def assemble() -> SetPartitionIntoLists:
        built = []
        for i, l in enumerate(lower):
            entries: List[int] = []
            for pos in range(len(l) + 1):
                entries.extend(filled.get((i, pos), ()))
                if pos < len(l):
                    entries.append(l[pos])
            built.append(tuple(entries))
        return SetPartitionIntoLists(tuple(built + separate))

    def place(idx: int) -> None:
        if idx == len(upper):
            results.append(assemble())
            return
        separate.append(upper[idx])
        place(idx + 1)
        separate.pop()
        for gap in gaps:
            if gap in filled:
                continue
            filled[gap] = upper[idx]
            place(idx + 1)
            del filled[gap]

    place(0)
    return results


def bwsym_product_via_diagrams(lists: SetPartitionIntoLists, lists2: SetPartitionIntoLists) -> Dict[SetPartitionIntoLists, int]:
    """m_of(Π) ⋆ m_of(Π′) decoded term by term"""
    return {lists_of(g): integral_coefficient(c) for g, c in star(m_of(lists), m_of(lists2)).items()}


def bwsym_coproduct(lists: SetPartitionIntoLists) -> PartitionTensor:
    """Σ over splittings of the lists into (e, f) of std(e) ⊗ std(f)"""
    return _coproduct(lists.lists, as_lists=True)


## ==========================================================================
## Generators and counts

def all_set_partitions(n: int) -> List[SetPartition]:
    """Every set partition of ⟦1,n⟧, sorted"""
    if n < 0:
        raise PartitionError(f"n must be ≥ 0, got {n}")
    if n == 0:
        return [SetPartition(())]
    return sorted(SetPartition(tuple(tuple(b) for b in p)) for p in multiset_partitions(list(range(1, n + 1))))


def all_partitions_into_lists(n: int) -> List[SetPartitionIntoLists]:
    """Every set partition of ⟦1,n⟧ into lists: each block in every order"""
    result = []
    for pi in all_set_partitions(n):
        for orders in product(*(permutations(b) for b in pi.blocks)):
            result.append(SetPartitionIntoLists(tuple(orders)))
    return sorted(result)


def enumerate_g21(n: int) -> Iterator[BDiagram]:
    """Every diagram with n vertices of the 𝒢²₁ shape"""
    up = tuple(range(1, 2 * n + 1))
    down = tuple(range(1, 2 * n, 2))
    candidates = {a: [b for b in down if (b + 1) // 2 > (a + 1) // 2] for a in up}
    for edges in iter_matchings(up, candidates):
        yield BDiagram._trusted(n, (2,) * n, up, down, edges)
