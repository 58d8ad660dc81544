#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./hopf/LinearCombination.py

"""
Sparse linear combinations with exact coefficients.

A LinearCombination maps hashable, orderable basis keys to nonzero coefficients.
Arithmetic returns new objects; add_term is the only in-place operation and is meant
for operation-local builders.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Generic, Iterator, List, Mapping, Optional, Tuple, TypeVar

K = TypeVar("K")


def format_coefficient(c: Any) -> str:
    """Integer coefficients print as integers, others as p/q"""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def integral_coefficient(c: Any) -> int:
    """Exact integer value of c; non-integral values are rejected, never truncated"""
    value = Fraction(c)
    if value.denominator != 1:
        raise ValueError(f"non-integral coefficient {format_coefficient(value)}")
    return value.numerator


class LinearCombination(Generic[K]):
    """Finite sum Σ c_k·k with no zero coefficients stored"""

    coerce: Callable[[Any], Any] = Fraction

    def __init__(self, terms: Optional[Mapping[K, Any]] = None):
        self.terms: Dict[K, Any] = {}
        if terms:
            for key, coef in terms.items():
                self.add_term(key, coef)

    @classmethod
    def basis(cls, key: K, coef: Any = 1):
        """The single term coef·key"""
        result = cls()
        result.add_term(key, coef)
        return result

    def add_term(self, key: K, coef: Any) -> None:
        """Adds coef·key in place, dropping the key when its coefficient cancels"""
        total = self.terms.get(key, 0) + self.coerce(coef)
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def coefficient(self, key: K) -> Any:
        return self.terms.get(key, self.coerce(0))

    def items(self) -> List[Tuple[K, Any]]:
        """Terms sorted by key"""
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def keys(self) -> List[K]:
        return sorted(self.terms)

    def map_keys(self, fn: Callable[[K], Any]):
        """Applies fn to every key and re-collects; fn must return keys of the same kind"""
        result = type(self)()
        for key, coef in self.terms.items():
            result.add_term(fn(key), coef)
        return result

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[K]:
        return iter(self.keys())

    def __contains__(self, key: K) -> bool:
        return key in self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinearCombination):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other: "LinearCombination[K]"):
        result = type(self)(self.terms)
        for key, coef in other.terms.items():
            result.add_term(key, coef)
        return result

    def __neg__(self):
        return type(self)({key: -coef for key, coef in self.terms.items()})

    def __sub__(self, other: "LinearCombination[K]"):
        return self + (-other)

    def __mul__(self, scalar: Any):
        if isinstance(scalar, LinearCombination):
            return NotImplemented
        return type(self)({key: coef * scalar for key, coef in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = " + ".join(f"{format_coefficient(c)}*{k!r}" for k, c in self.items())
        return f"{type(self).__name__}({body or '0'})"
