#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ./cli/ExpressionParser.py

"""
Parser for operator expressions in a and a+.

Grammar, with '*' binding looser than juxtaposition:

    expr    := term ('*' term)*
    term    := power power*
    power   := primary ('^' INT)?
    primary := 'a+' | 'a' | '(' expr ')'
"""

from typing import List, Optional, Tuple

from heisenberg import ANNIHILATE, CREATE, OperatorExpr, Power, Product

Token = Tuple[str, str, int]


class ExpressionSyntaxError(ValueError):
    """Syntax error at a character offset of the input"""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        self.message = message
        super().__init__(f"offset {offset}: {message}")


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "a":
            if text.startswith("a+", i):
                tokens.append(("ATOM", "a+", i))
                i += 2
            else:
                tokens.append(("ATOM", "a", i))
                i += 1
        elif ch in "()*^":
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(("INT", text[start:i], start))
        else:
            raise ExpressionSyntaxError(i, f"unexpected character {ch!r}")
    tokens.append(("END", "", len(text)))
    return tokens


class _Parser:

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self, kind: str) -> Optional[Token]:
        token = self.peek()
        if token[0] != kind:
            return None
        self.pos += 1
        return token

    def parse(self) -> OperatorExpr:
        expr = self.expr()
        kind, value, offset = self.peek()
        if kind != "END":
            raise ExpressionSyntaxError(offset, "unbalanced ')'" if kind == ")" else f"unexpected {value!r}")
        return expr

    def expr(self) -> OperatorExpr:
        terms = [self.term()]
        while self.take("*"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Product(tuple(terms))

    def term(self) -> OperatorExpr:
        powers = [self.power()]
        while self.peek()[0] in ("ATOM", "("):
            powers.append(self.power())
        return powers[0] if len(powers) == 1 else Product(tuple(powers))

    def power(self) -> OperatorExpr:
        base = self.primary()
        while self.take("^"):
            kind, value, offset = self.peek()
            if kind != "INT":
                raise ExpressionSyntaxError(offset, "expected a positive integer exponent")
            self.pos += 1
            if int(value) < 1:
                raise ExpressionSyntaxError(offset, f"exponent must be positive, got {value}")
            base = Power(base, int(value))
        return base

    def primary(self) -> OperatorExpr:
        kind, value, offset = self.peek()
        if kind == "ATOM":
            self.pos += 1
            return CREATE if value == "a+" else ANNIHILATE
        if kind == "(":
            self.pos += 1
            inner = self.expr()
            if not self.take(")"):
                raise ExpressionSyntaxError(self.peek()[2], f"unbalanced '(' opened at offset {offset}")
            return inner
        if kind == "END":
            raise ExpressionSyntaxError(offset, "unexpected end of expression")
        raise ExpressionSyntaxError(offset, f"unexpected {value!r}")


def parse_expr(text: str) -> OperatorExpr:
    """
    Parses an operator expression

    Args:
        text: e.g. "(a+ a)^3" or "a+^2 a^2 * a+^2 a^2"

    Returns:
        OperatorExpr: The expression tree

    Raises:
        ExpressionSyntaxError: With the offset of the offending character
    """
    return _Parser(text).parse()
