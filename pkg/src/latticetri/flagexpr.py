"""Tiny boolean language over the six condition flags.

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | NAME

NAME is a short label (``f g h r area even``) or the full condition name.
:func:`compile_expr` returns a function of a mask (int or numpy array).
"""

from __future__ import annotations

import re

from .conditions import CONDITION_LABELS, CONDITION_NAMES

__all__ = ["FlagExpressionError", "compile_expr"]

_TOKEN = re.compile(r"\s*(?:([A-Za-z_]+)|(.))")
_NAMES = {**{n: i for i, n in enumerate(CONDITION_LABELS)},
          **{n: i for i, n in enumerate(CONDITION_NAMES)}}


class FlagExpressionError(ValueError):
    pass


def _tokenize(text: str):
    tokens = []
    for name, op in _TOKEN.findall(text):
        if name:
            if name not in _NAMES:
                raise FlagExpressionError(f"unknown flag {name!r}")
            tokens.append(("name", _NAMES[name]))
        elif op.strip():
            if op not in "&|!()":
                raise FlagExpressionError(f"unexpected character {op!r}")
            tokens.append(("op", op))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise FlagExpressionError("unexpected end of expression")
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() == ("op", "|"):
            self.take()
            lhs, rhs = node, self.term()
            node = lambda m, lhs=lhs, rhs=rhs: lhs(m) | rhs(m)  # noqa: E731
        return node

    def term(self):
        node = self.factor()
        while self.peek() == ("op", "&"):
            self.take()
            lhs, rhs = node, self.factor()
            node = lambda m, lhs=lhs, rhs=rhs: lhs(m) & rhs(m)  # noqa: E731
        return node

    def factor(self):
        kind, val = self.take()
        if kind == "name":
            return lambda m, i=val: (m >> i & 1) == 1
        if val == "!":
            inner = self.factor()
            # xor keeps plain bools and numpy bool arrays both working
            return lambda m: inner(m) ^ True
        if val == "(":
            node = self.expr()
            if self.take() != ("op", ")"):
                raise FlagExpressionError("expected ')'")
            return node
        raise FlagExpressionError(f"unexpected {val!r}")


def compile_expr(text: str):
    tokens = _tokenize(text)
    if not tokens:
        raise FlagExpressionError("empty expression")
    parser = _Parser(tokens)
    fn = parser.expr()
    if parser.peek() is not None:
        raise FlagExpressionError(f"trailing input at token {parser.pos}")
    return fn
