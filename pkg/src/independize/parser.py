"""Recursive-descent parser for the formula text syntax.

Precedence, tightest first: ``~``, ``&``, ``|``, ``->``, ``<->``. The two
arrows associate to the right, ``&`` and ``|`` to the left. ``#`` starts a
comment running to the end of the line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .formula import FALSE, TRUE, And, Formula, Iff, Implies, Not, Or, Theory, Var

_PUNCT = ("<->", "->", "~", "&", "|", "(", ")")
_ATOM_START = frozenset({"identifier", "true", "false", "~", "("})


@dataclass(frozen=True)
class Token:
    kind: str  # punctuation text, "identifier", "true", "false" or "end"
    text: str
    line: int
    column: int


def tokenize(text: str, source: str | None = None, first_line: int = 1) -> list[Token]:
    tokens = []
    line, col, i, n = first_line, 1, 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isascii() and ch.isalpha():
            j = i
            while j < n and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in ("true", "false") else "identifier"
            tokens.append(Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(Token(p, p, line, col))
                i += len(p)
                col += len(p)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col, _ATOM_START, source)
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], source: str | None):
        self.tokens = tokens
        self.pos = 0
        self.source = source

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, expected) -> ParseError:
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        return ParseError(f"unexpected {what}", t.line, t.column, frozenset(expected), self.source)

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.pos += 1
            return True
        return False

    def iff(self) -> Formula:
        left = self.implies()
        if self.accept("<->"):
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        node = self.conjunction()
        while self.accept("|"):
            node = Or(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.unary()
        while self.accept("&"):
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        if self.accept("~"):
            return Not(self.unary())
        t = self.tok
        if t.kind == "identifier":
            self.pos += 1
            return Var(t.text)
        if t.kind == "true":
            self.pos += 1
            return TRUE
        if t.kind == "false":
            self.pos += 1
            return FALSE
        if self.accept("("):
            inner = self.iff()
            if not self.accept(")"):
                raise self.fail({")", "&", "|", "->", "<->"})
            return inner
        raise self.fail(_ATOM_START)


def parse(text: str, source: str | None = None, first_line: int = 1) -> Formula:
    """Parse a single formula. Raises :class:`ParseError` on malformed or empty input."""
    tokens = tokenize(text, source, first_line)
    p = _Parser(tokens, source)
    if p.tok.kind == "end":
        raise p.fail(_ATOM_START)
    result = p.iff()
    if p.tok.kind != "end":
        raise p.fail({"&", "|", "->", "<->", "end of input"})
    return result


def parse_theory(text: str, source: str | None = None) -> Theory:
    """Parse a theory file: one formula per line, blank and comment-only lines skipped."""
    formulas = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if body.strip():
            formulas.append(parse(body, source, lineno))
    return Theory(formulas)
