"""Propositional formula AST, printing, symbol extraction and evaluation.

Nodes are immutable. Conjunction and disjunction are binary; sequences are
folded to the left by :func:`conjoin` / :func:`disjoin`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .errors import UndefinedSymbolError

Valuation = dict[str, bool]

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"true", "false"})


def is_symbol_name(name: str) -> bool:
    return bool(_IDENT.match(name)) and name not in RESERVED


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not is_symbol_name(self.name):
            raise ValueError(f"invalid symbol name: {self.name!r}")

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Const:
    value: bool

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return to_text(self)


Formula = Union[Var, Const, Not, And, Or, Implies, Iff]
BINARY = (And, Or, Implies, Iff)

TRUE = Const(True)
FALSE = Const(False)


def conjoin(formulas: Iterable[Formula]) -> Formula:
    """Left fold of ``&`` over ``formulas``; the empty conjunction is ``true``."""
    result = None
    for f in formulas:
        result = f if result is None else And(result, f)
    return TRUE if result is None else result


def disjoin(formulas: Iterable[Formula]) -> Formula:
    result = None
    for f in formulas:
        result = f if result is None else Or(result, f)
    return FALSE if result is None else result


def symbols(formula: Formula) -> frozenset[str]:
    """Names of the variables occurring in ``formula``."""
    found: set[str] = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            found.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.arg)
        elif isinstance(node, BINARY):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


def symbols_of(formulas: Iterable[Formula]) -> frozenset[str]:
    out: set[str] = set()
    for f in formulas:
        out |= symbols(f)
    return frozenset(out)


def evaluate(formula: Formula, valuation: Mapping[str, bool]) -> bool:
    if isinstance(formula, Var):
        try:
            return bool(valuation[formula.name])
        except KeyError:
            raise UndefinedSymbolError(formula.name) from None
    if isinstance(formula, Const):
        return formula.value
    if isinstance(formula, Not):
        return not evaluate(formula.arg, valuation)
    if isinstance(formula, And):
        # evaluate both sides so a missing symbol is always reported
        left = evaluate(formula.left, valuation)
        return evaluate(formula.right, valuation) and left
    if isinstance(formula, Or):
        left = evaluate(formula.left, valuation)
        return evaluate(formula.right, valuation) or left
    if isinstance(formula, Implies):
        left = evaluate(formula.left, valuation)
        return evaluate(formula.right, valuation) or not left
    if isinstance(formula, Iff):
        return evaluate(formula.left, valuation) == evaluate(formula.right, valuation)
    raise TypeError(f"not a formula: {formula!r}")


def assign(formula: Formula, partial: Mapping[str, bool]) -> Formula:
    """Substitute the assigned symbols and fold constants away.

    The result is either a :class:`Const` or contains no ``Const`` leaves.
    """
    if isinstance(formula, Var):
        if formula.name in partial:
            return TRUE if partial[formula.name] else FALSE
        return formula
    if isinstance(formula, Const):
        return formula
    if isinstance(formula, Not):
        a = assign(formula.arg, partial)
        if isinstance(a, Const):
            return FALSE if a.value else TRUE
        return Not(a)
    left = assign(formula.left, partial)
    right = assign(formula.right, partial)
    lc = left.value if isinstance(left, Const) else None
    rc = right.value if isinstance(right, Const) else None
    if isinstance(formula, And):
        if lc is False or rc is False:
            return FALSE
        if lc is True:
            return right
        if rc is True:
            return left
        return And(left, right)
    if isinstance(formula, Or):
        if lc is True or rc is True:
            return TRUE
        if lc is False:
            return right
        if rc is False:
            return left
        return Or(left, right)
    if isinstance(formula, Implies):
        if lc is False or rc is True:
            return TRUE
        if lc is True:
            return right
        if rc is False:
            return Not(left)
        return Implies(left, right)
    # Iff
    if lc is not None and rc is not None:
        return TRUE if lc == rc else FALSE
    if lc is not None:
        return right if lc else Not(right)
    if rc is not None:
        return left if rc else Not(left)
    return Iff(left, right)


def size(formula: Formula) -> int:
    if isinstance(formula, (Var, Const)):
        return 1
    if isinstance(formula, Not):
        return 1 + size(formula.arg)
    return 1 + size(formula.left) + size(formula.right)


# printing ------------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_OPS = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_RIGHT_ASSOC = (Implies, Iff)


def _prec(node: Formula) -> int:
    return _PREC.get(type(node), 5)


def to_text(formula: Formula) -> str:
    """Render with the minimal parentheses that make ``parse`` rebuild the same tree."""
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Const):
        return "true" if formula.value else "false"
    if isinstance(formula, Not):
        inner = to_text(formula.arg)
        if isinstance(formula.arg, BINARY):
            inner = f"({inner})"
        return "~" + inner
    p = _prec(formula)
    left, right = to_text(formula.left), to_text(formula.right)
    if isinstance(formula, _RIGHT_ASSOC):
        left_paren = _prec(formula.left) <= p
        right_paren = _prec(formula.right) < p
    else:
        left_paren = _prec(formula.left) < p
        right_paren = _prec(formula.right) <= p
    if left_paren:
        left = f"({left})"
    if right_paren:
        right = f"({right})"
    return f"{left} {_OPS[type(formula)]} {right}"


@dataclass(frozen=True)
class Theory:
    """An ordered finite sequence of formulas and its symbol universe."""

    formulas: tuple
    universe: frozenset

    def __init__(self, formulas: Iterable[Formula] = (), universe: Iterable[str] | None = None):
        formulas = tuple(formulas)
        used = symbols_of(formulas)
        universe = used if universe is None else frozenset(universe)
        if not used <= universe:
            raise ValueError(f"universe is missing symbols {sorted(used - universe)}")
        object.__setattr__(self, "formulas", formulas)
        object.__setattr__(self, "universe", universe)

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def __getitem__(self, i):
        return self.formulas[i]

    def to_text(self) -> str:
        return "".join(to_text(f) + "\n" for f in self.formulas)


def as_formulas(theory) -> tuple:
    if isinstance(theory, Theory):
        return theory.formulas
    return tuple(theory)


def as_theory(theory) -> Theory:
    return theory if isinstance(theory, Theory) else Theory(theory)
