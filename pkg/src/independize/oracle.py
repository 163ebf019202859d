"""Satisfiability, entailment, equivalence and independence checks.

Two interchangeable backends decide satisfiability:

* ``enum``: exhaustive truth-table enumeration (bit-parallel). The first model
  in lexicographic order over the name-ordered symbols is returned.
* ``search``: DPLL over the formulas themselves with unit propagation,
  branching on the least unassigned symbol, ``false`` first.

``auto`` uses enumeration up to ``enum_threshold`` symbols and search above it.
Every model either backend produces is re-checked with :func:`evaluate`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .boolfunc import full_mask, table_of
from .errors import IndependizeError, ResourceLimitError
from .formula import (
    And,
    Const,
    Formula,
    Not,
    Var,
    as_formulas,
    assign,
    evaluate,
    symbols_of,
)

DEFAULT_MAX_VARS = 24
DEFAULT_ENUM_THRESHOLD = 20


@dataclass(frozen=True)
class SatResult:
    sat: bool
    model: dict[str, bool] | None = None

    def __bool__(self) -> bool:
        return self.sat


@dataclass(frozen=True)
class Certificate:
    """Outcome of an entailment query; a countermodel carries its witness."""

    kind: str  # "entailed" or "countermodel"
    witness: dict[str, bool] | None = None

    @property
    def entailed(self) -> bool:
        return self.kind == "entailed"

    def __bool__(self) -> bool:
        return self.entailed

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.witness is not None:
            out["witness"] = dict(sorted(self.witness.items()))
        return out


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    direction: str | None = None  # "A=>B" when some member of B is not entailed by A
    formula: Formula | None = None
    countermodel: dict[str, bool] | None = None

    def __bool__(self) -> bool:
        return self.equivalent


@dataclass(frozen=True)
class IndependenceEntry:
    index: int
    formula: Formula
    independent: bool
    witness: dict[str, bool] | None = None


def _enum_sat(formulas: Sequence[Formula], order: tuple[str, ...]) -> dict[str, bool] | None:
    bits = full_mask(len(order))
    for f in formulas:
        bits &= table_of(f, order)
        if not bits:
            return None
    row = (bits & -bits).bit_length() - 1
    n = len(order)
    return {x: bool((row >> (n - 1 - i)) & 1) for i, x in enumerate(order)}


def _split(formula: Formula, out: list) -> None:
    if isinstance(formula, And):
        _split(formula.left, out)
        _split(formula.right, out)
    else:
        out.append(formula)


def _search_sat(formulas: Sequence[Formula], order: tuple[str, ...]) -> dict[str, bool] | None:
    rank = {x: i for i, x in enumerate(order)}

    def propagate(fs: list, trail: dict) -> list | None:
        while True:
            pending: list = []
            for f in fs:
                _split(assign(f, trail), pending)
            units = {}
            rest = []
            for f in pending:
                if isinstance(f, Const):
                    if not f.value:
                        return None
                    continue
                if isinstance(f, Var) or (isinstance(f, Not) and isinstance(f.arg, Var)):
                    name = f.name if isinstance(f, Var) else f.arg.name
                    value = isinstance(f, Var)
                    if units.get(name, value) != value:
                        return None
                    units[name] = value
                    continue
                rest.append(f)
            if not units:
                return rest
            trail.update(units)
            fs = rest

    def dpll(fs: list, trail: dict) -> dict | None:
        trail = dict(trail)
        fs = propagate(fs, trail)
        if fs is None:
            return None
        if not fs:
            return trail
        free = symbols_of(fs)
        x = min(free, key=rank.__getitem__)
        for value in (False, True):
            model = dpll(fs, {**trail, x: value})
            if model is not None:
                return model
        return None

    trail = dpll(list(formulas), {})
    if trail is None:
        return None
    return {x: trail.get(x, False) for x in order}


@dataclass
class Oracle:
    """Decision procedures with a symbol cap and a call counter."""

    max_vars: int = DEFAULT_MAX_VARS
    enum_threshold: int = DEFAULT_ENUM_THRESHOLD
    backend: str = "auto"
    calls: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.backend not in ("auto", "enum", "search"):
            raise ValueError(f"unknown backend {self.backend!r}")

    def satisfiable(self, formulas: Iterable[Formula]) -> SatResult:
        formulas = tuple(formulas)
        order = tuple(sorted(symbols_of(formulas)))
        if len(order) > self.max_vars:
            raise ResourceLimitError(
                f"query has {len(order)} symbols, above the limit of {self.max_vars}"
            )
        self.calls += 1
        backend = self.backend
        if backend == "auto":
            backend = "enum" if len(order) <= self.enum_threshold else "search"
        model = _enum_sat(formulas, order) if backend == "enum" else _search_sat(formulas, order)
        if model is None:
            return SatResult(False)
        for f in formulas:
            if not evaluate(f, model):
                raise IndependizeError(f"{backend} backend returned a model falsifying {f}")
        return SatResult(True, model)

    def entails(self, premises: Iterable[Formula], conclusion: Formula) -> Certificate:
        result = self.satisfiable((*premises, Not(conclusion)))
        if result.sat:
            return Certificate("countermodel", result.model)
        return Certificate("entailed")

    def valid(self, formula: Formula) -> bool:
        return self.entails((), formula).entailed

    def equivalent_theories(self, a, b) -> EquivalenceResult:
        a, b = as_formulas(a), as_formulas(b)
        for direction, premises, targets in (("A=>B", a, b), ("B=>A", b, a)):
            for f in targets:
                cert = self.entails(premises, f)
                if not cert.entailed:
                    return EquivalenceResult(False, direction, f, cert.witness)
        return EquivalenceResult(True)

    def independent(self, theory) -> list[IndependenceEntry]:
        formulas = as_formulas(theory)
        report = []
        for i, f in enumerate(formulas):
            rest = formulas[:i] + formulas[i + 1:]
            cert = self.entails(rest, f)
            report.append(IndependenceEntry(i, f, not cert.entailed, cert.witness))
        return report


def _default() -> Oracle:
    return Oracle()


def satisfiable(formulas: Iterable[Formula], oracle: Oracle | None = None) -> SatResult:
    return (oracle or _default()).satisfiable(formulas)


def entails(premises: Iterable[Formula], conclusion: Formula, oracle: Oracle | None = None) -> Certificate:
    return (oracle or _default()).entails(premises, conclusion)


def valid(formula: Formula, oracle: Oracle | None = None) -> bool:
    return (oracle or _default()).valid(formula)


def equivalent_theories(a, b, oracle: Oracle | None = None) -> EquivalenceResult:
    return (oracle or _default()).equivalent_theories(a, b)


def independent(theory, oracle: Oracle | None = None) -> list[IndependenceEntry]:
    return (oracle or _default()).independent(theory)


def is_independent(theory, oracle: Oracle | None = None) -> bool:
    return all(e.independent for e in independent(theory, oracle))
