"""Truth tables packed into Python integers, and the operations built on them.

A table over the name-ordered symbols ``(x0, ..., x{n-1})`` has ``2**n`` rows.
Row ``r`` assigns ``x_i`` the bit ``n-1-i`` of ``r``, so increasing row index
is lexicographic order with ``false`` before ``true`` and the first symbol
most significant. Bit ``r`` of the integer is the function value on row ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .formula import (
    FALSE,
    TRUE,
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    symbols,
)


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def var_mask(n: int, i: int) -> int:
    """Rows of an ``n``-variable table in which variable ``i`` is true."""
    k = n - 1 - i
    block = 1 << k
    pattern = ((1 << block) - 1) << block  # 2*block bits: low half false, high half true
    width = block << 1
    return pattern * (full_mask(n) // ((1 << width) - 1))


def table_of(formula: Formula, order: tuple[str, ...]) -> int:
    index = {name: i for i, name in enumerate(order)}
    n = len(order)
    full = full_mask(n)

    def walk(node) -> int:
        if isinstance(node, Var):
            return var_mask(n, index[node.name])
        if isinstance(node, Const):
            return full if node.value else 0
        if isinstance(node, Not):
            return full ^ walk(node.arg)
        a, b = walk(node.left), walk(node.right)
        if isinstance(node, And):
            return a & b
        if isinstance(node, Or):
            return a | b
        if isinstance(node, Implies):
            return (full ^ a) | b
        return full ^ (a ^ b)

    return walk(formula)


@dataclass(frozen=True)
class BoolFunc:
    order: tuple[str, ...]
    bits: int

    @classmethod
    def of(cls, formula: Formula, order: Iterable[str] | None = None) -> "BoolFunc":
        order = tuple(sorted(symbols(formula) if order is None else order))
        return cls(order, table_of(formula, order))

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def is_valid(self) -> bool:
        return self.bits == self.full

    def is_unsat(self) -> bool:
        return self.bits == 0

    def _cofactor_bits(self, i: int, value: bool) -> int:
        m = var_mask(self.n, i)
        shift = 1 << (self.n - 1 - i)
        if value:
            d = self.bits & m
            return d | (d >> shift)
        d = self.bits & (self.full ^ m)
        return d | (d << shift)

    def cofactor(self, name: str, value: bool) -> "BoolFunc":
        return BoolFunc(self.order, self._cofactor_bits(self.order.index(name), value))

    def depends_on_index(self, i: int) -> bool:
        return self._cofactor_bits(i, True) != self._cofactor_bits(i, False)

    def essential(self) -> frozenset[str]:
        return frozenset(x for i, x in enumerate(self.order) if self.depends_on_index(i))

    def eliminate(self, names: Iterable[str], mode: str = "exists") -> "BoolFunc":
        if mode not in ("exists", "forall"):
            raise ValueError(f"mode must be 'exists' or 'forall', not {mode!r}")
        bits = self.bits
        for name in names:
            if name not in self.order:
                continue
            f = BoolFunc(self.order, bits)
            i = self.order.index(name)
            hi, lo = f._cofactor_bits(i, True), f._cofactor_bits(i, False)
            bits = hi | lo if mode == "exists" else hi & lo
        return BoolFunc(self.order, bits)

    def first_model(self) -> dict[str, bool] | None:
        if self.bits == 0:
            return None
        row = (self.bits & -self.bits).bit_length() - 1
        n = self.n
        return {x: bool((row >> (n - 1 - i)) & 1) for i, x in enumerate(self.order)}

    def to_formula(self) -> Formula:
        """Canonical formula: Shannon expansion over the essential symbols in name order."""
        return _render(self, 0)


def _render(f: BoolFunc, start: int) -> Formula:
    for i in range(start, f.n):
        hi_bits, lo_bits = f._cofactor_bits(i, True), f._cofactor_bits(i, False)
        if hi_bits != lo_bits:
            break
    else:
        return TRUE if f.bits == f.full else FALSE
    x = Var(f.order[i])
    full = f.full
    if hi_bits == full and lo_bits == 0:
        return x
    if hi_bits == 0 and lo_bits == full:
        return Not(x)
    hi = _render(BoolFunc(f.order, hi_bits), i + 1)
    lo = _render(BoolFunc(f.order, lo_bits), i + 1)
    if hi_bits == full:
        return Or(x, lo)
    if hi_bits == 0:
        return And(Not(x), lo)
    if lo_bits == 0:
        return And(x, hi)
    if lo_bits == full:
        return Implies(x, hi)
    if lo_bits == full ^ hi_bits:
        return Iff(x, hi)
    return Or(And(x, hi), And(Not(x), lo))


def essential_symbols(formula: Formula) -> frozenset[str]:
    """Symbols whose two cofactors are not equivalent."""
    return BoolFunc.of(formula).essential()


def canonicalize(formula: Formula) -> Formula:
    return BoolFunc.of(formula).to_formula()


def forget(formula: Formula, names: Iterable[str], mode: str = "exists") -> Formula:
    """Eliminate ``names`` by disjoining (``exists``) or conjoining (``forall``) cofactors."""
    return BoolFunc.of(formula).eliminate(names, mode).to_formula()


def equivalent(a: Formula, b: Formula) -> bool:
    order = tuple(sorted(symbols(a) | symbols(b)))
    return table_of(a, order) == table_of(b, order)
