"""Anchor selection, new-symbol blocks and the C/D formula sets.

Anchors are picked greedily: the first formula, then repeatedly the
least-index formula mentioning a symbol not yet covered by earlier anchors.
Anchor ``a`` owns the symbols it introduced (its *new symbols*). Every
formula lands in the block of the latest anchor whose new symbols it mentions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PartitionError
from .formula import Formula, Implies, as_formulas, conjoin, symbols, to_text


@dataclass(frozen=True)
class Anchor:
    index: int
    position: int  # position of the anchor formula in the input theory
    formula: Formula
    new_symbols: frozenset[str]


@dataclass(frozen=True)
class PartitionState:
    formulas: tuple
    anchors: tuple[Anchor, ...]
    blocks: dict[int, tuple[int, ...]]  # anchor index -> input positions
    covered: frozenset[str]

    def block(self, alpha: int) -> tuple:
        return tuple(self.formulas[p] for p in self.blocks[alpha])

    def divisors(self, formula: Formula) -> list[int]:
        s = symbols(formula)
        return [a.index for a in self.anchors if s & a.new_symbols]

    def to_json(self) -> dict:
        return {
            "anchors": [
                {
                    "alpha": a.index,
                    "position": a.position,
                    "formula": to_text(a.formula),
                    "new_symbols": sorted(a.new_symbols),
                }
                for a in self.anchors
            ],
            "blocks": {
                str(alpha): [to_text(self.formulas[p]) for p in positions]
                for alpha, positions in self.blocks.items()
            },
            "divisors": [
                {"formula": to_text(f), "divisors": self.divisors(f)} for f in self.formulas
            ],
        }


def build_partition(theory) -> PartitionState:
    formulas = as_formulas(theory)
    if not formulas:
        raise PartitionError("cannot partition an empty theory")
    syms = [symbols(f) for f in formulas]
    for f, s in zip(formulas, syms):
        if not s:
            raise PartitionError(f"formula without symbols cannot be partitioned: {to_text(f)}")
    needed = frozenset().union(*syms)
    anchors: list[Anchor] = []
    covered: frozenset[str] = frozenset()
    while covered != needed:
        pos = next(i for i, s in enumerate(syms) if not s <= covered)
        anchors.append(Anchor(len(anchors), pos, formulas[pos], syms[pos] - covered))
        covered |= syms[pos]
    blocks: dict[int, list[int]] = {a.index: [] for a in anchors}
    for i, s in enumerate(syms):
        alpha = max(a.index for a in anchors if s & a.new_symbols)
        blocks[alpha].append(i)
    return PartitionState(formulas, tuple(anchors), {a: tuple(ps) for a, ps in blocks.items()}, covered)


def _anchor(state: PartitionState, alpha: int) -> Anchor:
    if not isinstance(alpha, int) or not 0 <= alpha < len(state.anchors):
        raise PartitionError(f"unknown anchor index {alpha!r}")
    return state.anchors[alpha]


def divides(state: PartitionState, beta: int, formula: Formula) -> bool:
    """Whether ``formula`` mentions one of the new symbols of anchor ``beta``."""
    return bool(symbols(formula) & _anchor(state, beta).new_symbols)


def strictly_divides(state: PartitionState, beta: int, alpha: int) -> bool:
    anchor = _anchor(state, alpha)
    _anchor(state, beta)
    return beta < alpha and divides(state, beta, anchor.formula)


@dataclass(frozen=True)
class TransformedSets:
    C: tuple  # (alpha, psi_alpha)
    D: tuple  # (alpha, source formula, transformed formula)

    @property
    def c_formulas(self) -> tuple:
        return tuple(psi for _, psi in self.C)

    @property
    def d_formulas(self) -> tuple:
        return tuple(t for _, _, t in self.D)


def build_transformed(state: PartitionState) -> TransformedSets:
    anchors = state.anchors
    C = []
    for a in anchors:
        guards = [b.formula for b in anchors[: a.index] if strictly_divides(state, b.index, a.index)]
        C.append((a.index, Implies(conjoin(guards), a.formula) if guards else a.formula))
    D = []
    anchor_positions = {a.position for a in anchors}
    for a in anchors:
        for pos in state.blocks[a.index]:
            if pos in anchor_positions:
                continue
            phi = state.formulas[pos]
            guards = [anchors[b].formula for b in state.divisors(phi)]
            D.append((a.index, phi, Implies(conjoin(guards), phi)))
    return TransformedSets(tuple(C), tuple(D))
