"""Layered strongest-consequence axiomatizations and the star-condition check.

A theory has the *star property* when no member is entailed by a set of
other members whose symbols, taken together, miss one of its own symbols.
:func:`starify` rebuilds a theory so that it has this property: for every
symbol set ``V`` (smallest first) it takes the strongest consequence of the
theory that mentions only ``V`` and keeps it when it is non-trivial, depends
on all of ``V`` and is not implied by what was kept before.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .boolfunc import BoolFunc, full_mask, table_of
from .errors import ResourceLimitError
from .formula import FALSE, Formula, Theory, as_formulas, as_theory, conjoin, symbols
from .oracle import Certificate, Oracle

DEFAULT_STARIFY_CAP = 14
DEFAULT_STAR_CHECK_CAP = 16


@dataclass(frozen=True)
class LayeredTheory:
    source: Theory
    layers: dict[int, tuple] = field(default_factory=dict)

    def flatten(self) -> Theory:
        out = [f for n in sorted(self.layers) for f in self.layers[n]]
        return Theory(out, self.source.universe)


def layered(theory, cap: int = DEFAULT_STARIFY_CAP) -> LayeredTheory:
    theory = as_theory(theory)
    universe = tuple(sorted(theory.universe))
    if len(universe) > cap:
        raise ResourceLimitError(
            f"starify over {len(universe)} symbols exceeds the cap of {cap}"
        )
    whole = BoolFunc(universe, table_of(conjoin(theory), universe))
    if whole.is_unsat():
        return LayeredTheory(theory, {0: (FALSE,)})
    layers: dict[int, list] = {}
    kept = full_mask(len(universe))  # conjunction of everything kept so far
    for k in range(len(universe) + 1):
        for chosen in combinations(universe, k):
            proj = whole.eliminate([x for x in universe if x not in chosen], "exists")
            if proj.is_valid():
                continue
            if proj.essential() != frozenset(chosen):
                continue
            if kept & ~proj.bits == 0:
                continue
            kept &= proj.bits
            layers.setdefault(k, []).append(proj.to_formula())
    return LayeredTheory(theory, {n: tuple(fs) for n, fs in layers.items()})


def starify(theory, cap: int = DEFAULT_STARIFY_CAP) -> Theory:
    """Equivalent theory with the star property, ordered by layer then symbol set."""
    return layered(theory, cap).flatten()


@dataclass(frozen=True)
class StarViolation:
    index: int
    formula: Formula
    premise_indices: tuple[int, ...]
    premises: tuple
    certificate: Certificate


def check_star(theory, cap: int = DEFAULT_STAR_CHECK_CAP, oracle: Oracle | None = None) -> StarViolation | None:
    """Return the first star violation, or ``None`` when the theory has the property.

    Candidates are ordered by the entailed member's position, then by the
    bitmask of premise positions (ascending) among the remaining members.
    """
    formulas = as_formulas(theory)
    if len(formulas) > cap:
        raise ResourceLimitError(f"star check over {len(formulas)} formulas exceeds the cap of {cap}")
    order = tuple(sorted(as_theory(theory).universe))
    full = full_mask(len(order))
    tables = [table_of(f, order) for f in formulas]
    syms = [symbols(f) for f in formulas]
    for i, psi in enumerate(formulas):
        others = [j for j in range(len(formulas)) if j != i]
        # entailment is monotone in the premises, so it is enough to test, for
        # each symbol of psi, the largest premise set avoiding that symbol
        hit = False
        for x in syms[i]:
            bits = full
            for j in others:
                if x not in syms[j]:
                    bits &= tables[j]
            if bits & ~tables[i] == 0:
                hit = True
                break
        if not hit:
            continue
        for mask in range(1 << len(others)):
            chosen = [others[b] for b in range(len(others)) if mask >> b & 1]
            covered = frozenset().union(*(syms[j] for j in chosen))
            if syms[i] <= covered:
                continue
            bits = full
            for j in chosen:
                bits &= tables[j]
            if bits & ~tables[i] == 0:
                premises = tuple(formulas[j] for j in chosen)
                cert = (oracle or Oracle()).entails(premises, psi)
                assert cert.entailed
                return StarViolation(i, psi, tuple(chosen), premises, cert)
    return None
