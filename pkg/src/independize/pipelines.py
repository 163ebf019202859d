"""End-to-end constructions of independent axiomatizations.

Two routes are offered:

* the *chain* route (``mode="tarski"``) keeps each formula not implied by the
  ones selected before it, then guards every selected formula with the
  conjunction of its predecessors;
* the *layered* route (``mode="reznikoff"``) first makes the theory satisfy the
  star property, partitions it by new symbols, guards anchors and block members
  by the anchors they mention, and pairs block members off with anchors.

Both results are certified against the original input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CertificationError,
    DisjointnessError,
    HypothesisViolationError,
    SizeError,
)
from .formula import FALSE, And, Implies, Theory, as_formulas, conjoin, symbols_of, to_text
from .oracle import Oracle
from .partition import build_partition, build_transformed
from .starify import DEFAULT_STARIFY_CAP, starify


@dataclass(frozen=True)
class TarskiChain:
    selected: tuple
    transformed: tuple
    positions: tuple = ()  # input positions of the selected formulas


def tarski_chain(theory, oracle: Oracle | None = None) -> TarskiChain:
    oracle = oracle or Oracle()
    formulas = as_formulas(theory)
    selected: list = []
    positions: list = []
    for i, f in enumerate(formulas):
        # a valid formula is entailed by the empty selection, so it is never kept
        if not oracle.entails(selected, f).entailed:
            selected.append(f)
            positions.append(i)
    transformed = [
        f if n == 0 else Implies(conjoin(selected[:n]), f) for n, f in enumerate(selected)
    ]
    return TarskiChain(tuple(selected), tuple(transformed), tuple(positions))


def tarski_transform(chain: TarskiChain, collapse: bool = False) -> Theory:
    if not chain.selected:
        return Theory()
    if collapse:
        return Theory([conjoin(chain.selected)])
    return Theory(chain.transformed)


def check_merge_hypothesis(C, D, oracle: Oracle | None = None) -> None:
    """Raise unless no member of ``C`` follows from the rest of ``C`` and ``D``."""
    oracle = oracle or Oracle()
    C, D = as_formulas(C), as_formulas(D)
    for i, phi in enumerate(C):
        rest = C[:i] + C[i + 1:] + D
        cert = oracle.entails(rest, phi)
        if cert.entailed:
            raise HypothesisViolationError(
                f"{to_text(phi)} is entailed by the other members", phi, cert
            )


def reznikoff_merge(C, D, paranoid: bool = False, oracle: Oracle | None = None) -> Theory:
    """Pair the i-th member of ``D`` with the i-th member of ``C``.

    Returns the conjunctions ``d & c`` followed by the unpaired members of ``C``.
    """
    C, D = as_formulas(C), as_formulas(D)
    if len(D) > len(C):
        raise SizeError(f"cannot inject {len(D)} formulas into {len(C)}")
    shared = set(C) & set(D)
    if shared:
        raise DisjointnessError(
            "C and D share " + ", ".join(sorted(to_text(f) for f in shared))
        )
    if paranoid:
        check_merge_hypothesis(C, D, oracle)
    merged = [And(d, c) for d, c in zip(D, C)]
    return Theory(merged + list(C[len(D):]))


@dataclass
class CertifiedResult:
    output: Theory
    equivalence: tuple  # (certificates that the input entails each output formula, and the converse)
    independence: tuple  # one witness valuation per output formula
    mode: str = ""
    fallback_used: bool = False
    stats: dict = field(default_factory=dict)
    stages: dict = field(default_factory=dict)


def certify(input_theory, output_theory, oracle: Oracle | None = None) -> CertifiedResult:
    """Check that the output is equivalent to the input and independent.

    Raises :class:`CertificationError` on the first failed check.
    """
    oracle = oracle or Oracle()
    source, out = as_formulas(input_theory), as_formulas(output_theory)
    forward, backward = [], []
    for direction, premises, targets, sink in (
        ("input=>output", source, out, forward),
        ("output=>input", out, source, backward),
    ):
        for f in targets:
            cert = oracle.entails(premises, f)
            if not cert.entailed:
                raise CertificationError(
                    f"{direction}: {to_text(f)} is not entailed", direction, f, cert.witness
                )
            sink.append(cert)
    witnesses = []
    for entry in oracle.independent(out):
        if not entry.independent:
            raise CertificationError(
                f"independence: {to_text(entry.formula)} is entailed by the other members",
                "independence",
                entry.formula,
            )
        witnesses.append(entry.witness)
    return CertifiedResult(Theory(out), (tuple(forward), tuple(backward)), tuple(witnesses))


def _trivial(formulas, oracle: Oracle):
    """Drop valid formulas; return an empty or ``false`` theory when that settles it."""
    kept = [f for f in formulas if not oracle.valid(f)]
    if not kept:
        return kept, Theory()
    if not oracle.satisfiable(kept).sat:
        return kept, Theory([FALSE])
    return kept, None


def _finish(source, output: Theory, mode: str, oracle: Oracle, fallback_used=False, stages=None) -> CertifiedResult:
    result = certify(source, output, oracle)
    result.mode = mode
    result.fallback_used = fallback_used
    result.stages = stages or {}
    result.stats = {
        "oracle_calls": oracle.calls,
        "symbols": len(symbols_of(source)),
        "input_formulas": len(source),
        "output_formulas": len(output),
    }
    return result


def tarski_pipeline(theory, collapse: bool = False, oracle: Oracle | None = None) -> CertifiedResult:
    oracle = oracle or Oracle()
    source = as_formulas(theory)
    kept, settled = _trivial(source, oracle)
    if settled is not None:
        return _finish(source, settled, "tarski", oracle)
    chain = tarski_chain(kept, oracle)
    output = tarski_transform(chain, collapse)
    return _finish(source, output, "tarski", oracle, stages={"chain": chain})


def reznikoff_pipeline(
    theory,
    fallback: bool = True,
    paranoid: bool = False,
    oracle: Oracle | None = None,
    starify_cap: int = DEFAULT_STARIFY_CAP,
) -> CertifiedResult:
    oracle = oracle or Oracle()
    source = as_formulas(theory)
    kept, settled = _trivial(source, oracle)
    if settled is not None:
        return _finish(source, settled, "reznikoff", oracle)
    layered_theory = starify(Theory(kept), starify_cap)
    state = build_partition(layered_theory)
    sets = build_transformed(state)
    stages = {"starified": layered_theory, "partition": state, "sets": sets}
    C, D = sets.c_formulas, sets.d_formulas
    if len(D) <= len(C):
        output = reznikoff_merge(C, D, paranoid, oracle)
        return _finish(source, output, "reznikoff", oracle, stages=stages)
    if not fallback:
        raise SizeError(
            f"block members outnumber anchors ({len(D)} > {len(C)}); rerun with fallback enabled"
        )
    chain = tarski_chain(layered_theory, oracle)
    stages["chain"] = chain
    output = tarski_transform(chain)
    return _finish(source, output, "reznikoff", oracle, fallback_used=True, stages=stages)


def independize(theory, mode: str = "reznikoff", *, collapse: bool = False, fallback: bool = True,
                paranoid: bool = False, oracle: Oracle | None = None,
                starify_cap: int = DEFAULT_STARIFY_CAP) -> CertifiedResult:
    if mode == "tarski":
        return tarski_pipeline(theory, collapse, oracle)
    if mode == "reznikoff":
        return reznikoff_pipeline(theory, fallback, paranoid, oracle, starify_cap)
    raise ValueError(f"unknown mode {mode!r}")
