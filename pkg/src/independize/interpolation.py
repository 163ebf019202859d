"""Craig interpolants for propositional entailments, computed by forgetting."""

from __future__ import annotations

from dataclasses import dataclass

from .boolfunc import forget
from .errors import NotEntailedError
from .formula import Formula, symbols
from .oracle import Oracle


@dataclass(frozen=True)
class Interpolant:
    tau: Formula
    left: Formula
    right: Formula


def interpolate(left: Formula, right: Formula, mode: str = "strongest", oracle: Oracle | None = None) -> Interpolant:
    """Interpolant between ``left`` and ``right``, where ``left`` must entail ``right``.

    ``strongest`` projects ``left`` onto the shared symbols existentially;
    ``weakest`` projects ``right`` universally. Any interpolant lies between the two.
    """
    oracle = oracle or Oracle()
    cert = oracle.entails([left], right)
    if not cert.entailed:
        raise NotEntailedError(f"{left} does not entail {right}", cert.witness)
    if mode == "strongest":
        tau = forget(left, symbols(left) - symbols(right), "exists")
    elif mode == "weakest":
        tau = forget(right, symbols(right) - symbols(left), "forall")
    else:
        raise ValueError(f"mode must be 'strongest' or 'weakest', not {mode!r}")
    return Interpolant(tau, left, right)


def check_interpolant(interpolant: Interpolant, oracle: Oracle | None = None) -> bool:
    oracle = oracle or Oracle()
    i = interpolant
    if not symbols(i.tau) <= symbols(i.left) & symbols(i.right):
        return False
    return oracle.entails([i.left], i.tau).entailed and oracle.entails([i.tau], i.right).entailed
