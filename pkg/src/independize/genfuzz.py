"""Seeded random theories, random entailed pairs, and a greedy shrinker."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .boolfunc import canonicalize, forget
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
    Theory,
    Var,
    as_formulas,
    symbols,
)
from .oracle import Oracle

CONNECTIVES = ("not", "and", "or", "implies", "iff")
_BINARY = {"and": And, "or": Or, "implies": Implies, "iff": Iff}
_NAMES = ("p", "q", "r", "s", "t", "u", "v", "w")


def symbol_pool(count: int) -> tuple[str, ...]:
    if count <= len(_NAMES):
        return _NAMES[:count]
    return _NAMES + tuple(f"x{i}" for i in range(len(_NAMES), count))


@dataclass
class GenConfig:
    seed: int = 0
    max_symbols: int = 4
    max_formulas: int = 6
    max_depth: int = 3
    connective_weights: dict = field(default_factory=lambda: dict.fromkeys(CONNECTIVES, 1.0))
    constant_rate: float = 0.05  # chance that a leaf is true/false when symbols exist


def gen_formula(rng: random.Random, pool, depth: int, cfg: GenConfig) -> Formula:
    if depth <= 0 or rng.random() < 0.3:
        if not pool or rng.random() < cfg.constant_rate:
            return TRUE if rng.random() < 0.5 else FALSE
        return Var(rng.choice(pool))
    names = list(cfg.connective_weights)
    kind = rng.choices(names, weights=[cfg.connective_weights[k] for k in names])[0]
    if kind == "not":
        return Not(gen_formula(rng, pool, depth - 1, cfg))
    left = gen_formula(rng, pool, depth - 1, cfg)
    return _BINARY[kind](left, gen_formula(rng, pool, depth - 1, cfg))


def gen_theory(cfg: GenConfig) -> Theory:
    rng = random.Random(cfg.seed)
    pool = symbol_pool(max(cfg.max_symbols, 0))
    count = rng.randint(0, cfg.max_formulas)
    return Theory([gen_formula(rng, pool, cfg.max_depth, cfg) for _ in range(count)])


def gen_corpus(cfg: GenConfig, count: int) -> list[Theory]:
    """``count`` theories from consecutive seeds starting at ``cfg.seed``."""
    out = []
    for k in range(count):
        c = GenConfig(cfg.seed + k, cfg.max_symbols, cfg.max_formulas, cfg.max_depth,
                      dict(cfg.connective_weights), cfg.constant_rate)
        out.append(gen_theory(c))
    return out


def gen_entailed_pair(cfg: GenConfig, oracle: Oracle | None = None) -> tuple[Formula, Formula]:
    """A pair ``(left, right)`` with ``left`` entailing ``right``.

    ``left`` is a conjunction of two random formulas; ``right`` is a projection
    of ``left`` widened by a random disjunct. Draws with an unsatisfiable
    ``left`` are redrawn up to a bound, since they only give trivial pairs.
    """
    oracle = oracle or Oracle()
    rng = random.Random(cfg.seed)
    pool = symbol_pool(max(cfg.max_symbols, 0))
    depth = max(cfg.max_depth, 1)
    for attempt in range(50):
        left = And(gen_formula(rng, pool, depth, cfg), gen_formula(rng, pool, depth, cfg))
        names = sorted(symbols(left))
        dropped = [x for x in names if rng.random() < 0.5]
        right = Or(canonicalize(forget(left, dropped, "exists")), gen_formula(rng, pool, depth, cfg))
        if not oracle.entails([left], right).entailed:
            continue
        if attempt < 49 and not oracle.satisfiable([left]).sat:
            continue
        return left, right
    raise RuntimeError("could not draw an entailed pair")


def _simplifications(f: Formula):
    """Formulas obtained by replacing one node with one of its children."""
    if isinstance(f, (Var, Const)):
        return
    if isinstance(f, Not):
        yield f.arg
        for g in _simplifications(f.arg):
            yield Not(g)
        return
    yield f.left
    yield f.right
    cls = type(f)
    for g in _simplifications(f.left):
        yield cls(g, f.right)
    for g in _simplifications(f.right):
        yield cls(f.left, g)


def shrink(failing, predicate: Callable[[Theory], bool]) -> Theory:
    """Greedily reduce a theory while ``predicate`` keeps reporting failure.

    ``predicate(theory)`` must return True when the theory exhibits the
    failure. Candidates that would repeat a formula already in the theory are
    skipped, as a theory is treated as a set.
    """
    current = list(as_formulas(failing))
    if not predicate(Theory(current)):
        raise ValueError("shrink requires a theory on which the predicate fails")
    progress = True
    while progress:
        progress = False
        for i in range(len(current)):
            candidate = current[:i] + current[i + 1:]
            if predicate(Theory(candidate)):
                current = candidate
                progress = True
                break
        if progress:
            continue
        for i, f in enumerate(current):
            for g in _simplifications(f):
                if g in current:
                    continue
                candidate = current[:i] + [g] + current[i + 1:]
                if predicate(Theory(candidate)):
                    current = candidate
                    progress = True
                    break
            if progress:
                break
    return Theory(current)
