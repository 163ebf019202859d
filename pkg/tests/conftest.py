"""Shared test oracles and strategies.

The brute-force helpers here walk every valuation with ``itertools.product``
and call :func:`evaluate`; they share no code with the packed truth tables or
the DPLL backend they are used to check.
"""

import itertools

import pytest
from hypothesis import strategies as st

from independize import And, Const, Iff, Implies, Not, Or, Var, evaluate, symbols
from independize.formula import symbols_of


def valuations(names):
    names = sorted(names)
    for values in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, values))


def brute_models(formulas, names=None):
    names = symbols_of(formulas) if names is None else names
    return [v for v in valuations(names) if all(evaluate(f, v) for f in formulas)]


def brute_sat(formulas):
    return bool(brute_models(formulas))


def brute_entails(premises, conclusion):
    names = symbols_of(list(premises) + [conclusion])
    return all(evaluate(conclusion, v) for v in valuations(names) if all(evaluate(p, v) for p in premises))


def brute_equiv(a, b):
    names = symbols(a) | symbols(b)
    return all(evaluate(a, v) == evaluate(b, v) for v in valuations(names))


def brute_equiv_theories(a, b):
    return all(brute_entails(list(a), f) for f in b) and all(brute_entails(list(b), f) for f in a)


def brute_independent(theory):
    fs = list(theory)
    return all(not brute_entails(fs[:i] + fs[i + 1:], f) for i, f in enumerate(fs))


NAMES = ("p", "q", "r", "s", "t", "u")


def formulas(names=NAMES[:4], max_leaves=12):
    leaf = st.one_of(st.sampled_from([Var(n) for n in names]), st.sampled_from([Const(True), Const(False)]))

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Implies, children, children),
            st.builds(Iff, children, children),
        )

    return st.recursive(leaf, extend, max_leaves=max_leaves)


@pytest.fixture
def P():
    from independize import parse

    return parse
