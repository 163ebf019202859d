import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_entails, brute_models, brute_sat, formulas
from independize import (
    Oracle,
    ResourceLimitError,
    Theory,
    entails,
    equivalent_theories,
    evaluate,
    independent,
    parse,
    satisfiable,
    valid,
)
from independize.genfuzz import gen_formula, symbol_pool, GenConfig

BACKENDS = ["enum", "search"]


def P(*texts):
    return [parse(t) for t in texts]


@pytest.mark.parametrize("backend", BACKENDS)
def test_satisfiable_examples(backend):
    o = Oracle(backend=backend)
    assert not o.satisfiable(P("p", "~p")).sat
    empty = o.satisfiable([])
    assert empty.sat and empty.model == {}
    res = o.satisfiable(P("p -> q", "p", "~r"))
    assert res.model == {"p": True, "q": True, "r": False}


def test_enum_returns_lexicographically_first_model():
    fs = P("p | q", "q | r")
    res = Oracle(backend="enum").satisfiable(fs)
    assert res.model == brute_models(fs)[0] == {"p": False, "q": True, "r": False}


def test_search_branches_false_first():
    res = Oracle(backend="search").satisfiable(P("p | q | r"))
    assert res.model == {"p": False, "q": False, "r": True}


@pytest.mark.parametrize("backend", BACKENDS)
def test_entails_examples(backend):
    o = Oracle(backend=backend)
    assert o.entails(P("p", "p -> q"), parse("q")).entailed
    cert = o.entails(P("p"), parse("p & q"))
    assert cert.kind == "countermodel" and cert.witness == {"p": True, "q": False}
    assert o.entails([], parse("p | ~p")).entailed


def test_valid_examples():
    assert valid(parse("p | ~p"))
    assert not valid(parse("p"))
    assert valid(parse("((p -> q) & p) -> q"))


def test_equivalent_theories_examples():
    assert equivalent_theories(P("p & q"), P("p", "q"))
    assert equivalent_theories(P("p"), P("p", "p | q"))
    res = equivalent_theories(P("p"), P("q"))
    assert not res.equivalent
    assert res.countermodel == {"p": True, "q": False}


def test_independent_examples():
    rep = independent(P("p", "q"))
    assert [e.independent for e in rep] == [True, True]
    assert rep[0].witness == {"p": False, "q": True}
    assert rep[1].witness == {"p": True, "q": False}
    rep = independent(P("p", "p & q"))
    assert [e.independent for e in rep] == [False, True]
    assert independent([]) == []


def test_independent_keeps_other_duplicate():
    rep = independent(P("p", "p"))
    assert [e.independent for e in rep] == [False, False]


def test_resource_limit():
    o = Oracle(max_vars=3)
    with pytest.raises(ResourceLimitError):
        o.satisfiable(P("a & b & c & d"))
    assert o.satisfiable(P("a & b & c")).sat


def test_call_counter():
    o = Oracle()
    o.entails(P("p"), parse("q"))
    o.valid(parse("p"))
    assert o.calls == 2


def test_search_backend_above_threshold():
    names = [f"x{i}" for i in range(30)]
    chain = [parse(f"{a} -> {b}") for a, b in zip(names, names[1:])]
    o = Oracle(max_vars=40, enum_threshold=20)
    assert o.entails(chain + [parse("x0")], parse("x29")).entailed
    cert = o.entails(chain, parse("x0"))
    assert not cert.entailed and cert.witness["x0"] is False


@given(st.lists(formulas(), max_size=4), formulas())
def test_entails_agrees_with_brute_force(premises, conclusion):
    expected = brute_entails(premises, conclusion)
    for backend in BACKENDS:
        cert = Oracle(backend=backend).entails(premises, conclusion)
        assert cert.entailed == expected
        if not cert.entailed:
            assert all(evaluate(p, cert.witness) for p in premises)
            assert not evaluate(conclusion, cert.witness)


def test_monotonicity_random():
    rng = random.Random(7)
    cfg = GenConfig(max_depth=3)
    pool = symbol_pool(5)
    o = Oracle()
    for _ in range(200):
        gamma = [gen_formula(rng, pool, 3, cfg) for _ in range(rng.randint(0, 3))]
        delta = [gen_formula(rng, pool, 3, cfg) for _ in range(rng.randint(0, 3))]
        phi = gen_formula(rng, pool, 3, cfg)
        if o.entails(gamma, phi).entailed:
            assert o.entails(gamma + delta, phi).entailed


def test_theory_argument_accepted():
    t = Theory(P("p", "q"), universe={"p", "q", "r"})
    assert satisfiable(t).sat
    assert entails(t, parse("p & q")).entailed
    assert brute_sat(list(t))
