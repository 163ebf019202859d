import itertools

import pytest

from conftest import brute_entails, brute_equiv_theories, brute_independent
from independize import (
    FALSE,
    ResourceLimitError,
    Theory,
    check_star,
    essential_symbols,
    layered,
    parse,
    starify,
    symbols,
)
from independize.genfuzz import GenConfig, gen_theory


def P(*texts):
    return [parse(t) for t in texts]


@pytest.mark.parametrize(
    "src, expected",
    [
        (["p", "p | q"], ["p"]),
        (["p & q"], ["p", "q"]),
        ([], []),
        (["p", "q & ~q"], ["false"]),
        (["p <-> q", "q <-> r"], ["p <-> q", "p <-> r"]),
    ],
)
def test_starify_examples(src, expected):
    assert list(starify(P(*src))) == P(*expected)


def test_unsatisfiable_maps_to_false():
    assert list(starify(P("p & ~p"))) == [FALSE]


def test_cap():
    names = [f"x{i}" for i in range(6)]
    t = P(" & ".join(names))
    with pytest.raises(ResourceLimitError):
        starify(t, cap=5)


def brute_star_violation(formulas):
    """Literal reading of the star condition: every premise subset, in order."""
    for i, psi in enumerate(formulas):
        others = [j for j in range(len(formulas)) if j != i]
        for mask in range(1 << len(others)):
            chosen = [others[b] for b in range(len(others)) if mask >> b & 1]
            covered = set().union(*(symbols(formulas[j]) for j in chosen))
            if not symbols(psi) <= covered and brute_entails([formulas[j] for j in chosen], psi):
                return i, tuple(chosen)
    return None


@pytest.mark.parametrize(
    "src, expected",
    [(["p", "q"], None), (["p", "p | q"], (1, (0,))), (["p", "p -> q"], None), (["p", "q", "q | r"], (2, (1,)))],
)
def test_check_star_examples(src, expected):
    v = check_star(P(*src))
    got = None if v is None else (v.index, v.premise_indices)
    assert got == expected
    if v is not None:
        assert v.certificate.entailed


def test_check_star_matches_literal_definition():
    for seed in range(150):
        t = list(gen_theory(GenConfig(seed=seed, max_symbols=4, max_formulas=6)))
        v = check_star(t)
        got = None if v is None else (v.index, v.premise_indices)
        assert got == brute_star_violation(t), seed


def _corpus():
    for seed in range(120):
        t = gen_theory(GenConfig(seed=seed, max_symbols=5, max_formulas=8))
        yield seed, t


def test_starify_equivalent_and_starred():
    for seed, t in _corpus():
        s = list(starify(t))
        assert brute_equiv_theories(list(t), s), seed
        assert check_star(s) is None, seed


def test_layer_invariants():
    for seed, t in _corpus():
        lt = layered(t)
        kept = []
        for n in sorted(lt.layers):
            for f in lt.layers[n]:
                if f == FALSE:
                    continue
                assert symbols(f) == essential_symbols(f) and len(symbols(f)) == n
                assert brute_entails(list(t), f)
                lower = [g for m in lt.layers if m < n for g in lt.layers[m]]
                assert not brute_entails(lower, f)
                assert not brute_entails(kept, f)
                kept.append(f)


def test_output_can_be_redundant():
    # a wider consequence kept later may imply narrower ones kept earlier
    t = P("(p | q) & (q | ~s) & (p & (q <-> s) | ~p & q)")
    s = list(starify(t))
    assert s == P("p | q", "q | ~s", "p & (q <-> s) | ~p & q")
    assert not brute_independent(s)


def test_determinism_on_model_set():
    a = P("p & (q | r)")
    b = P("(p & q) | (p & r)", "p | ~p", "p")
    assert starify(Theory(a, {"p", "q", "r"})).to_text() == starify(Theory(b, {"p", "q", "r"})).to_text()


def test_exhaustive_two_symbol_theories():
    from test_formula import _all_functions

    funcs = _all_functions(["p", "q"])
    for k in range(1, 4):
        for combo in itertools.combinations_with_replacement(funcs, k):
            t = list(combo)
            s = list(starify(t))
            assert brute_equiv_theories(t, s)
            assert check_star(s) is None
