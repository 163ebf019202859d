"""Acceptance criteria. Each test prints one PASS/FAIL line.

Checks are re-run with a search-backend oracle so that certification does not
rest on the truth tables that also drive layering and canonical forms.
"""

import itertools
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from independize import (
    Not,
    Oracle,
    build_partition,
    build_transformed,
    check_interpolant,
    check_star,
    evaluate,
    independize,
    interpolate,
    reznikoff_merge,
    starify,
    tarski_chain,
    tarski_transform,
)
from independize.formula import symbols_of
from independize.genfuzz import GenConfig, gen_entailed_pair, gen_formula, gen_theory, symbol_pool
from independize.errors import HypothesisViolationError
from independize.pipelines import check_merge_hypothesis

from test_formula import _all_functions

CORPUS = Path(__file__).parent / "golden" / "corpus"


@pytest.fixture
def verdict(capsys):
    def emit(name, failures, detail=""):
        with capsys.disabled():
            status = "PASS" if not failures else "FAIL"
            print(f"\n[{status}] {name}: {len(failures)} failures {detail}".rstrip())
        assert not failures, failures[:5]

    return emit


def checker() -> Oracle:
    return Oracle(backend="search")


def _equivalent_and_independent(source, output, oracle):
    if not oracle.equivalent_theories(source, output).equivalent:
        return False
    return all(e.independent for e in oracle.independent(output))


def test_end_to_end_both_modes(verdict):
    start = time.perf_counter()
    check = checker()
    failures = []
    nontrivial = fallbacks = 0
    for seed in range(500):
        t = gen_theory(GenConfig(seed=seed, max_symbols=6, max_formulas=10))
        for mode in ("tarski", "reznikoff"):
            result = independize(t, mode)
            out = result.output
            fallbacks += result.fallback_used
            nontrivial += mode == "tarski" and any(symbols_of([f]) for f in out)
            if not _equivalent_and_independent(t, out, check):
                failures.append((seed, mode))
    elapsed = time.perf_counter() - start
    if elapsed >= 300:
        failures.append(f"runtime {elapsed:.1f}s")
    detail = f"({nontrivial} with non-constant output, {fallbacks} fallbacks, {elapsed:.1f}s of 300s)"
    verdict("end to end, 500 theories x 2 modes", failures, detail)


def _reference_chain(formulas, oracle):
    selected = []
    while True:
        nxt = next((f for f in formulas if not oracle.entails(selected, f).entailed), None)
        if nxt is None:
            return selected
        selected.append(nxt)


def test_chain_selection_and_witnesses(verdict):
    check = checker()
    failures = []
    for seed in range(200):
        t = list(gen_theory(GenConfig(seed=1000 + seed, max_symbols=6, max_formulas=10)))
        chain = tarski_chain(t)
        if list(chain.selected) != _reference_chain(t, check):
            failures.append((seed, "selection"))
            continue
        out = list(tarski_transform(chain, collapse=False))
        names = symbols_of(t)
        for n in range(len(out)):
            # the model of the earlier selections that falsifies the n-th one
            res = check.satisfiable(list(chain.selected[:n]) + [Not(chain.selected[n])])
            if not res.sat:
                failures.append((seed, n, "no witness"))
                continue
            w = {x: res.model.get(x, False) for x in names}
            if [evaluate(f, w) for f in out] != [m != n for m in range(len(out))]:
                failures.append((seed, n, "witness"))
    verdict("chain selection and witnesses, 200 theories", failures)


def test_merge(verdict):
    rng = random.Random(2024)
    cfg = GenConfig()
    pool = symbol_pool(5)
    check = checker()
    failures, accepted, drawn = [], 0, 0
    while accepted < 100:
        drawn += 1
        C = [gen_formula(rng, pool, 3, cfg) for _ in range(rng.randint(1, 5))]
        D = [gen_formula(rng, pool, 3, cfg) for _ in range(rng.randint(0, len(C)))]
        if set(C) & set(D):
            continue
        try:
            check_merge_hypothesis(C, D)
        except HypothesisViolationError:
            continue
        accepted += 1
        out = reznikoff_merge(C, D)
        if not _equivalent_and_independent(C + D, out, check):
            failures.append((C, D))
    verdict("merge, 100 pairs meeting its precondition", failures, f"({drawn} drawn)")


def _satisfiable_corpus():
    enum = Oracle(backend="enum")
    for seed in range(200):
        t = gen_theory(GenConfig(seed=seed, max_symbols=4, max_formulas=6))
        if enum.satisfiable(t).sat:
            yield seed, t


def test_starify_star_property(verdict):
    check = checker()
    failures = []
    count = 0
    for seed, t in _satisfiable_corpus():
        count += 1
        s = starify(t)
        if check_star(s) is not None or not check.equivalent_theories(t, s).equivalent:
            failures.append(seed)
    funcs = _all_functions(["p", "q"])
    exhaustive = 0
    for k in range(4):
        for combo in itertools.combinations(funcs, k):
            exhaustive += 1
            s = starify(list(combo))
            if check_star(s) is not None or not check.equivalent_theories(list(combo), s).equivalent:
                failures.append(combo)
    verdict("starify gives the star property", failures, f"({count} corpus theories, {exhaustive} exhaustive)")


def test_merge_precondition_after_starify(verdict):
    check = checker()
    failures = []
    for seed, t in _satisfiable_corpus():
        s = starify(t)
        if not len(s):
            continue
        sets = build_transformed(build_partition(s))
        C, D = list(sets.c_formulas), list(sets.d_formulas)
        for i, psi in enumerate(C):
            if check.entails(C[:i] + C[i + 1:] + D, psi).entailed:
                failures.append((seed, i))
    verdict("merge precondition on starified corpus", failures)


def test_interpolation(verdict):
    check = checker()
    failures = []
    for seed in range(200):
        left, right = gen_entailed_pair(GenConfig(seed=seed, max_symbols=6, max_depth=3))
        strong = interpolate(left, right, "strongest")
        weak = interpolate(left, right, "weakest")
        if not (check_interpolant(strong, check) and check_interpolant(weak, check)):
            failures.append(seed)
        elif not check.entails([strong.tau], weak.tau).entailed:
            failures.append((seed, "order"))
    verdict("interpolation, 200 entailed pairs", failures)


def test_oracle_cross_check(verdict):
    rng = random.Random(99)
    cfg = GenConfig()
    enum, search = Oracle(backend="enum"), Oracle(backend="search")
    failures = []
    for i in range(1000):
        pool = symbol_pool(rng.randint(0, 6))
        premises = [gen_formula(rng, pool, 3, cfg) for _ in range(rng.randint(0, 4))]
        goal = gen_formula(rng, pool, 3, cfg)
        a, b = enum.entails(premises, goal), search.entails(premises, goal)
        if a.entailed != b.entailed:
            failures.append(i)
    verdict("oracle enum vs search, 1000 queries", failures)


def test_cli_determinism(verdict, tmp_path):
    failures = []
    theories = sorted(CORPUS.glob("*.thy"))
    for mode in ("tarski", "reznikoff"):
        for path in theories:
            blobs = []
            for k in range(2):
                out = tmp_path / f"{mode}-{k}-{path.name}"
                subprocess.run(
                    [sys.executable, "-m", "independize", "independize", "--mode", mode,
                     "--certify", str(path), "-o", str(out)],
                    check=True,
                )
                blobs.append(out.read_bytes() + Path(f"{out}.report.json").read_bytes())
            if blobs[0] != blobs[1]:
                failures.append((mode, path.name))
    verdict("CLI determinism on golden corpus", failures, f"({len(theories)} files x 2 modes)")
