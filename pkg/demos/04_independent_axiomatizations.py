# Both end-to-end constructions on the same theory, with their certificates.
#
# Run with:  python demos/04_independent_axiomatizations.py

from independize import evaluate, independize, parse_theory

theory = parse_theory("""
p
p | q
p & q
q -> r
""")

for mode in ("tarski", "reznikoff"):
    result = independize(theory, mode)
    print(f"--- {mode} (fallback used: {result.fallback_used})")
    out = list(result.output)
    for f, witness in zip(out, result.independence):
        # the witness falsifies this formula and satisfies every other one
        others = all(evaluate(g, witness) for g in out if g is not f)
        print(f"  {f!s:40}  witness {witness}  others hold: {others}")
    print("  stats:", result.stats)

# A theory whose blocks outnumber its anchors goes through the chain route.
result = independize(parse_theory("s | r <-> p | r <-> q | s"))
print("fallback used:", result.fallback_used, "->", len(result.output), "formulas")
