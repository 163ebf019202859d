# Rewriting a theory so that no formula follows from formulas that miss one of
# its symbols, then splitting it into blocks around anchor formulas.
#
# Run with:  python demos/03_layering_and_partition.py

from independize import build_partition, build_transformed, check_star, layered, parse_theory

theory = parse_theory("""
p
p | q
q -> r
(r -> s) & (p | t)
""")

v = check_star(theory)
print("input violates the property:", v.formula, "follows from", [str(f) for f in v.premises])

lt = layered(theory)
for size, members in sorted(lt.layers.items()):
    print(f"layer {size}:", [str(f) for f in members])
starred = lt.flatten()
print("star check after layering:", check_star(starred))

state = build_partition(starred)
for a in state.anchors:
    print(f"anchor {a.index}: {a.formula}   new symbols {sorted(a.new_symbols)}   block {[str(f) for f in state.block(a.index)]}")

sets = build_transformed(state)
print("C:", [str(f) for f in sets.c_formulas])
print("D:", [str(f) for f in sets.d_formulas])
