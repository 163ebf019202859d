# Parsing, printing and deciding entailment.
#
# Run with:  python demos/01_formulas_and_oracle.py

from independize import Oracle, canonicalize, essential_symbols, parse, symbols

# Formulas use ~ & | -> <-> with that precedence, tightest first.
f = parse("p & q -> r")
print(repr(f))
print(f)                       # printing puts back only the parentheses it needs

# Syntactic versus semantic support.
g = parse("(p -> p) & q")
print(sorted(symbols(g)), sorted(essential_symbols(g)), canonicalize(g))

# Two backends decide satisfiability; both hand back concrete models.
premises = [parse("p -> q"), parse("p"), parse("~r")]
for backend in ("enum", "search"):
    print(backend, Oracle(backend=backend).satisfiable(premises).model)

# Entailment returns either "entailed" or a countermodel you can check by hand.
oracle = Oracle()
print(oracle.entails([parse("p"), parse("p -> q")], parse("q")))
print(oracle.entails([parse("p")], parse("p & q")))

# Independence, position by position.
for entry in oracle.independent([parse("p"), parse("p & q")]):
    print(entry.formula, "independent" if entry.independent else "follows from the rest", entry.witness)
