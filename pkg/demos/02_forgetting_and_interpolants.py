# Forgetting symbols and computing interpolants.
#
# Run with:  python demos/02_forgetting_and_interpolants.py

from independize import check_interpolant, forget, interpolate, parse

f = parse("(p -> q) & (q -> r)")

# Existential forgetting keeps exactly the consequences that avoid q.
print(forget(f, {"q"}, "exists"))
# Universal forgetting is the weakest formula without q that implies f.
print(forget(f, {"q"}, "forall"))

left, right = parse("p & q"), parse("q | r")
strong = interpolate(left, right, "strongest")
weak = interpolate(left, right, "weakest")
print(strong.tau, weak.tau, check_interpolant(strong), check_interpolant(weak))

# A wider pair: the two interpolants differ, and the strongest implies the weakest.
left, right = parse("p & (p -> q) & s"), parse("q | ~s | t")
print("strongest:", interpolate(left, right).tau)
print("weakest:  ", interpolate(left, right, "weakest").tau)
