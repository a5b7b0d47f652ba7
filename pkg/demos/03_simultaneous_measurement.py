"""
Joint probabilities for events that do not commute
==================================================

An s-map p(a, b) plays the role of "both a and b" even when a ^ b
carries no usable information.  It is normalized, vanishes on
orthogonal pairs, and is additive in each argument; nothing forces
p(a, b) = p(b, a).
"""

from qlogic.modelfile import parse_model_text, realize_model
from qlogic.rational import fmt
from qlogic.repro import fixture_text
from qlogic.smaps import conditional_from_smap, smap_from_conditional


def show_table(p, names):
    width = max(len(n) for n in names) + 1
    print(" " * width + "  ".join(f"{b:>5}" for b in names))
    for a in names:
        print(f"{a:<{width}}" +
              "  ".join(f"{fmt(p(a, b)):>5}" for b in names))


model = realize_model(parse_model_text(fixture_text("2.1")))
f = model.conds["f"]

# weight each conditional column by the probability of its condition:
# p(a, b) = f(a | b) f(b | 1)
p = smap_from_conditional(f)
atoms = model.logic.atoms()
print("s-map derived from the conditional state, atom block:")
show_table(p, atoms)

# the diagonal is an ordinary state; rows against it stay bounded
nu = p.diagonal_state()
print()
print("diagonal state:",
      "  ".join(f"nu({a}) = {fmt(nu(a))}" for a in atoms))

# orthogonal pairs vanish, comparable pairs collapse to the diagonal
assert p("a", "a'") == 0
assert p("a", "1") == nu("a")

# the two orders genuinely differ on noncompatible pairs
print()
print(f"p(a, b) = {fmt(p('a', 'b'))}   but   p(b, a) = {fmt(p('b', 'a'))}")

# conditioning by the diagonal recovers the conditional state exactly
back = conditional_from_smap(p)
assert back.values == f.values
print("dividing by the diagonal recovers every f(b | a) exactly")

# a symmetric table does not certify compatibility: the corrected
# variant of the second bundled model is symmetric on a lattice where
# a and b still have no common refinement
corrected = realize_model(parse_model_text(fixture_text("2.2-corrected")))
q = corrected.smaps["p"]
symmetric = all(q(u, v) == q(v, u) for u in atoms for v in atoms)
print()
print("corrected second model, atom block:")
show_table(q, atoms)
print("symmetric:", symmetric,
      " compatible:", corrected.logic.is_compatible("a", "b"))
