"""
Conditioning without a common refinement
========================================

Classical conditioning divides by the measure of the conditioning
event.  On a quantum logic that recipe breaks down as soon as the
events stop being compatible; conditional states replace it.
"""

from fractions import Fraction

from qlogic import (
    classical_conditional,
    conditional_state_from_partition,
    gen_boolean,
    gen_mo,
    validate_state,
)
from qlogic.errors import ValidationError
from qlogic.rational import fmt

# on a Boolean cube the classical recipe works fine
cube = gen_boolean(3)
m = validate_state(cube, {
    "0": 0, "s1": Fraction(1, 10), "s2": Fraction(3, 10), "s3": Fraction(6, 10),
    "s12": Fraction(4, 10), "s13": Fraction(7, 10), "s23": Fraction(9, 10), "1": 1,
})
f = classical_conditional(m)
print("Boolean cube, f(s1 | s12) = m(s1)/m(s12) =", fmt(f("s1", "s12")))

# the same recipe on MO2 fails validation: the division forgets that
# noncompatible events cannot share a refinement
mo2 = gen_mo(2)
m2 = validate_state(mo2, {
    "0": 0, "1": 1,
    "a": Fraction(2, 5), "a'": Fraction(3, 5),
    "b": Fraction(3, 10), "b'": Fraction(7, 10),
})
try:
    classical_conditional(m2)
except ValidationError as exc:
    print("on mo(2) the classical recipe is rejected:", exc)

# instead, mix one state per conditioning event: alpha1 describes the
# world after "a" happened, alpha2 after "a'", weighted 2/5 : 3/5
alpha1 = validate_state(mo2, {"0": 0, "1": 1, "a": 1, "a'": 0,
                              "b": Fraction(1, 5), "b'": Fraction(4, 5)})
alpha2 = validate_state(mo2, {"0": 0, "1": 1, "a": 0, "a'": 1,
                              "b": Fraction(11, 30), "b'": Fraction(19, 30)})
f = conditional_state_from_partition(
    mo2, ("a", "a'"), (alpha1, alpha2), (Fraction(2, 5), Fraction(3, 5)))

print()
print("conditional state built from the partition {a, a'}:")
print("  admissible conditioning events:", " ".join(f.cs.sorted_members()))
for b in ("a", "b", "b'"):
    row = "  ".join(f"f({b} | {a}) = {fmt(f(b, a)):>5}"
                    for a in f.cs.sorted_members())
    print(" ", row)

# each column is itself a state, and f(a | 1) returns the weight
assert f.condition("1")("a") == Fraction(2, 5)

# the bundled worked model carries the same numbers, with every nonzero
# event admissible as a condition; our partition build agrees on the
# events it covers
from qlogic.modelfile import parse_model_text, realize_model
from qlogic.repro import fixture_text

full = realize_model(parse_model_text(fixture_text("2.1"))).conds["f"]
assert all(full(b, a) == f(b, a) for (b, a) in f.values)
print()
print("bundled model extends this table to conditions",
      " ".join(full.cs.sorted_members()))

# independence is defined by comparison, not by products, and it is
# not symmetric: a is independent of b, but b depends on a
print()
print("f(a | b) == f(a | 1):", full("a", "b") == full("a", "1"),
      " -> a is independent of b")
print("f(b | a) == f(b | 1):", full("b", "a") == full("b", "1"),
      " -> b is NOT independent of a")
print("is_independent agrees:",
      full.is_independent("a", "b", "1"), full.is_independent("b", "a", "1"))
