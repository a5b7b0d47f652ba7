"""
Searching random models for structure
=====================================

Seeded random s-maps make it cheap to hunt for behaviour (or for
counterexamples that never come).  Everything below is deterministic:
same seed, same tables.
"""

from qlogic import (
    distributivity_scan,
    gen_mo,
    oracle_scan,
    random_smap,
    roundtrip_suite,
)
from qlogic.rational import fmt
from qlogic.smaps import conditional_from_smap, smap_from_conditional

logic = gen_mo(3)

# one sample, in full; denominators grow fast, so size the columns
p = random_smap(logic, seed=2024)
atoms = logic.atoms()
cells = {(a, b): fmt(p(a, b)) for a in atoms for b in atoms}
width = max(len(v) for v in cells.values()) + 2
label = max(len(a) for a in atoms) + 1
print("random s-map on mo(3), seed 2024, atom block:")
print(" " * label + "".join(f"{b:>{width}}" for b in atoms))
for a in atoms:
    print(f"{a:<{label}}" + "".join(f"{cells[a, b]:>{width}}" for b in atoms))

# conversion roundtrip is exact, not approximate
f = conditional_from_smap(p)
assert smap_from_conditional(f).values == p.values
print()
print("s-map -> conditional state -> s-map returned the identical table")

# how often is a random table symmetric?  (spoiler: essentially never)
asymmetric = sum(
    1 for seed in range(50)
    if any(q(a, b) != q(b, a) for q in [random_smap(logic, seed)]
           for a in atoms for b in atoms)
)
print(f"asymmetric tables among 50 random samples: {asymmetric}")

# structural self-checks on the lattice itself: the fast compatibility
# test against the brute-force witness search, and distributivity
# within compatible families
assert oracle_scan(logic) is None
assert distributivity_scan(logic) is None
print("compatibility oracle and distributive-law scan found nothing")

# the full battery: conversion roundtrips plus every derived law, on
# many seeded samples at once
report = roundtrip_suite(gen_mo(4), trials=60, seed=5)
print()
print(f"mo(4) suite: {report.passed}/{report.trials} trials passed,"
      f" first failure: {report.first_failure}")
