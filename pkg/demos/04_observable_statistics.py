"""
Means, covariances and correlations of noncompatible observables
================================================================

Discrete observables attach numbers to events.  An s-map then gives a
joint distribution for any two of them, and from there the usual
statistics; the order of the arguments matters.
"""

from qlogic.modelfile import parse_model_text, realize_model
from qlogic.observables import classical_representation, compute_stats
from qlogic.rational import fmt, fmt_float
from qlogic.repro import fixture_text

model = realize_model(parse_model_text(fixture_text("2.1")))
p = model.smaps["p"]
x, y = model.observables["x"], model.observables["y"]

print("observable x:",
      "  ".join(f"{t} -> {x.element(t)}" for t in x.spectrum))
print("observable y:",
      "  ".join(f"{s} -> {y.element(s)}" for s in y.spectrum))
print("compatible:", x.is_compatible_with(y))

stats = compute_stats(p, x, y)

# the joint tables, one per argument order
print()
print("joint distribution, x first:")
for t in x.spectrum:
    print(" ", "  ".join(f"P(x={t}, y={s}) = {fmt(stats.joint_xy(t, s)):>5}"
                         for s in y.spectrum))
print("joint distribution, y first:")
for s in y.spectrum:
    print(" ", "  ".join(f"P(y={s}, x={t}) = {fmt(stats.joint_yx(s, t)):>5}"
                         for t in x.spectrum))

# identical marginals, different mixed moments
print()
print(f"E[x] = {fmt(stats.nu_x)}   E[y] = {fmt(stats.nu_y)}")
print(f"p(x, y) = {fmt(stats.moment_xy)}   p(y, x) = {fmt(stats.moment_yx)}")
print(f"cov(x, y) = {fmt(stats.cov_xy)}   cov(y, x) = {fmt(stats.cov_yx)}")

# the covariance matrix need not be symmetric, and one order can look
# uncorrelated while the other does not
print()
print("covariance matrix rows:")
for row in stats.matrix.entries:
    print("  [", "  ".join(fmt(v) for v in row), "]")
print("symmetric:", stats.matrix.is_symmetric)
print(f"r(x, y) = {fmt_float(stats.r_xy)}   r(y, x) = {fmt_float(stats.r_yx)}")

# each argument order admits a classical two-variable picture with the
# same means and that order's covariance; the two pictures just refuse
# to merge into one
cr = classical_representation(p, x, y)
print()
print("classical spaces: means", fmt(cr.mean_x), "and", fmt(cr.mean_y),
      "in both orders,")
print("covariance", fmt(cr.cov_xy), "on the (x, y) space,",
      fmt(cr.cov_yx), "on the (y, x) space")
