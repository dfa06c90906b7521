"""Composite integration with a-priori error certificates.

The certificate n * M_r * ((b-a)/(2n))^(r+2) * sup|f^(r+1)| is computed from
the rule's sharp kernel constant; whenever the asserted derivative bound is
valid, the true error provably stays below it.
"""

import math
from fractions import Fraction as F

from peanoquad import (
    BoxDomain,
    composite_integrate,
    composite_partition_bound,
    make_rule,
    multidim_ostrowski_bound,
    panels_for_tolerance,
)

# --- certify exp on [0, 1] with Simpson panels ------------------------------
rule = make_rule("simpson")
reference = math.e - 1
print("integral of exp over [0, 1] =", reference)
print(f"{'n':>3} {'value':>20} {'certificate':>14} {'true error':>14}")
for n in (1, 2, 4, 8, 16):
    res = composite_integrate(rule, math.exp, 0, 1, n, 3, math.e)
    err = abs(float(res.value) - reference)
    print(f"{n:>3} {float(res.value):>20.15f} {float(res.certificate):>14.3e} {err:>14.3e}")

# --- how many panels for a target tolerance? --------------------------------
for eps in (F(1, 10**6), F(1, 10**9), F(1, 10**12)):
    n = panels_for_tolerance(rule, 3, math.e, 0, 1, eps)
    print(f"tolerance {float(eps):.0e}: {n} Simpson panel(s) suffice")

# --- a rule with derivative nodes needs f' ----------------------------------
lp = make_rule("liu_park_gauss")
res = composite_integrate(lp, math.sin, 0, 2, 4, 3, 1.0, fprime=math.cos)
print(f"\ndouble-node rule on sin over [0, 2], 4 panels:"
      f" value {float(res.value):.12f}, certificate {float(res.certificate):.2e}"
      f" (true error {abs(float(res.value) - (1 - math.cos(2))):.2e})")

# --- box-domain bound: average of f vs a point value ------------------------
box = BoxDomain.of([(0, 1), (0, 2)], [3, F(1, 2)])
val = multidim_ostrowski_bound(box, [F(1, 2), 1])
print(f"\n|f(center) - box average| <= {val} for |df/dx1| <= 3, |df/dx2| <= 1/2")

# --- tagged partitions on [0, 1]: midpoints are optimal ---------------------
parts = [F(0), F(1, 4), F(1, 2), F(3, 4), F(1)]
mids = [F(1, 8), F(3, 8), F(5, 8), F(7, 8)]
lefts = [F(0), F(1, 4), F(1, 2), F(3, 4)]
print("rectangle-sum bound with midpoint tags: ",
      composite_partition_bound(parts, mids, 1))
print("rectangle-sum bound with left-end tags: ",
      composite_partition_bound(parts, lefts, 1))
