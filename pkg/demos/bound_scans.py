"""Scan bound functions x -> M_r(x) over rule families and find their minima.

Reproduces the structure of the classical bound-function plots: piecewise
smooth curves whose branch points mark changes in the kernel sign pattern,
plus the well-known optimal free-node placements.
"""

import os
from fractions import Fraction as F

from peanoquad import bound_scan, export_scan_csv, export_scan_json, family, minimize_bound

OUT = os.environ.get("PEANOQUAD_OUTDIR", "scan_data")
os.makedirs(OUT, exist_ok=True)

# the optimal three-point family: branch point at x = 1/3 in every order
fam = family("mod3_opt")
for r in (1, 2):
    scan = bound_scan(fam, r, grid_size=81, lo=F(1, 100), hi=F(4, 5))
    export_scan_csv(scan, os.path.join(OUT, f"mod3_opt_M{r}.csv"))
    print(f"mod3_opt M_{r}: branch points at "
          + ", ".join(b.to_decimal(10) for b in scan.branch_points))

# symmetric two-point rule: minimum of M_1 at 4 - 2*sqrt(3)
scan = bound_scan(family("gs2"), 1, grid_size=81)
export_scan_csv(scan, os.path.join(OUT, "gs2_M1.csv"))
export_scan_json(scan, os.path.join(OUT, "gs2_M1.json"))
x, v = scan.minimizer
print(f"gs2 M_1 minimizer: x* = {x.to_decimal(12)} (4 - 2 sqrt 3 = 0.535898384862)")
print(f"                   M* = {v.to_decimal(12)} (7 - 4 sqrt 3 = 0.071796769724)")

# fixed-endpoint family: asymmetric bounds, both optimal nodes irrational
for r in (0, 1):
    res = minimize_bound(family("franjic"), r)
    print(f"franjic M_{r} minimum: x* = {res.x.to_decimal(12)}, M* = {res.value.to_decimal(12)}")

# four-point symmetric family at several fixed endpoint weights: the
# M_1 curves change branch structure with lambda
for lam in (F(1, 5), F(1, 3), F(1, 2), F(3, 5)):
    scan = bound_scan(family("alomari4", lam=lam), 1, grid_size=61, lo=F(1, 100), hi=F(19, 20))
    export_scan_csv(scan, os.path.join(OUT, f"alomari4_lam_{lam.numerator}_{lam.denominator}_M1.csv"))
    kinks = ", ".join(b.to_decimal(8) for b in scan.branch_points) or "none"
    x, v = scan.minimizer
    print(f"alomari4(lambda={lam}) M_1: kinks [{kinks}], min {v.to_decimal(8)} at {x.to_decimal(8)}")

# double-node family: both published minima are rational points
for r in (0, 1):
    res = minimize_bound(family("liu_park"), r)
    print(f"liu_park M_{r} minimum: x* = {res.x.to_decimal(8)}, M* = {res.value.to_json_str()}")

print(f"\nwrote scan CSVs under {OUT}/")
