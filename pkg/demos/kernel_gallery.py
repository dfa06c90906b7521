"""Export the kernel data behind the classical error-constant pictures.

Writes one CSV per (rule, order) with columns t, K_r(t) on a 2001-point grid
plus a JSON sidecar holding breakpoints and exact piece coefficients.  Plot
the CSVs with any tool to see the familiar kernel shapes; the sidecar is
enough to reconstruct each kernel exactly.
"""

import os
from fractions import Fraction as F

from peanoquad import export_kernel_csv, export_kernel_json, kernel_l1_norm, make_rule

OUT = os.environ.get("PEANOQUAD_OUTDIR", "kernel_data")
os.makedirs(OUT, exist_ok=True)

GALLERY = [
    ("ostrowski", {"x": F(1, 4)}, [0]),          # one-point rule, sawtooth kernel
    ("ostrowski", {"x": 0}, [1]),                # midpoint rule, parabolic kernel
    ("mp3", {"x": F(1, 2)}, [0, 1]),
    ("mod3_opt", {"x": F(1, 8)}, [0, 1, 2]),
    ("simpson", {}, [0, 1, 2, 3]),
    ("gs2", {"x": F(1, 2)}, [0, 1]),
    ("gauss_legendre2", {}, [2, 3]),
    ("radau2", {}, [0, 1, 2]),
    ("alomari4", {"lam": F(1, 5), "x": F(2, 3)}, [0, 1]),
    ("lobatto4", {}, [2, 3, 4, 5]),
    ("liu_park_gauss", {}, [2, 3]),
]

for name, params, orders in GALLERY:
    rule = make_rule(name, **params)
    for r in orders:
        rep = kernel_l1_norm(rule, r)
        stem = os.path.join(OUT, f"{name}_K{r}")
        export_kernel_csv(rep, stem + ".csv")
        export_kernel_json(rep, stem + ".json")
        print(f"{name} K_{r}: M_{r} = {rep.l1_norm.to_decimal(12)}  -> {stem}.csv")

print(f"\nwrote kernel grids and sidecars under {OUT}/")
