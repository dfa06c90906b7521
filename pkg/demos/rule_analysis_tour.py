"""Tour of the rule catalog: degrees of exactness and sharp constants.

Walks every catalog family, reports the precise degree of exactness, and
prints the sharp sup-norm error constants M_r (exact fractions where the
rule is rational, validated decimals otherwise).
"""

from fractions import Fraction as F

from peanoquad import degree_of_exactness, kernel_l1_norm, make_rule

RULES = [
    ("ostrowski", {"x": F(1, 4)}),
    ("ostrowski", {"x": 0}),
    ("mp3", {"x": F(1, 2)}),
    ("mod3_opt", {"x": F(1, 4)}),
    ("simpson", {}),
    ("dcr", {"lam": F(1, 3), "x": F(1, 5)}),
    ("gs2", {"x": F(1, 2)}),
    ("gauss_legendre2", {}),
    ("radau2", {}),
    ("alomari4", {"lam": F(1, 5), "x": F(2, 3)}),
    ("lobatto4", {}),
    ("liu_park", {"x": F(1, 2)}),
    ("liu_park_gauss", {}),
    ("dragomir_sofo", {"x": F(2, 5)}),
    ("q44", {"lam": F(1, 2), "gamma": 0, "delta": F(-1, 4), "x": F(1, 2)}),
]

for name, params in RULES:
    rule = make_rule(name, **params)
    report = degree_of_exactness(rule)
    label = name if not params else f"{name}({', '.join(f'{k}={v}' for k, v in params.items())})"
    print(f"\n{label}: degree of exactness d = {report.degree}")
    if report.first_nonzero_index is not None:
        k = report.first_nonzero_index
        print(f"  first nonzero remainder: R(e_{k}) = {report.remainders[k]}")
    for r in range(min(report.degree, 5) + 1):
        rep = kernel_l1_norm(rule, r)
        tag = "" if rep.l1_norm.is_rational else f"   (radius {rep.radius:.1e})"
        print(f"  M_{r} = {rep.l1_norm.to_json_str(17)}{tag}")

# the q44 family contains the double-node rules as special cases:
# liu_park(x) is q44(lambda=1/2, gamma=0, delta=-x/2, x)
print("\nconsistency: liu_park(1/2) as a q44 member")
lp = make_rule("liu_park", x=F(1, 2))
q = make_rule("q44", lam=F(1, 2), gamma=0, delta=F(-1, 4), x=F(1, 2))
for r in range(2):
    a = kernel_l1_norm(lp, r).l1_norm
    b = kernel_l1_norm(q, r).l1_norm
    print(f"  M_{r}: liu_park {a}  q44 {b}")
