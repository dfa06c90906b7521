"""Peano kernels as piecewise polynomials, and their L1 norms.

For a rule with degree of exactness at least r, the order-r kernel is

    r! K_r(t) = (1-t)^(r+1)/(r+1) - sum_{x_k>t} A_k (x_k-t)^r
                                  - r * sum_{y_k>t} B_k (y_k-t)^(r-1)

assembled here piece by piece between consecutive breakpoints (the union of
{-1, 1} and all nodes).  Pieces are left-open/right-closed, and node sums are
taken per piece so kernel values at breakpoints come from the left piece.
The L1 norm integrates |K_r| exactly between isolated sign changes, which
yields the sharp sup-norm error constant of the rule.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import OrderExceedsExactness
from .exactness import has_degree_at_least
from .polynomials import Polynomial
from .roots import DEFAULT_ROOT_TOL, Root, RootList, isolate_roots
from .rules import QuadRule
from .scalars import Scalar, as_scalar

#: interior-breakpoint jumps tighter than this count as continuous
_CONTINUITY_WIDTH = Fraction(1, 10**25)

DEFAULT_REPORT_TOL = Fraction(1, 10**14)


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Breakpoints -1 = b_0 < ... < b_m = 1 with piece i valid on (b_i, b_{i+1}]."""

    breakpoints: tuple[Scalar, ...]
    pieces: tuple[Polynomial, ...]

    def piece_index(self, t) -> int:
        t = as_scalar(t)
        for i in range(len(self.pieces)):
            if t <= self.breakpoints[i + 1]:
                return i
        return len(self.pieces) - 1

    def evaluate(self, t) -> Scalar:
        """Value at t, taken from the left piece at breakpoints."""
        return self.pieces[self.piece_index(t)](t)

    __call__ = evaluate

    def integrate(self) -> Scalar:
        total = Scalar(0)
        for i, p in enumerate(self.pieces):
            total = total + p.definite_integral(self.breakpoints[i], self.breakpoints[i + 1])
        return total

    def integrate_against(self, g: Polynomial) -> Scalar:
        """Integral of (self * g) over [-1, 1], exact piecewise."""
        total = Scalar(0)
        for i, p in enumerate(self.pieces):
            total = total + (p * g).definite_integral(
                self.breakpoints[i], self.breakpoints[i + 1]
            )
        return total


@dataclass(frozen=True)
class KernelReport:
    order: int
    kernel: PiecewisePolynomial
    l1_norm: Scalar
    radius: float
    sign_changes: RootList
    continuity_flags: tuple[bool, ...]


def _breakpoints(rule: QuadRule) -> list[Scalar]:
    pts = [Scalar(-1), Scalar(1)]
    pts.extend(x for x, _ in rule.value_nodes)
    pts.extend(y for y, _ in rule.deriv_nodes)
    pts.sort(key=float)
    out = [pts[0]]
    for p in pts[1:]:
        if not (out[-1] == p):
            out.append(p)
    return out


def build_kernel(rule: QuadRule, r: int) -> PiecewisePolynomial:
    """Order-r Peano kernel of the rule; requires exactness degree >= r.

    At r = 0 the derivative-node sum carries a factor r and is omitted
    outright, so for rules with derivative nodes K_0 represents the value
    part of the functional only (the derivative weights would enter as point
    masses at the derivative nodes).  The full remainder identity therefore
    starts at r = 1 for such rules.
    """
    if r < 0:
        raise ValueError("kernel order must be nonnegative")
    if not has_degree_at_least(rule, r):
        raise OrderExceedsExactness(
            f"rule {rule.name} is not exact on degree {r} polynomials; "
            "the order-{r} kernel identity does not hold".format(r=r)
        )
    bps = _breakpoints(rule)
    r_fact = math.factorial(r)
    lead = Polynomial.affine_power(1, -1, r + 1) * Scalar(Fraction(1, r + 1))
    pieces = []
    for i in range(len(bps) - 1):
        right = bps[i + 1]
        p = lead
        for x, a in rule.value_nodes:
            if x.lt_definite(right) is not True:  # node >= right end: active on piece
                p = p - Polynomial.affine_power(x, -1, r) * a
        if r >= 1:
            for y, b in rule.deriv_nodes:
                if y.lt_definite(right) is not True:
                    p = p - Polynomial.affine_power(y, -1, r - 1) * (b * r)
        pieces.append(p * Scalar(Fraction(1, r_fact)))
    return PiecewisePolynomial(tuple(bps), tuple(pieces))


def kernel_l1_norm(
    rule: QuadRule,
    r: int,
    tol=DEFAULT_REPORT_TOL,
    root_tol=DEFAULT_ROOT_TOL,
) -> KernelReport:
    """Sharp constant M_r = integral of |K_r| with sign changes isolated.

    The result is an exact rational whenever the rule and every kernel root
    are rational; otherwise a validated value whose radius is reported (and
    is far below `tol` at the default working precision).
    """
    kernel = build_kernel(rule, r)
    total = Scalar(0)
    roots: list[Root] = []
    for i, piece in enumerate(kernel.pieces):
        lo, hi = kernel.breakpoints[i], kernel.breakpoints[i + 1]
        if piece.is_zero:
            continue
        piece_roots = isolate_roots(piece, lo, hi, root_tol) if piece.degree >= 1 else ()
        cuts = [lo] + [rt.location for rt in piece_roots] + [hi]
        F = piece.antiderivative()
        prev = F(cuts[0])
        for s in cuts[1:]:
            cur = F(s)
            total = total + abs(cur - prev)
            prev = cur
        roots.extend(piece_roots)
    flags = []
    for i in range(1, len(kernel.breakpoints) - 1):
        b = kernel.breakpoints[i]
        jump = kernel.pieces[i - 1](b) - kernel.pieces[i](b)
        flags.append(jump.zero_within(_CONTINUITY_WIDTH))
    return KernelReport(
        order=r,
        kernel=kernel,
        l1_norm=total,
        radius=total.radius(),
        sign_changes=RootList(tuple(roots)),
        continuity_flags=tuple(flags),
    )


def verify_peano_identity(rule: QuadRule, r: int, f: Polynomial) -> tuple[Scalar, Scalar]:
    """Both sides of the remainder identity for a polynomial f.

    Left: direct remainder I(f) - Q(f).  Right: integral of K_r * f^(r+1),
    computed by exact piecewise integration.  The contract is lhs == rhs
    (exactly so on rational data) for r >= 1, and for r = 0 on rules without
    derivative nodes (see build_kernel on the r = 0 convention).
    """
    lhs = f.definite_integral(-1, 1) - rule.apply(f)
    g = f
    for _ in range(r + 1):
        g = g.derivative()
    rhs = build_kernel(rule, r).integrate_against(g)
    return lhs, rhs


# --------------------------------------------------------------------------
# export


def kernel_grid(kernel: PiecewisePolynomial, points: int = 2001):
    """Uniform sampling of the kernel over [-1, 1] (left-piece values)."""
    if points < 2:
        raise ValueError("need at least two grid points")
    for i in range(points):
        t = Scalar(Fraction(-1) + Fraction(2 * i, points - 1))
        yield t, kernel.evaluate(t)


def export_kernel_csv(report: KernelReport, path, points: int = 2001, digits: int = 17) -> None:
    """Columns t, K<r>(t) on a uniform grid."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", f"K{report.order}"])
        for t, v in kernel_grid(report.kernel, points):
            w.writerow([t.to_decimal(digits), v.to_decimal(digits)])


def kernel_report_json_dict(report: KernelReport, digits: int = 17) -> dict:
    k = report.kernel
    return {
        "order": report.order,
        "breakpoints": [b.to_json_str() for b in k.breakpoints],
        "pieces": [[c.to_json_str() for c in p.coeffs] for p in k.pieces],
        "l1_norm": report.l1_norm.to_json_str(),
        "l1_norm_decimal": report.l1_norm.to_decimal(digits),
        "radius": report.radius,
        "sign_changes": [rt.location.to_json_str() for rt in report.sign_changes],
        "continuity_flags": list(report.continuity_flags),
    }


def export_kernel_json(report: KernelReport, path, digits: int = 17) -> None:
    with open(path, "w") as fh:
        json.dump(kernel_report_json_dict(report, digits), fh, indent=2)
        fh.write("\n")
