"""Sup-norm error bounds, bound-function scans over rule families, and the
box-domain mean-value bound.

The bound function x -> M_r(x) of a one-parameter family is always computed
from kernels (never from hard-coded formulas), so it works equally for
families without known closed forms.  Branch points are the parameters where
the kernel's interior root pattern changes; the scan tracks that pattern on
the grid and bisects each change, which localizes even branch points where
the bound itself is numerically indistinguishable from smooth.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    BadInterval,
    InvalidPartition,
    OrderExceedsExactness,
    ParamOutOfDomain,
    PointOutsideBox,
)
from .peano import kernel_l1_norm
from .rules import QuadRule, RuleFamily
from .scalars import Scalar, as_scalar

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def error_bound(rule: QuadRule, r: int, deriv_sup, a=-1, b=1) -> Scalar:
    """A-priori bound M_r * h^(r+2) * deriv_sup for the rule mapped to [a, b].

    `deriv_sup` is the caller-asserted sup norm of f^(r+1) on [a, b]; the
    bound is valid whenever that assertion is.
    """
    a, b = as_scalar(a), as_scalar(b)
    if not a.lt_definite(b):
        raise BadInterval(f"need a < b, got [{a}, {b}]")
    deriv_sup = as_scalar(deriv_sup)
    m = kernel_l1_norm(rule, r).l1_norm
    h = (b - a) / 2
    return m * h ** (r + 2) * deriv_sup


@dataclass(frozen=True)
class BoundScan:
    """Sampled bound function with its refined minimizer.

    `branch_points` are parameters where the kernel's interior root pattern
    or piece structure changes.  That includes the closed-form branch
    switches of the bound function, and also degenerate parameters where
    nodes collide (typically at domain endpoints); the bound itself may stay
    smooth through the latter.
    """

    family: RuleFamily
    order: int
    grid: tuple[Scalar, ...]
    values: tuple[Scalar, ...]
    minimizer: tuple[Scalar, Scalar]  # (x*, M_r(x*))
    branch_points: tuple[Scalar, ...]
    multimodal_suspected: bool


class MinimizeResult(NamedTuple):
    x: Scalar
    value: Scalar
    multimodal_suspected: bool


def _bound_fn(family: RuleFamily, r: int):
    """Memoized x -> (M_r(x), kernel root signature).

    The signature is the per-piece count of interior kernel roots; it changes
    exactly where the bound function switches branch.
    """
    cache: dict[Fraction, tuple[Scalar, tuple[int, ...]]] = {}

    def compute(x: Fraction) -> tuple[Scalar, tuple[int, ...]]:
        got = cache.get(x)
        if got is None:
            rep = kernel_l1_norm(family.build(Scalar(x)), r)
            counts = [0] * len(rep.kernel.pieces)
            for root in rep.sign_changes:
                counts[rep.kernel.piece_index(root.location)] += 1
            got = (rep.l1_norm, tuple(counts))
            cache[x] = got
        return got

    def fn(x: Fraction) -> Scalar:
        return compute(x)[0]

    def sig(x: Fraction) -> tuple[int, ...]:
        return compute(x)[1]

    return fn, sig


def _golden_min(fn, a: Fraction, b: Fraction, xtol: float) -> tuple[Fraction, Scalar]:
    """Golden-section minimum on [a, b]; comparisons are exact Scalar compares."""
    fa, fb = fn(a), fn(b)
    af, bf = float(a), float(b)
    c = Fraction(bf - _INVPHI * (bf - af))
    d = Fraction(af + _INVPHI * (bf - af))
    if not (a < c < d < b):
        c = a + (b - a) / 3
        d = b - (b - a) / 3
    fc, fd = fn(c), fn(d)
    while float(b - a) > xtol:
        if fc < fd:
            b, fb = d, fd
            d, fd = c, fc
            c = Fraction(float(b) - _INVPHI * float(b - a))
            if not a < c < d:
                c = a + (d - a) / 2
            fc = fn(c)
        else:
            a, fa = c, fc
            c, fc = d, fd
            d = Fraction(float(a) + _INVPHI * float(b - a))
            if not c < d < b:
                d = c + (b - c) / 2
            fd = fn(d)
    best_x, best_v = c, fc
    for x, v in ((d, fd), (a, fa), (b, fb)):
        if v < best_v:
            best_x, best_v = x, v
    return best_x, best_v


def _locate_signature_change(sig, a: Fraction, b: Fraction, tol: Fraction) -> Fraction:
    """Bisect [a, b] down to where the kernel root signature first changes."""
    sig_a = sig(a)
    while b - a > tol:
        m = (a + b) / 2
        if sig(m) == sig_a:
            a = m
        else:
            b = m
    return (a + b) / 2


def bound_scan(
    family: RuleFamily,
    r: int,
    grid_size: int = 101,
    lo=None,
    hi=None,
    refine_tol: float = 1e-12,
) -> BoundScan:
    """Evaluate x -> M_r(x) on a grid, locate branch points, refine the minimum."""
    if grid_size < 3:
        raise ValueError("grid_size must be at least 3")
    if r < 0 or r > family.generic_degree:
        raise OrderExceedsExactness(
            f"order {r} exceeds the generic exactness degree "
            f"{family.generic_degree} of family {family.label()}"
        )
    dom = family.domain
    glo = as_scalar(lo).mid_fraction() if lo is not None else None
    ghi = as_scalar(hi).mid_fraction() if hi is not None else None
    if glo is not None or ghi is not None:
        from .rules import Domain

        nlo = dom.lo if glo is None else max(dom.lo, glo)
        nhi = dom.hi if ghi is None else min(dom.hi, ghi)
        if not nlo < nhi:
            raise ParamOutOfDomain("scan window is empty inside the family domain")
        dom = Domain(
            nlo,
            nhi,
            dom.lo_open and nlo == dom.lo,
            dom.hi_open and nhi == dom.hi,
        )
    grid = dom.grid(grid_size)
    fn, sig = _bound_fn(family, r)
    values = [fn(x) for x in grid]

    branch_tol = Fraction(1, 10**9)
    kinks: list[Fraction] = []
    for i in range(len(grid) - 1):
        if sig(grid[i]) != sig(grid[i + 1]):
            kinks.append(_locate_signature_change(sig, grid[i], grid[i + 1], branch_tol))
    kinks.sort()
    merged: list[Fraction] = []
    for k in kinks:
        # a degenerate transition (double root at the switch) is seen from both
        # sides; collapse detections within a few bisection tolerances
        if merged and k - merged[-1] <= 8 * branch_tol:
            merged[-1] = (merged[-1] + k) / 2
        else:
            merged.append(k)
    kinks = merged

    segments = []
    cut_prev = grid[0]
    for k in kinks:
        segments.append((cut_prev, k))
        cut_prev = k
    segments.append((cut_prev, grid[-1]))

    best_x, best_v = None, None
    for a, b in segments:
        if not a < b:
            continue
        x, v = _golden_min(fn, a, b, refine_tol)
        if best_v is None or v < best_v:
            best_x, best_v = x, v

    multimodal = False
    g_idx = min(range(len(grid)), key=lambda i: float(values[i]))
    slack = 1e-11 * (1.0 + abs(float(best_v)))
    if float(best_v - values[g_idx]) > slack:
        # the grid saw a basin the per-branch search missed
        x, v = _golden_min(
            fn,
            grid[max(g_idx - 1, 0)],
            grid[min(g_idx + 1, len(grid) - 1)],
            refine_tol,
        )
        if v < best_v:
            best_x, best_v = x, v
        multimodal = float(best_v - values[g_idx]) > slack
    if values[g_idx] < best_v:
        # a grid point is the best value seen (e.g. the exact minimizer)
        best_x, best_v = grid[g_idx], values[g_idx]
    return BoundScan(
        family=family,
        order=r,
        grid=tuple(Scalar(x) for x in grid),
        values=tuple(values),
        minimizer=(Scalar(best_x), best_v),
        branch_points=tuple(Scalar(k) for k in kinks),
        multimodal_suspected=multimodal,
    )


def minimize_bound(family: RuleFamily, r: int, tol=Fraction(1, 10**12)) -> MinimizeResult:
    """Locate (x*, M_r(x*)) over the family domain.

    Assumes the bound is piecewise smooth and unimodal per branch (this holds
    for every catalog family); if the local-minimum check fails the result is
    flagged MultimodalSuspected and is the best grid-refined value.
    """
    tol_f = float(tol)
    if tol_f <= 0:
        raise ValueError("tol must be positive")
    scan = bound_scan(family, r, grid_size=33, refine_tol=tol_f)
    x_star, v_star = scan.minimizer
    fn, _ = _bound_fn(family, r)
    multimodal = scan.multimodal_suspected
    eps = Fraction(1, 10**6)
    xf = x_star.as_fraction()
    slack = 1e-11 * (1.0 + abs(float(v_star)))
    for probe in (xf - eps, xf + eps):
        if family.domain.contains(probe) and float(v_star - fn(probe)) > slack:
            multimodal = True
    return MinimizeResult(x=x_star, value=v_star, multimodal_suspected=multimodal)


def alomari4_min_m0(lam) -> tuple[Scalar, Scalar]:
    """Closed-form M_0 minimizer of the symmetric four-point family:
    x* = (1-lambda)/2 with value (3 lambda^2 - 2 lambda + 1)/2.

    Cross-checked against the numeric minimizer to 1e-12 on every call.
    """
    lam = as_scalar(lam)
    if not (Scalar(0) < lam < Scalar(1)):
        raise ParamOutOfDomain("alomari4: need 0 < lambda < 1")
    x_star = (Scalar(1) - lam) / 2
    value = (3 * lam * lam - 2 * lam + Scalar(1)) / 2
    from .rules import family as _family

    numeric = minimize_bound(_family("alomari4", lam=lam), 0)
    if abs(float(numeric.value - value)) > 1e-12:
        raise ParamOutOfDomain(
            "alomari4_min_m0: closed form and numeric minimum disagree; "
            f"lambda={lam}, closed={float(value)}, numeric={float(numeric.value)}"
        )
    return x_star, value


# --------------------------------------------------------------------------
# box-domain mean-value bound and tagged-partition bound


@dataclass(frozen=True)
class BoxDomain:
    """Axis-aligned box with per-direction partial-derivative bounds."""

    intervals: tuple[tuple[Scalar, Scalar], ...]
    deriv_bounds: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.intervals) != len(self.deriv_bounds):
            raise ValueError("need one derivative bound per dimension")
        for a, b in self.intervals:
            if not a.lt_definite(b):
                raise BadInterval(f"box side [{a}, {b}] is empty")
        for m in self.deriv_bounds:
            if not m > Scalar(0):
                raise ValueError("derivative bounds must be positive")

    @staticmethod
    def of(intervals, deriv_bounds) -> "BoxDomain":
        return BoxDomain(
            tuple((as_scalar(a), as_scalar(b)) for a, b in intervals),
            tuple(as_scalar(m) for m in deriv_bounds),
        )


def multidim_ostrowski_bound(box: BoxDomain, point) -> Scalar:
    """Bound on |f(point) - box average of f| given the per-axis bounds.

    Sum over axes of [1/4 + (x_i - mid_i)^2 / (b_i - a_i)^2] (b_i - a_i) M_i.
    """
    pts = [as_scalar(p) for p in point]
    if len(pts) != len(box.intervals):
        raise ValueError("point dimension does not match the box")
    total = Scalar(0)
    quarter = Scalar(Fraction(1, 4))
    for x, (a, b), m in zip(pts, box.intervals, box.deriv_bounds):
        if x < a or x > b:
            raise PointOutsideBox(f"coordinate {x} outside [{a}, {b}]")
        side = b - a
        off = x - (a + b) / 2
        total = total + (quarter + off * off / (side * side)) * side * m
    return total


def composite_partition_bound(partition, points, deriv_bound) -> Scalar:
    """Tagged-partition bound on [0, 1]: (M/2) sum (x_k-a_{k-1})^2 + (a_k-x_k)^2."""
    parts = [as_scalar(p) for p in partition]
    tags = [as_scalar(x) for x in points]
    if len(parts) < 2 or len(tags) != len(parts) - 1:
        raise InvalidPartition("need n+1 partition points and n tag points")
    if not (parts[0] == Scalar(0) and parts[-1] == Scalar(1)):
        raise InvalidPartition("partition must run from 0 to 1")
    for a, b in zip(parts, parts[1:]):
        if not a.lt_definite(b):
            raise InvalidPartition("partition points must strictly increase")
    for k, x in enumerate(tags):
        if x < parts[k] or x > parts[k + 1]:
            raise InvalidPartition(f"tag {x} outside panel [{parts[k]}, {parts[k + 1]}]")
    m = as_scalar(deriv_bound)
    if m < Scalar(0):
        raise ValueError("derivative bound must be nonnegative")
    total = Scalar(0)
    for k, x in enumerate(tags):
        l = x - parts[k]
        rgt = parts[k + 1] - x
        total = total + l * l + rgt * rgt
    return m / 2 * total


# --------------------------------------------------------------------------
# export


def export_scan_csv(scan: BoundScan, path, digits: int = 17) -> None:
    """Columns x, M_r(x), branch_id."""
    kinks = [float(k) for k in scan.branch_points]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", f"M{scan.order}", "branch_id"])
        for x, v in zip(scan.grid, scan.values):
            branch = sum(1 for k in kinks if float(x) > k)
            w.writerow([x.to_decimal(digits), v.to_decimal(digits), branch])


def scan_json_dict(scan: BoundScan, digits: int = 17) -> dict:
    x, v = scan.minimizer
    return {
        "family": scan.family.label(),
        "order": scan.order,
        "minimizer": {"x": x.to_json_str(digits), "value": v.to_json_str(digits),
                      "x_decimal": x.to_decimal(digits), "value_decimal": v.to_decimal(digits)},
        "branch_points": [b.to_decimal(digits) for b in scan.branch_points],
        "multimodal_suspected": scan.multimodal_suspected,
        "grid_size": len(scan.grid),
    }


def export_scan_json(scan: BoundScan, path, digits: int = 17) -> None:
    with open(path, "w") as fh:
        json.dump(scan_json_dict(scan, digits), fh, indent=2)
        fh.write("\n")
