"""Composite integration with an a-priori error certificate.

Splitting [a, b] into n equal panels and applying a rule of sharp constant
M_r on each panel gives the additive certificate

    n * M_r * h^(r+2) * deriv_sup,    h = (b - a) / (2n),

valid whenever deriv_sup really bounds |f^(r+1)| on [a, b].  The derivative
bound is always caller-asserted; nothing here differentiates a black box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadInterval
from .peano import kernel_l1_norm
from .rules import QuadRule, apply_rule
from .scalars import Scalar, as_scalar


@dataclass(frozen=True)
class CompositeResult:
    value: Scalar
    panels: int
    rule_name: str
    order_used: int
    certificate: Scalar
    deriv_sup_asserted: Scalar


def _certificate(m_r: Scalar, n: int, r: int, width: Scalar, deriv_sup: Scalar) -> Scalar:
    h = width / (2 * n)
    return n * m_r * h ** (r + 2) * deriv_sup


def composite_integrate(
    rule: QuadRule,
    f,
    a,
    b,
    n: int,
    r: int,
    deriv_sup,
    fprime=None,
) -> CompositeResult:
    """Apply the rule on n equal panels of [a, b]; certify the total error.

    The certificate bounds |integral - value| whenever `deriv_sup` is a valid
    sup norm of f^(r+1) on [a, b].  Panels are summed left to right.
    """
    a, b = as_scalar(a), as_scalar(b)
    if not a.lt_definite(b):
        raise BadInterval(f"need a < b, got [{a}, {b}]")
    if n < 1:
        raise ValueError("need at least one panel")
    deriv_sup = as_scalar(deriv_sup)
    if deriv_sup < Scalar(0):
        raise ValueError("deriv_sup must be nonnegative")
    m_r = kernel_l1_norm(rule, r).l1_norm  # raises OrderExceedsExactness if r > d
    width = b - a
    total = Scalar(0)
    for k in range(n):
        pa = a + width * Fraction(k, n)
        pb = a + width * Fraction(k + 1, n)
        total = total + apply_rule(rule, f, pa, pb, fprime)
    return CompositeResult(
        value=total,
        panels=n,
        rule_name=rule.name,
        order_used=r,
        certificate=_certificate(m_r, n, r, width, deriv_sup),
        deriv_sup_asserted=deriv_sup,
    )


def panels_for_tolerance(rule: QuadRule, r: int, deriv_sup, a, b, eps) -> int:
    """Smallest panel count whose certificate is at most eps.

    The certificate scales as n^-(r+1), so the count follows from a direct
    inversion, then is verified exactly on both sides.
    """
    a, b = as_scalar(a), as_scalar(b)
    if not a.lt_definite(b):
        raise BadInterval(f"need a < b, got [{a}, {b}]")
    eps = as_scalar(eps)
    if not eps > Scalar(0):
        raise ValueError("eps must be positive")
    deriv_sup = as_scalar(deriv_sup)
    m_r = kernel_l1_norm(rule, r).l1_norm
    width = b - a
    if not _certificate(m_r, 1, r, width, deriv_sup) > eps:
        return 1
    # certificate(n) = C / n^(r+1)
    c_top = float(m_r * (width / 2) ** (r + 2) * deriv_sup)
    n = max(1, math.ceil((c_top / float(eps)) ** (1.0 / (r + 1))))
    while _certificate(m_r, n, r, width, deriv_sup) > eps:
        n += 1
    while n > 1 and not _certificate(m_r, n - 1, r, width, deriv_sup) > eps:
        n -= 1
    return n
