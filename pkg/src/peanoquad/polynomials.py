"""Dense univariate polynomials over Scalar coefficients."""

from __future__ import annotations

from collections.abc import Iterable

from .scalars import Scalar, as_scalar


class Polynomial:
    """Coefficient sequence, index i holding the coefficient of t**i.

    Trailing exactly-zero coefficients are trimmed on construction; the zero
    polynomial is the empty sequence with degree -1.  All arithmetic is exact
    whenever every coefficient involved is rational.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_exact_zero():
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @staticmethod
    def monomial(k: int, coef=1) -> "Polynomial":
        """coef * t**k"""
        return Polynomial([0] * k + [coef])

    @staticmethod
    def affine_power(c, slope, r: int) -> "Polynomial":
        """(c + slope*t) ** r by repeated multiplication."""
        base = Polynomial([c, slope])
        out = Polynomial([1])
        for _ in range(r):
            out = out * base
        return out

    def evaluate(self, t) -> Scalar:
        t = as_scalar(t)
        acc = Scalar(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    __call__ = evaluate

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            s = as_scalar(other)
            return Polynomial([c * s for c in self._coeffs])
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Scalar(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca.is_exact_zero():
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(out)

    def __rmul__(self, other) -> "Polynomial":
        return self * other

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial powers are undefined")
        out = Polynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> "Polynomial":
        return Polynomial([c * i for i, c in enumerate(self._coeffs)][1:])

    def antiderivative(self) -> "Polynomial":
        """F with F' == self and F(0) == 0; exact over rationals."""
        out = [Scalar(0)]
        for i, c in enumerate(self._coeffs):
            out.append(c / (i + 1))
        return Polynomial(out)

    def definite_integral(self, a, b) -> Scalar:
        F = self.antiderivative()
        return F(b) - F(a)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self._coeffs) != len(other._coeffs):
            return False
        return all(a == b for a, b in zip(self._coeffs, other._coeffs))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c.is_exact_zero():
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"({c})*t")
            else:
                parts.append(f"({c})*t^{i}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"
