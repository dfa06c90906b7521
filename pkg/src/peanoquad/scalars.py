"""Two-tier scalar arithmetic: exact rationals plus validated high-precision reals.

A :class:`Scalar` is either an exact rational (arbitrary-precision
``fractions.Fraction``) or a validated real: an outward-rounded interval at the
current working precision, so every arithmetic result encloses the true value
and the error radius is tracked conservatively.  Mixing the two tiers demotes
to the validated tier.

Square roots of rationals additionally remember the form ``coef * sqrt(m)``
(``coef`` rational, ``m`` a positive integer).  This provenance is carried
through negation, multiplication and division by rationals, like-radicand
products, and integer powers, so quantities such as ``sqrt(1/5) ** 6`` come
out exactly rational.  Everything else falls back to interval arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

import mpmath
from mpmath import iv

_DEFAULT_DPS = 60

iv.dps = _DEFAULT_DPS

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def set_working_dps(dps: int) -> None:
    """Set the decimal precision used by the validated (interval) tier."""
    if dps < 15:
        raise ValueError("working precision below 15 digits is not supported")
    iv.dps = dps


def get_working_dps() -> int:
    return iv.dps


def _extract_square(n: int) -> tuple[int, int]:
    """Return (s, m) with n == s*s*m, pulling out the square factors we can find."""
    if n <= 0:
        raise ValueError("positive integer required")
    r = isqrt(n)
    if r * r == n:
        return r, 1
    s = 1
    for p in _SMALL_PRIMES:
        p2 = p * p
        while n % p2 == 0:
            n //= p2
            s *= p
    r = isqrt(n)
    if r * r == n:
        return s * r, 1
    return s, n


def _frac_to_interval(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _iv_endpoints(x):
    lo, hi = x._mpi_
    return mpmath.mp.make_mpf(lo), mpmath.mp.make_mpf(hi)


_RATIONAL_RE = re.compile(
    r"""^([+-]?\d+)\s*/\s*(\d+)$          # p/q
      | ^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)$   # integer / decimal
    """,
    re.VERBOSE,
)
_SQRT_RE = re.compile(
    r"""^(?P<sign>[+-])?\s*
        (?:(?P<coef>[^s*]+)\s*\*\s*)?      # optional rational coefficient
        sqrt\(\s*(?P<rad>[^)]+)\s*\)
        (?:\s*/\s*(?P<div>\S+))?$          # optional rational divisor
    """,
    re.VERBOSE,
)


def _parse_fraction(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    if m.group(1) is not None:
        return Fraction(int(m.group(1)), int(m.group(2)))
    return Fraction(m.group(3))


class Scalar:
    """Exact rational, or validated interval real (optionally coef*sqrt(m))."""

    __slots__ = ("_frac", "_ival", "_sqrt")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._frac, self._ival, self._sqrt = value._frac, value._ival, value._sqrt
            return
        self._sqrt = None
        if isinstance(value, (int, Fraction)):
            self._frac = Fraction(value)
            self._ival = None
        elif isinstance(value, float):
            self._frac = Fraction(value)  # floats are exact dyadic rationals
            self._ival = None
        elif isinstance(value, str):
            s = Scalar.parse(value)
            self._frac, self._ival, self._sqrt = s._frac, s._ival, s._sqrt
        elif isinstance(value, iv.mpf):
            self._frac = None
            self._ival = value
        elif isinstance(value, mpmath.mpf):
            self._frac = None
            self._ival = iv.mpf(value)  # exact point interval
        else:
            raise TypeError(f"cannot build Scalar from {type(value).__name__}")

    # --- constructors -------------------------------------------------

    @staticmethod
    def rational(num, den=1) -> "Scalar":
        return Scalar(Fraction(num, den))

    @staticmethod
    def from_interval(lo, hi) -> "Scalar":
        """Validated scalar from endpoint bounds (Fractions, floats, or mpf)."""
        s = Scalar.__new__(Scalar)
        s._frac = None
        s._sqrt = None
        if isinstance(lo, Fraction) or isinstance(hi, Fraction):
            a_lo, _ = _iv_endpoints(_frac_to_interval(Fraction(lo)))
            _, b_hi = _iv_endpoints(_frac_to_interval(Fraction(hi)))
            s._ival = iv.mpf([a_lo, b_hi])
        else:
            s._ival = iv.mpf([lo, hi])
        return s

    @staticmethod
    def _sqrt_form(coef: Fraction, radicand: int, interval) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s._frac = None
        s._ival = interval
        s._sqrt = (coef, radicand)
        return s

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse "p/q", integer/decimal literals, and [c*]sqrt(r)[/d] forms."""
        text = text.strip()
        m = _SQRT_RE.match(text)
        if m:
            coef = Fraction(-1 if m.group("sign") == "-" else 1)
            if m.group("coef"):
                coef *= _parse_fraction(m.group("coef"))
            if m.group("div"):
                coef /= _parse_fraction(m.group("div"))
            rad = _parse_fraction(m.group("rad"))
            return Scalar(coef) * sqrt(Scalar(rad))
        return Scalar(_parse_fraction(text))

    # --- predicates and accessors --------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._frac is not None

    def as_fraction(self) -> Fraction:
        if self._frac is None:
            raise ValueError("scalar is not an exact rational")
        return self._frac

    def interval(self):
        """Outward-rounded interval enclosure at the working precision."""
        if self._frac is not None:
            return _frac_to_interval(self._frac)
        if self._sqrt is not None:
            c, m = self._sqrt  # recompute: tracks precision raises after creation
            return _frac_to_interval(c) * iv.sqrt(iv.mpf(m))
        return self._ival

    def is_exact_zero(self) -> bool:
        return self._frac is not None and self._frac == 0

    def contains_zero(self) -> bool:
        if self._frac is not None:
            return self._frac == 0
        return 0 in self.interval()

    def zero_within(self, width: Fraction) -> bool:
        """True when the value is exactly zero, or encloses zero tightly.

        For interval scalars "tightly" means the enclosure width is below
        ``width``; this is the zero test used by the exactness machinery.
        """
        if self._frac is not None:
            return self._frac == 0
        ival = self.interval()
        if 0 not in ival:
            return False
        lo, hi = _iv_endpoints(ival)
        return (hi - lo) < mpmath.mpf(width.numerator) / width.denominator

    def sign(self):
        """-1, 0, or +1; None when the enclosure straddles zero."""
        if self._frac is not None:
            f = self._frac
            return 0 if f == 0 else (1 if f > 0 else -1)
        lo, hi = _iv_endpoints(self.interval())
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if lo == 0 and hi == 0:
            return 0
        return None

    def radius(self) -> float:
        """Conservative absolute-error radius (0.0 for exact rationals)."""
        if self._frac is not None:
            return 0.0
        lo, hi = _iv_endpoints(self.interval())
        return float((hi - lo) / 2)

    def __float__(self) -> float:
        if self._frac is not None:
            return float(self._frac)
        return float(self.interval().mid)

    def mid_fraction(self) -> Fraction:
        """Exact rational at (or near) the midpoint of the enclosure."""
        if self._frac is not None:
            return self._frac
        return Fraction(float(self._ival.mid))

    # --- arithmetic ----------------------------------------------------

    def __neg__(self) -> "Scalar":
        if self._frac is not None:
            return Scalar(-self._frac)
        if self._sqrt is not None:
            return Scalar._sqrt_form(-self._sqrt[0], self._sqrt[1], -self._ival)
        return Scalar(-self._ival)

    def __abs__(self) -> "Scalar":
        if self._frac is not None:
            return Scalar(abs(self._frac))
        if self._sqrt is not None:
            c, m = self._sqrt
            return Scalar._sqrt_form(abs(c), m, abs(self._ival))
        return Scalar(abs(self._ival))

    def __add__(self, other) -> "Scalar":
        other = as_scalar(other)
        if self._frac is not None and other._frac is not None:
            return Scalar(self._frac + other._frac)
        if self._frac is not None and self._frac == 0:
            return other
        if other._frac is not None and other._frac == 0:
            return self
        if (
            self._sqrt is not None
            and other._sqrt is not None
            and self._sqrt[1] == other._sqrt[1]
        ):
            c = self._sqrt[0] + other._sqrt[0]
            if c == 0:
                return Scalar(0)
            return Scalar._sqrt_form(c, self._sqrt[1], self.interval() + other.interval())
        return Scalar(self.interval() + other.interval())

    def __radd__(self, other):
        return as_scalar(other) + self

    def __sub__(self, other) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        other = as_scalar(other)
        if self._frac is not None and other._frac is not None:
            return Scalar(self._frac * other._frac)
        for a, b in ((self, other), (other, self)):
            if a._frac is not None and b._sqrt is not None:
                if a._frac == 0:
                    return Scalar(0)
                return Scalar._sqrt_form(
                    a._frac * b._sqrt[0], b._sqrt[1], a.interval() * b.interval()
                )
        if self._sqrt is not None and other._sqrt is not None:
            c1, m1 = self._sqrt
            c2, m2 = other._sqrt
            if m1 == m2:
                return Scalar(c1 * c2 * m1)  # sqrt(m)^2 == m, exactly
            s, m = _extract_square(m1 * m2)
            coef = c1 * c2 * s
            if m == 1:
                return Scalar(coef)
            return Scalar._sqrt_form(coef, m, self.interval() * other.interval())
        if self._frac is not None and self._frac == 0:
            return Scalar(0)
        if other._frac is not None and other._frac == 0:
            return Scalar(0)
        return Scalar(self.interval() * other.interval())

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other) -> "Scalar":
        other = as_scalar(other)
        if other.is_exact_zero():
            raise ZeroDivisionError("scalar division by exact zero")
        if self._frac is not None and other._frac is not None:
            return Scalar(self._frac / other._frac)
        if self._sqrt is not None and other._frac is not None:
            return Scalar._sqrt_form(
                self._sqrt[0] / other._frac, self._sqrt[1], self.interval() / other.interval()
            )
        if other._sqrt is not None:
            # 1/sqrt(m) == sqrt(m)/m
            c, m = other._sqrt
            inv = Scalar._sqrt_form(
                Fraction(1) / (c * m), m, 1 / other.interval()
            )
            return self * inv
        return Scalar(self.interval() / other.interval())

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n < 0:
            return Scalar(1) / (self ** (-n))
        if self._frac is not None:
            return Scalar(self._frac**n)
        if self._sqrt is not None:
            c, m = self._sqrt
            if n % 2 == 0:
                return Scalar(c**n * Fraction(m) ** (n // 2))
            return Scalar._sqrt_form(c**n * Fraction(m) ** ((n - 1) // 2), m, self._ival**n)
        return Scalar(self._ival**n)

    # --- comparisons ---------------------------------------------------

    def lt_definite(self, other):
        """True/False when provably ordered, None when enclosures overlap."""
        other = as_scalar(other)
        if self._frac is not None and other._frac is not None:
            return self._frac < other._frac
        if (
            self._sqrt is not None
            and other._sqrt is not None
            and self._sqrt[1] == other._sqrt[1]
        ):
            return self._sqrt[0] < other._sqrt[0]
        a_lo, a_hi = _iv_endpoints(self.interval())
        b_lo, b_hi = _iv_endpoints(other.interval())
        if a_hi < b_lo:
            return True
        if a_lo >= b_hi:
            return False
        return None

    def __lt__(self, other):
        r = self.lt_definite(other)
        if r is None:
            # overlap below the error radius: fall back to midpoints
            return float(self) < float(as_scalar(other))
        return r

    def __gt__(self, other):
        return as_scalar(other) < self

    def __le__(self, other):
        return not (as_scalar(other) < self)

    def __ge__(self, other):
        return not (self < as_scalar(other))

    def __eq__(self, other):
        """Definite equality: exact match within one representation tier."""
        if not isinstance(other, (Scalar, int, float, Fraction)):
            return NotImplemented
        other = as_scalar(other)
        if self._frac is not None and other._frac is not None:
            return self._frac == other._frac
        if self._sqrt is not None and other._sqrt is not None:
            return self._sqrt == other._sqrt
        if self._ival is not None and other._ival is not None:
            return self._ival._mpi_ == other._ival._mpi_
        return False

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    # --- formatting ----------------------------------------------------

    def to_decimal(self, digits: int = 17) -> str:
        """Decimal rendering with '.' separator and the given significant digits."""
        with mpmath.workdps(digits + 10):
            if self._frac is not None:
                x = mpmath.mpf(self._frac.numerator) / self._frac.denominator
            else:
                x = mpmath.mp.make_mpf(self.interval().mid._mpi_[0])
            return mpmath.nstr(x, digits)

    def to_json_str(self, digits: int | None = None) -> str:
        """Serialization string: exact "p/q", "c*sqrt(m)", or a decimal."""
        if self._frac is not None:
            f = self._frac
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        if self._sqrt is not None:
            c, m = self._sqrt
            if c == 1:
                return f"sqrt({m})"
            if c == -1:
                return f"-sqrt({m})"
            cstr = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            return f"{cstr}*sqrt({m})"
        return self.to_decimal(digits if digits is not None else get_working_dps())

    def __str__(self):
        if self._frac is not None or self._sqrt is not None:
            return self.to_json_str()
        return self.to_decimal(17)

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def as_scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def sum_scalars(items) -> Scalar:
    """Sum that groups rationals and like-radicand sqrt terms before mixing.

    Keeps results exact when symmetric contributions cancel (e.g. weights at
    -x and x), which a plain left-to-right sum would demote to intervals.
    """
    rational = Fraction(0)
    sqrt_parts: dict[int, Fraction] = {}
    rest: list[Scalar] = []
    for item in items:
        s = as_scalar(item)
        if s._frac is not None:
            rational += s._frac
        elif s._sqrt is not None:
            c, m = s._sqrt
            sqrt_parts[m] = sqrt_parts.get(m, Fraction(0)) + c
        else:
            rest.append(s)
    total = Scalar(rational)
    for m, c in sqrt_parts.items():
        if c != 0:
            total = total + Scalar._sqrt_form(
                c, m, _frac_to_interval(c) * iv.sqrt(iv.mpf(m))
            )
    for s in rest:
        total = total + s
    return total


def sqrt(x) -> Scalar:
    """Square root; exact for perfect squares, else a validated enclosure
    tagged with its coef*sqrt(m) form."""
    x = as_scalar(x)
    if x._frac is not None:
        f = x._frac
        if f < 0:
            raise ValueError("square root of a negative scalar")
        if f == 0:
            return Scalar(0)
        sn, mn = _extract_square(f.numerator)
        sd, md = _extract_square(f.denominator)
        if mn == 1 and md == 1:
            return Scalar(Fraction(sn, sd))
        # sqrt(p/q) = sqrt(p*q)/q
        s, m = _extract_square(f.numerator * f.denominator)
        coef = Fraction(s, f.denominator)
        if m == 1:
            return Scalar(coef)
        return Scalar._sqrt_form(coef, m, _frac_to_interval(coef) * iv.sqrt(iv.mpf(m)))
    try:
        return Scalar(iv.sqrt(x.interval()))
    except mpmath.libmp.libhyper.ComplexResult:
        raise ValueError("square root of a negative scalar") from None


ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
