"""Exact base-field scalars: rationals and Gaussian rationals.

The two base fields are selected by a FieldMode: RealRational works over Q
(plain ``fractions.Fraction``), ComplexGaussian over Q(i) (``GaussianRational``,
a pair of Fractions). Everything downstream does arithmetic through the
standard operator protocol, so the two kinds mix freely with ``int`` and with
each other where mathematically meaningful. No floats ever enter a decision
path; decimal strings appear only as display annotations.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ParseError


class FieldMode(Enum):
    """Which base field scalars live in."""

    REAL = "real"
    COMPLEX = "complex"

    @property
    def zero(self):
        return Fraction(0) if self is FieldMode.REAL else GaussianRational.zero()

    @property
    def one(self):
        return Fraction(1) if self is FieldMode.REAL else GaussianRational.one()


@dataclass(frozen=True)
class GaussianRational:
    """An element a + b*i of Q(i) with exact rational parts."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def zero() -> "GaussianRational":
        return GaussianRational(Fraction(0), Fraction(0))

    @staticmethod
    def one() -> "GaussianRational":
        return GaussianRational(Fraction(1), Fraction(0))

    @staticmethod
    def i() -> "GaussianRational":
        return GaussianRational(Fraction(0), Fraction(1))

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = GaussianRational.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm a^2 + b^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return render_scalar_text(self)


Scalar = object  # duck-typed: Fraction | GaussianRational | AlgebraicScalar


def as_base_scalar(value, mode: FieldMode):
    """Coerce an int/Fraction/GaussianRational into the mode's base field."""
    if isinstance(value, GaussianRational):
        if mode is FieldMode.REAL:
            if value.im != 0:
                raise ParseError("imaginary part not allowed in real mode")
            return value.re
        return value
    if isinstance(value, (int, Fraction)):
        f = Fraction(value)
        return f if mode is FieldMode.REAL else GaussianRational(f, Fraction(0))
    raise ParseError(f"cannot coerce {value!r} to a base scalar")


def is_base_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, GaussianRational))


_RATIONAL_RE = _re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact Fraction."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational literal string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"malformed rational literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_scalar(value, mode: FieldMode):
    """Parse a JSON-level scalar literal.

    Real mode accepts "p/q" strings or ints. Complex mode additionally accepts
    {"re": "...", "im": "..."} objects; bare literals mean a real value.
    """
    if isinstance(value, dict):
        if mode is not FieldMode.COMPLEX:
            raise ParseError("re/im scalar objects are only valid in complex mode")
        if set(value) != {"re", "im"}:
            raise ParseError('scalar objects need exactly the keys "re" and "im"')
        re_part = parse_rational(value["re"])
        im_part = parse_rational(value["im"])
        return GaussianRational(re_part, im_part)
    if isinstance(value, bool):
        raise ParseError("booleans are not scalars")
    if isinstance(value, (str, int)):
        f = parse_rational(value)
        return f if mode is FieldMode.REAL else GaussianRational(f, Fraction(0))
    raise ParseError(f"malformed scalar literal {value!r}")


def render_rational(f: Fraction) -> str:
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def render_scalar_json(value):
    """Render a base scalar into its JSON form (string or re/im object)."""
    if isinstance(value, (int, Fraction)):
        return render_rational(Fraction(value))
    if isinstance(value, GaussianRational):
        if value.im == 0:
            return render_rational(value.re)
        return {"re": render_rational(value.re), "im": render_rational(value.im)}
    raise TypeError(f"not a base scalar: {value!r}")


def render_scalar_text(value) -> str:
    """Human-readable exact rendering, e.g. "-3/7" or "1/2-3i"."""
    if isinstance(value, (int, Fraction)):
        return render_rational(Fraction(value))
    if isinstance(value, GaussianRational):
        if value.im == 0:
            return render_rational(value.re)
        im_abs = render_rational(abs(value.im))
        im_part = "i" if im_abs == "1" else f"{im_abs}i"
        sign = "+" if value.im > 0 else "-"
        if value.re == 0:
            return f"{'-' if value.im < 0 else ''}{im_part}"
        return f"{render_rational(value.re)}{sign}{im_part}"
    return str(value)


def rational_sqrt(f: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    f = Fraction(f)
    if f < 0:
        return None
    num = math.isqrt(f.numerator)
    den = math.isqrt(f.denominator)
    if num * num == f.numerator and den * den == f.denominator:
        return Fraction(num, den)
    return None


def gaussian_sqrt(z: GaussianRational):
    """Exact square root of z within Q(i), or None if no such element exists.

    Solving (p+qi)^2 = a+bi: if b = 0 the root is real or purely imaginary;
    otherwise p^2 = (a + N)/2 with N = sqrt(a^2+b^2), which must itself be a
    rational square, and q = b/(2p).
    """
    a, b = z.re, z.im
    if b == 0:
        r = rational_sqrt(a)
        if r is not None:
            return GaussianRational(r, Fraction(0))
        r = rational_sqrt(-a)
        if r is not None:
            return GaussianRational(Fraction(0), r)
        return None
    n = rational_sqrt(a * a + b * b)
    if n is None:
        return None
    p = rational_sqrt((a + n) / 2)
    if p is None or p == 0:
        return None
    q = b / (2 * p)
    return GaussianRational(p, q)


def scalar_sort_key(value):
    """Deterministic total order over scalars for stable output.

    Base scalars sort by exact (re, im); algebraic scalars interleave by a
    tightly refined rational approximation, tie-broken by their exact
    representation, so the overall order is reproducible across runs.
    """
    if isinstance(value, (int, Fraction)):
        return (Fraction(value), Fraction(0), ())
    if isinstance(value, GaussianRational):
        return (value.re, value.im, ())
    key = getattr(value, "sort_key", None)
    if key is not None:
        return tuple(key())
    raise TypeError(f"unsortable scalar {value!r}")
