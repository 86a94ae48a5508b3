"""Exact real and complex algebraic numbers of small degree.

Real roots of rational polynomials are isolated with Sturm sequences and
bisection. Complex roots of Gaussian-rational polynomials are isolated with
an exact winding-number count over rational rectangles (zeros inside a
rectangle equal the signed crossings of the boundary image over the positive
real ray). ExtensionContext pins one distinguished root of a monic
irreducible polynomial; AlgebraicScalar represents field elements as residue
polynomials in that root, with arithmetic mod the minimal polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    DegenerateInput,
    IncompatibleExtensions,
    InconsistencyDetected,
)
from .poly import UniPoly, gcd_univariate, solve_linear_with_rank, squarefree_part
from .scalar import FieldMode, GaussianRational

_MAX_DEPTH = 512


def _sign(v: Fraction) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


class _BoundaryRoot(Exception):
    """Internal: a root or degeneracy sits on the rectangle boundary."""


# ---------------------------------------------------------------------------
# rational interval and rectangle arithmetic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise DegenerateInput("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, v) -> bool:
        return self.lo <= v <= self.hi

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        prods = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return Interval(min(prods), max(prods))

    @staticmethod
    def point(v) -> "Interval":
        return Interval(Fraction(v), Fraction(v))


@dataclass(frozen=True)
class Box:
    """Axis-aligned rational rectangle in the complex plane."""

    re: Interval
    im: Interval

    @property
    def max_width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    @property
    def mid(self) -> GaussianRational:
        return GaussianRational(self.re.mid, self.im.mid)

    def contains(self, z: GaussianRational) -> bool:
        return self.re.contains(z.re) and self.im.contains(z.im)

    def intersect(self, other: "Box") -> Optional["Box"]:
        re = self.re.intersect(other.re)
        im = self.im.intersect(other.im)
        return Box(re, im) if re is not None and im is not None else None

    def __add__(self, other: "Box") -> "Box":
        return Box(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Box") -> "Box":
        return Box(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Box":
        return Box(-self.re, -self.im)

    def __mul__(self, other: "Box") -> "Box":
        return Box(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    @staticmethod
    def point(z: GaussianRational) -> "Box":
        return Box(Interval.point(z.re), Interval.point(z.im))


def eval_poly_interval(p: UniPoly, iv: Interval) -> Interval:
    """Enclosure of p over an interval via Horner in interval arithmetic."""
    acc = Interval.point(Fraction(0))
    for c in reversed(p.coeffs):
        acc = acc * iv + Interval.point(Fraction(c))
    return acc


def eval_poly_box(p: UniPoly, box: Box) -> Box:
    acc = Box.point(GaussianRational(0, 0))
    for c in reversed(p.coeffs):
        z = c if isinstance(c, GaussianRational) else GaussianRational(Fraction(c), 0)
        acc = acc * box + Box.point(z)
    return acc


# ---------------------------------------------------------------------------
# Sturm sequences and real root isolation
# ---------------------------------------------------------------------------


def sturm_chain(p: UniPoly) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        _, r = chain[-2].divmod(chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero()]


def _sign_variations(chain, x: Fraction) -> int:
    signs = [s for s in (_sign(q.eval(x)) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: UniPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi); endpoints must not be roots."""
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return 0
    if sf.eval(lo) == 0 or sf.eval(hi) == 0:
        raise DegenerateInput("root counting requires non-root endpoints")
    chain = sturm_chain(sf)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def cauchy_bound(p: UniPoly) -> Fraction:
    """Strict bound B with every real/complex root of p inside |z| < B."""
    if p.degree < 1:
        return Fraction(1)
    lead = p.leading()
    if isinstance(lead, GaussianRational):
        denom = max(abs(lead.re), abs(lead.im))
        tops = [abs(c.re) + abs(c.im) if isinstance(c, GaussianRational) else abs(Fraction(c))
                for c in p.coeffs[:-1]]
    else:
        denom = abs(Fraction(lead))
        tops = [abs(Fraction(c)) for c in p.coeffs[:-1]]
    return 1 + max((t / denom for t in tops), default=Fraction(0))


def isolate_real_roots(p: UniPoly) -> list:
    """Disjoint isolating intervals for the distinct real roots of p, sorted.

    Each result is either a point interval holding an exact rational root or
    an open-style interval whose endpoints are not roots and which contains
    exactly one root.
    """
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return []
    chain = sturm_chain(sf)
    bound = cauchy_bound(sf)
    out: list = []

    def var(x):
        return _sign_variations(chain, x)

    def work(a: Fraction, b: Fraction, count: int, depth: int):
        if count == 0:
            return
        if depth > _MAX_DEPTH:
            raise InconsistencyDetected("real root isolation failed to converge")
        if count == 1:
            out.append(Interval(a, b))
            return
        mid = (a + b) / 2
        if sf.eval(mid) == 0:
            delta = (b - a) / 4
            while (
                sf.eval(mid - delta) == 0
                or sf.eval(mid + delta) == 0
                or var(mid - delta) - var(mid + delta) != 1
            ):
                delta = delta / 2
            out.append(Interval.point(mid))
            work(a, mid - delta, var(a) - var(mid - delta), depth + 1)
            work(mid + delta, b, var(mid + delta) - var(b), depth + 1)
        else:
            left = var(a) - var(mid)
            work(a, mid, left, depth + 1)
            work(mid, b, count - left, depth + 1)

    total = var(-bound) - var(bound)
    work(-bound, bound, total, 0)
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_real_root(p: UniPoly, iv: Interval, target: Fraction) -> Interval:
    """Shrink an isolating interval below a target width; p must be squarefree."""
    if iv.is_point():
        return iv
    sa = _sign(p.eval(iv.lo))
    sb = _sign(p.eval(iv.hi))
    if sa == 0 or sb == 0 or sa == sb:
        raise DegenerateInput("interval does not bracket a simple root")
    lo, hi = iv.lo, iv.hi
    for _ in range(_MAX_DEPTH):
        if hi - lo <= target:
            return Interval(lo, hi)
        mid = (lo + hi) / 2
        sm = _sign(p.eval(mid))
        if sm == 0:
            return Interval.point(mid)
        if sm == sa:
            lo = mid
        else:
            hi = mid
    raise InconsistencyDetected("real root refinement failed to converge")


def _isolate_open(p: UniPoly, chain) -> list:
    """Isolating intervals with non-root endpoints (rational roots get tiny brackets)."""
    out = []
    for iv in isolate_real_roots(p):
        if not iv.is_point():
            out.append(iv)
            continue
        r = iv.lo
        delta = Fraction(1, 4)
        for _ in range(_MAX_DEPTH):
            a, b = r - delta, r + delta
            if (
                p.eval(a) != 0
                and p.eval(b) != 0
                and _sign_variations(chain, a) - _sign_variations(chain, b) == 1
            ):
                out.append(Interval(a, b))
                break
            delta = delta / 2
        else:
            raise InconsistencyDetected("failed to bracket rational root")
    out.sort(key=lambda i: i.lo)
    return out


# ---------------------------------------------------------------------------
# complex root isolation by winding count on rectangles
# ---------------------------------------------------------------------------


def _as_gaussian(c) -> GaussianRational:
    return c if isinstance(c, GaussianRational) else GaussianRational(Fraction(c), 0)


def _edge_parts(p: UniPoly, z0: GaussianRational, z1: GaussianRational):
    """Real and imaginary parts of t -> p(z0 + t (z1 - z0)) as rational polynomials."""
    comp = p.compose_linear(_as_gaussian(z0), _as_gaussian(z1 - z0))
    res = []
    ims = []
    for c in comp.coeffs:
        g = _as_gaussian(c)
        res.append(g.re)
        ims.append(g.im)
    return UniPoly(tuple(res)), UniPoly(tuple(ims))


def _im_roots_in_unit_interval(im_t: UniPoly) -> list:
    """Isolating intervals within (0, 1) for roots of im_t; endpoints 0, 1 must not be roots."""
    sf = squarefree_part(im_t)
    chain = sturm_chain(sf)
    picked = []
    for iv in _isolate_open(sf, chain):
        lo, hi = iv.lo, iv.hi
        for _ in range(_MAX_DEPTH):
            if hi < 0 or lo > 1 or (lo >= 0 and hi <= 1 and lo > 0 and hi < 1):
                break
            mid = (lo + hi) / 2
            sm = _sign(sf.eval(mid))
            if sm == 0:
                lo, hi = mid, mid
                break
            if sm == _sign(sf.eval(lo)):
                lo = mid
            else:
                hi = mid
        else:
            raise InconsistencyDetected("edge root localization failed")
        if lo == hi:
            # exact rational root: re-bracket inside (0, 1)
            if 0 < lo < 1:
                delta = min(lo, 1 - lo) / 2
                while (
                    sf.eval(lo - delta) == 0
                    or sf.eval(lo + delta) == 0
                    or _sign_variations(chain, lo - delta) - _sign_variations(chain, lo + delta)
                    != 1
                ):
                    delta = delta / 2
                picked.append(Interval(lo - delta, lo + delta))
            continue
        if hi < 0 or lo > 1:
            continue
        picked.append(Interval(lo, hi))
    picked.sort(key=lambda i: i.lo)
    return picked


def _sign_at_isolated_root(target: UniPoly, other_sf: UniPoly, iv: Interval) -> int:
    """Sign of `target` at the unique root of `other_sf` inside iv.

    Requires that root not to be a root of `target`. The interval is refined
    until `target` has no roots inside, so its sign at the midpoint is the
    sign at the root.
    """
    t_sf = squarefree_part(target)
    lo, hi = iv.lo, iv.hi
    for _ in range(_MAX_DEPTH):
        if t_sf.eval(lo) != 0 and t_sf.eval(hi) != 0 and count_real_roots(t_sf, lo, hi) == 0:
            s = _sign(target.eval((lo + hi) / 2))
            if s == 0:
                raise InconsistencyDetected("sign evaluation hit an unexpected root")
            return s
        mid = (lo + hi) / 2
        sm = _sign(other_sf.eval(mid))
        if sm == 0:
            # the tracked root is exactly mid; bracket it away from target's roots
            delta = (hi - lo) / 8
            while not (
                other_sf.eval(mid - delta) != 0
                and other_sf.eval(mid + delta) != 0
                and t_sf.eval(mid - delta) != 0
                and t_sf.eval(mid + delta) != 0
                and count_real_roots(t_sf, mid - delta, mid + delta) == 0
            ):
                delta = delta / 2
            s = _sign(target.eval(mid))
            if s == 0:
                raise InconsistencyDetected("sign evaluation hit an unexpected root")
            return s
        if sm == _sign(other_sf.eval(lo)):
            lo = mid
        else:
            hi = mid
    raise InconsistencyDetected("sign refinement failed to converge")


def count_roots_in_box(p: UniPoly, box: Box) -> int:
    """Zeros of p strictly inside the box, counted without multiplicity.

    p must be squarefree. Raises _BoundaryRoot when a zero (or a degenerate
    edge situation) is detected on the boundary, so callers can jitter the box.
    """
    corners = [
        GaussianRational(box.re.lo, box.im.lo),
        GaussianRational(box.re.hi, box.im.lo),
        GaussianRational(box.re.hi, box.im.hi),
        GaussianRational(box.re.lo, box.im.hi),
    ]
    crossings = 0
    for k in range(4):
        z0, z1 = corners[k], corners[(k + 1) % 4]
        if p.eval(z0) == 0 or p.eval(z1) == 0:
            raise _BoundaryRoot
        re_t, im_t = _edge_parts(p, z0, z1)
        if im_t.is_zero():
            raise _BoundaryRoot
        if im_t.eval(Fraction(0)) == 0 or im_t.eval(Fraction(1)) == 0:
            raise _BoundaryRoot
        g = gcd_univariate(re_t, im_t)
        im_sf = squarefree_part(im_t)
        for iv in _im_roots_in_unit_interval(im_t):
            if g.degree >= 1:
                g_sf = squarefree_part(g)
                if g_sf.eval(iv.lo) == 0 or g_sf.eval(iv.hi) == 0:
                    raise _BoundaryRoot
                if count_real_roots(g_sf, iv.lo, iv.hi) > 0:
                    raise _BoundaryRoot
            s_before = _sign(im_t.eval(iv.lo))
            s_after = _sign(im_t.eval(iv.hi))
            if s_before == s_after or s_before == 0 or s_after == 0:
                continue
            s_re = _sign_at_isolated_root(re_t, im_sf, iv)
            if s_re > 0:
                crossings += (s_after - s_before) // 2
    if crossings < 0:
        raise InconsistencyDetected("negative winding count")
    return crossings


_SPLIT_RATIOS = [
    Fraction(1, 2),
    Fraction(9, 16),
    Fraction(7, 16),
    Fraction(19, 32),
    Fraction(13, 32),
    Fraction(5, 8),
    Fraction(3, 8),
    Fraction(27, 64),
    Fraction(37, 64),
]


def _split_four(box: Box, rx: Fraction, ry: Fraction):
    xcut = box.re.lo + box.re.width * rx
    ycut = box.im.lo + box.im.width * ry
    return [
        Box(Interval(box.re.lo, xcut), Interval(box.im.lo, ycut)),
        Box(Interval(xcut, box.re.hi), Interval(box.im.lo, ycut)),
        Box(Interval(box.re.lo, xcut), Interval(ycut, box.im.hi)),
        Box(Interval(xcut, box.re.hi), Interval(ycut, box.im.hi)),
    ]


def _counted_split(p: UniPoly, box: Box):
    """Split a box into four parts whose boundaries avoid roots of p."""
    for rx in _SPLIT_RATIOS:
        for ry in _SPLIT_RATIOS:
            parts = _split_four(box, rx, ry)
            try:
                counts = [count_roots_in_box(p, b) for b in parts]
            except _BoundaryRoot:
                continue
            return parts, counts
    raise InconsistencyDetected("could not find a root-free splitting line")


def isolate_complex_roots(p: UniPoly) -> list:
    """Disjoint boxes, one around each distinct complex root of p."""
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return []
    bound = cauchy_bound(sf)
    box = None
    count = -1
    for k in range(40):
        b = bound * (1 + Fraction(k + 1, 7))
        candidate = Box(Interval(-b, b), Interval(-b, b))
        try:
            count = count_roots_in_box(sf, candidate)
        except _BoundaryRoot:
            continue
        box = candidate
        break
    if box is None:
        raise InconsistencyDetected("no admissible bounding box found")
    if count != sf.degree:
        raise InconsistencyDetected("bounding box misses roots")
    out = []

    def work(b: Box, n: int, depth: int):
        if n == 0:
            return
        if n == 1:
            out.append(b)
            return
        if depth > _MAX_DEPTH:
            raise InconsistencyDetected("complex isolation failed to converge")
        parts, counts = _counted_split(sf, b)
        if sum(counts) != n:
            raise InconsistencyDetected("winding counts do not add up")
        for part, c in zip(parts, counts):
            work(part, c, depth + 1)

    work(box, count, 0)
    out.sort(key=lambda b: (b.re.lo, b.im.lo))
    return out


def refine_complex_root(p: UniPoly, box: Box, target: Fraction) -> Box:
    """Shrink a box known to isolate exactly one root of squarefree p."""
    current = box
    for _ in range(_MAX_DEPTH):
        if current.max_width <= target:
            return current
        parts, counts = _counted_split(p, current)
        if sum(counts) != 1:
            raise InconsistencyDetected("refinement lost the tracked root")
        current = parts[counts.index(1)]
    raise InconsistencyDetected("complex refinement failed to converge")


# ---------------------------------------------------------------------------
# extension contexts and algebraic scalars
# ---------------------------------------------------------------------------

Region = Union[Interval, Box]


class ExtensionContext:
    """One distinguished root of a monic irreducible polynomial.

    The region (interval in real mode, rectangle in complex mode) isolates
    the root among all roots of the minimal polynomial and only ever narrows.
    Contexts compare by identity: two contexts are different roots unless
    value-level comparison says otherwise.
    """

    __slots__ = ("mode", "minpoly", "_region", "_sf")

    def __init__(self, mode: FieldMode, minpoly: UniPoly, region: Region):
        if minpoly.degree < 2:
            raise DegenerateInput("extension contexts need degree at least 2")
        if minpoly.leading() != 1:
            raise DegenerateInput("minimal polynomial must be monic")
        self.mode = mode
        self.minpoly = minpoly
        self._region = region
        self._sf = minpoly  # irreducible over the base field, hence squarefree

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def region(self, target: Optional[Fraction] = None) -> Region:
        if target is not None:
            if self.mode is FieldMode.REAL:
                if self._region.width > target:
                    self._region = refine_real_root(self._sf, self._region, target)
            else:
                if self._region.max_width > target:
                    self._region = refine_complex_root(self._sf, self._region, target)
        return self._region

    def halve_region(self) -> Region:
        r = self._region
        width = r.width if self.mode is FieldMode.REAL else r.max_width
        if width > 0:
            return self.region(width / 2)
        return r

    def __repr__(self):
        return f"ExtensionContext(deg={self.degree}, region={self._region!r})"


def _xgcd_poly(a: UniPoly, b: UniPoly):
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g."""
    one = UniPoly.const(Fraction(1))
    r0, r1 = a, b
    u0, u1 = one, UniPoly.zero()
    v0, v1 = UniPoly.zero(), one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    return r0, u0, v0


class AlgebraicScalar:
    """Element of the extension field attached to an ExtensionContext.

    The representation is a residue polynomial of degree in [1, deg-1] in the
    context root; degree-0 results normalize back to base scalars before an
    AlgebraicScalar is ever built, so instances are never base-rational.
    """

    __slots__ = ("ctx", "rep", "_vmp", "_vregion")

    def __init__(self, ctx: ExtensionContext, rep: UniPoly):
        if rep.degree < 1 or rep.degree >= ctx.degree:
            raise DegenerateInput("residue degree out of range")
        self.ctx = ctx
        self.rep = rep
        self._vmp = None
        self._vregion = None

    # -- coercion helpers ---------------------------------------------------

    def _lift(self, value) -> Optional[UniPoly]:
        """Base-field values as constant residues; None if not coercible."""
        if isinstance(value, AlgebraicScalar):
            return None
        if isinstance(value, bool):
            return None
        if isinstance(value, (int, Fraction)):
            base = (
                Fraction(value)
                if self.ctx.mode is FieldMode.REAL
                else GaussianRational(Fraction(value), 0)
            )
            return UniPoly.const(base)
        if isinstance(value, GaussianRational):
            if self.ctx.mode is FieldMode.COMPLEX:
                return UniPoly.const(value)
            if value.im == 0:
                return UniPoly.const(value.re)
            return None
        return None

    def _same_ctx_rep(self, other) -> Optional[UniPoly]:
        if isinstance(other, AlgebraicScalar):
            if other.ctx is self.ctx:
                return other.rep
            raise IncompatibleExtensions(
                "arithmetic across different extension contexts is not supported"
            )
        return self._lift(other)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        rep = self._same_ctx_rep(other)
        if rep is None:
            return NotImplemented
        return make_algebraic(self.ctx, self.rep + rep)

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._same_ctx_rep(other)
        if rep is None:
            return NotImplemented
        return make_algebraic(self.ctx, self.rep - rep)

    def __rsub__(self, other):
        rep = self._same_ctx_rep(other)
        if rep is None:
            return NotImplemented
        return make_algebraic(self.ctx, rep - self.rep)

    def __neg__(self):
        return make_algebraic(self.ctx, -self.rep)

    def __mul__(self, other):
        rep = self._same_ctx_rep(other)
        if rep is None:
            return NotImplemented
        _, r = (self.rep * rep).divmod(self.ctx.minpoly)
        return make_algebraic(self.ctx, r)

    __rmul__ = __mul__

    def _inverse_rep(self) -> UniPoly:
        g, u, _ = _xgcd_poly(self.rep, self.ctx.minpoly)
        if g.degree != 0:
            raise InconsistencyDetected("non-invertible residue in a field extension")
        inv = u.scale(1 / g.coeff(0))
        _, r = inv.divmod(self.ctx.minpoly)
        return r

    def __truediv__(self, other):
        rep = self._same_ctx_rep(other)
        if rep is None:
            return NotImplemented
        if rep.is_zero():
            raise ZeroDivisionError("division by zero")
        if rep.degree == 0:
            return make_algebraic(self.ctx, self.rep.scale(1 / rep.coeff(0)))
        inv = make_algebraic(self.ctx, rep)._inverse_rep()
        _, r = (self.rep * inv).divmod(self.ctx.minpoly)
        return make_algebraic(self.ctx, r)

    def __rtruediv__(self, other):
        rep = self._same_ctx_rep(other)
        if rep is None:
            return NotImplemented
        inv = self._inverse_rep()
        _, r = (rep * inv).divmod(self.ctx.minpoly)
        return make_algebraic(self.ctx, r)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = 1
        base = self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return True  # never base-rational, in particular never zero

    # -- value-level data ---------------------------------------------------

    def value_minpoly(self) -> UniPoly:
        """Monic minimal polynomial of this value over the base field."""
        if self._vmp is not None:
            return self._vmp
        d = self.ctx.degree
        if self.rep.degree == 1 and self.rep.coeff(1) == 1 and self.rep.coeff(0) == 0:
            self._vmp = self.ctx.minpoly
            return self._vmp
        one = self.ctx.mode.one
        powers = [UniPoly.const(one)]
        for _ in range(d):
            _, r = (powers[-1] * self.rep).divmod(self.ctx.minpoly)
            powers.append(r)
        vectors = [[poly.coeff(i) for i in range(d)] for poly in powers]
        for k in range(1, d + 1):
            matrix = [[vectors[j][i] for j in range(k)] for i in range(d)]
            rhs = [vectors[k][i] for i in range(d)]
            res = solve_linear_with_rank(matrix, rhs)
            if res.consistent:
                coeffs = [-c for c in res.particular] + [one]
                if k == 1:
                    raise InconsistencyDetected("algebraic scalar collapsed to a rational")
                self._vmp = UniPoly(tuple(coeffs))
                return self._vmp
        raise InconsistencyDetected("no minimal polynomial found")

    def value_region(self, target: Optional[Fraction] = None) -> Region:
        """Region isolating this value among the roots of its minimal polynomial."""
        vmp = self.value_minpoly()
        region = self._vregion
        if region is None:
            region = self._compute_isolating_region(vmp)
            self._vregion = region
        if target is not None:
            if self.ctx.mode is FieldMode.REAL:
                while region.width > target:
                    self.ctx.halve_region()
                    enc = eval_poly_interval(self.rep, self.ctx.region())
                    better = enc.intersect(region)
                    region = better if better is not None else enc
                self._vregion = region
            else:
                while region.max_width > target:
                    self.ctx.halve_region()
                    enc = eval_poly_box(self.rep, self.ctx.region())
                    better = enc.intersect(region)
                    region = better if better is not None else enc
                self._vregion = region
        return region

    def _compute_isolating_region(self, vmp: UniPoly) -> Region:
        if self.ctx.mode is FieldMode.REAL:
            for _ in range(_MAX_DEPTH):
                enc = eval_poly_interval(self.rep, self.ctx.region())
                if (
                    vmp.eval(enc.lo) != 0
                    and vmp.eval(enc.hi) != 0
                    and count_real_roots(vmp, enc.lo, enc.hi) == 1
                ):
                    return enc
                self.ctx.halve_region()
            raise InconsistencyDetected("value region failed to isolate")
        for _ in range(_MAX_DEPTH):
            enc = eval_poly_box(self.rep, self.ctx.region())
            try:
                if count_roots_in_box(vmp, enc) == 1:
                    return enc
            except _BoundaryRoot:
                pass
            self.ctx.halve_region()
        raise InconsistencyDetected("value region failed to isolate")

    def approx(self):
        """Floating-point approximation (float in real mode, complex otherwise)."""
        region = self.value_region(Fraction(1, 2**40))
        if self.ctx.mode is FieldMode.REAL:
            return float(region.mid)
        m = region.mid
        return complex(float(m.re), float(m.im))

    def sort_key(self):
        region = self.value_region(Fraction(1, 2**40))
        if self.ctx.mode is FieldMode.REAL:
            mid_re, mid_im = region.mid, Fraction(0)
        else:
            mid = region.mid
            mid_re, mid_im = mid.re, mid.im
        blob = []
        for c in self.value_minpoly().coeffs:
            g = _as_gaussian(c)
            blob.append((g.re, g.im))
        for c in self.rep.coeffs:
            g = _as_gaussian(c)
            blob.append((g.re, g.im))
        return (mid_re, mid_im, tuple(blob))

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, AlgebraicScalar):
            if other.ctx is self.ctx:
                return self.rep == other.rep
            if other.ctx.mode is not self.ctx.mode:
                raise IncompatibleExtensions("cannot compare values across field modes")
            return self._value_equal(other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return False  # instances are never base-rational
        return NotImplemented

    def _value_equal(self, other: "AlgebraicScalar") -> bool:
        m1 = self.value_minpoly()
        m2 = other.value_minpoly()
        if m1 != m2:
            return False
        if self.ctx.mode is FieldMode.REAL:
            r1 = self.value_region()
            r2 = other.value_region()
            inter = r1.intersect(r2)
            if inter is None or inter.is_point():
                # point overlap at a non-root rational endpoint is a miss
                return inter is not None and m1.eval(inter.lo) == 0
            if m1.eval(inter.lo) == 0 or m1.eval(inter.hi) == 0:
                raise InconsistencyDetected("root at a region endpoint")
            return count_real_roots(m1, inter.lo, inter.hi) > 0
        for _ in range(_MAX_DEPTH):
            r1 = self.value_region()
            r2 = other.value_region()
            inter = r1.intersect(r2)
            if inter is None:
                return False
            try:
                return count_roots_in_box(m1, inter) > 0
            except _BoundaryRoot:
                w = min(r1.max_width, r2.max_width) / 2
                self.value_region(w)
                other.value_region(w)
        raise InconsistencyDetected("value comparison failed to converge")

    def __hash__(self):
        vmp = self.value_minpoly()
        blob = tuple(_as_gaussian(c) for c in vmp.coeffs)
        return hash((self.ctx.mode, blob))

    def __repr__(self):
        return f"AlgebraicScalar({list(self.rep.coeffs)!r} at root of {list(self.ctx.minpoly.coeffs)!r})"


def make_algebraic(ctx: ExtensionContext, rep: UniPoly):
    """Residue polynomial to scalar, collapsing constants to base scalars."""
    if rep.degree >= ctx.degree:
        _, rep = rep.divmod(ctx.minpoly)
    if rep.is_zero():
        return ctx.mode.zero
    if rep.degree == 0:
        return rep.coeff(0)
    return AlgebraicScalar(ctx, rep)


def context_roots_of_irreducible(minpoly: UniPoly, mode: FieldMode) -> tuple:
    """All base-field-visible roots of a monic irreducible polynomial.

    Real mode returns the real roots only; complex mode returns every root.
    Each root gets its own context sharing the same minimal polynomial.
    """
    monic = minpoly.monic()
    x = UniPoly((mode.zero, mode.one))
    roots = []
    if mode is FieldMode.REAL:
        for iv in isolate_real_roots(monic):
            ctx = ExtensionContext(mode, monic, iv)
            roots.append(AlgebraicScalar(ctx, x))
    else:
        for box in isolate_complex_roots(monic):
            ctx = ExtensionContext(mode, monic, box)
            roots.append(AlgebraicScalar(ctx, x))
    return tuple(roots)


# ---------------------------------------------------------------------------
# quadratic equations over the base field
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticRoots:
    """Solutions of a (possibly degenerate) quadratic over the base field.

    all_values means every scalar satisfies the equation (all coefficients
    zero); otherwise roots lists the distinct solutions in the field closure
    visible to the mode (real roots in real mode, complex in complex mode).
    """

    all_values: bool
    roots: tuple


def solve_quadratic(a, b, c, mode: FieldMode) -> QuadraticRoots:
    """Distinct solutions of a x^2 + b x + c = 0 over the mode's field."""
    from .scalar import as_base_scalar, rational_sqrt, gaussian_sqrt

    a = as_base_scalar(a, mode)
    b = as_base_scalar(b, mode)
    c = as_base_scalar(c, mode)
    zero, one = mode.zero, mode.one
    if a == zero:
        if b == zero:
            if c == zero:
                return QuadraticRoots(True, ())
            return QuadraticRoots(False, ())
        return QuadraticRoots(False, (-c / b,))
    p = b / a
    q = c / a
    disc = p * p - 4 * q
    if disc == zero:
        return QuadraticRoots(False, (-p / 2,))
    if mode is FieldMode.REAL:
        s = rational_sqrt(disc)
        if s is not None:
            r1 = (-p - s) / 2
            r2 = (-p + s) / 2
            return QuadraticRoots(False, (r1, r2))
        if disc < 0:
            return QuadraticRoots(False, ())
    else:
        s = gaussian_sqrt(disc)
        if s is not None:
            r1 = (-p - s) / 2
            r2 = (-p + s) / 2
            return QuadraticRoots(False, tuple(sorted({r1, r2}, key=lambda z: (z.re, z.im))))
    minpoly = UniPoly((q, p, one))
    return QuadraticRoots(False, context_roots_of_irreducible(minpoly, mode))
