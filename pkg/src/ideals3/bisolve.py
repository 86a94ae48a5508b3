"""Common zeros of systems of bivariate polynomials, computed exactly.

Given finitely many polynomials in two variables over the rationals or the
Gaussian rationals, this module splits their common zero set into isolated
points and one-dimensional components. Real mode reports real solutions only;
complex mode works over the algebraic closure. Isolated points come back with
exact coordinates: base scalars where possible, algebraic scalars (carrying
minimal polynomial and isolating region) otherwise.

Supported solution structure: the second coordinate of every isolated point
must lie in the field generated by the first (or conversely). Systems whose
points need a tower of extensions raise InconsistencyDetected; the algebra
systems this package feeds in never do.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .algnum import AlgebraicScalar, make_algebraic
from .errors import DegreeTooLarge, InconsistencyDetected
from .factor import bipoly_exact_div, bipoly_factor_list, bipoly_gcd, roots_in_mode
from .poly import BiPoly, UniPoly, gcd_many, resultant_y
from .scalar import (
    FieldMode,
    gaussian_sqrt,
    is_base_scalar,
    rational_sqrt,
    scalar_sort_key,
)

_MAX_SPLIT_DEPTH = 16


class CurveKind(Enum):
    FIXED_X = "fixed_x"
    FIXED_Y = "fixed_y"
    GRAPH_X = "graph_x"
    GRAPH_Y = "graph_y"
    GENERIC = "generic"


@dataclass(frozen=True)
class CurveComponent:
    """One-dimensional component of a common zero set.

    kind FIXED_X: the vertical line x = value (FIXED_Y symmetric).
    kind GRAPH_X: the solutions of coeff(y)*x + offset(y) = 0, with coeff and
    offset coprime, so x is a rational function of y (GRAPH_Y symmetric).
    kind GENERIC: the zero set of an irreducible poly of higher degree.
    poly is always the irreducible defining polynomial over the base field.
    """

    kind: CurveKind
    poly: BiPoly
    value: object = None
    coeff: Optional[UniPoly] = None
    offset: Optional[UniPoly] = None

    def contains(self, x, y) -> bool:
        if self.kind is CurveKind.FIXED_X:
            return x == self.value
        if self.kind is CurveKind.FIXED_Y:
            return y == self.value
        return self.poly.eval(x, y) == 0


@dataclass(frozen=True)
class SolutionSet:
    """Zero set split into isolated points and one-dimensional components."""

    points: tuple
    curves: tuple
    whole_plane: bool = False

    @property
    def is_finite(self) -> bool:
        return not self.whole_plane and not self.curves


def _point_sort_key(pt):
    return (scalar_sort_key(pt[0]), scalar_sort_key(pt[1]))


def _bipoly_sort_blob(p: BiPoly):
    return tuple((degs, scalar_sort_key(c)) for degs, c in p.terms)


def _curve_sort_key(c: CurveComponent):
    vkey = scalar_sort_key(c.value) if c.value is not None else ()
    return (c.kind.value, _bipoly_sort_blob(c.poly), vkey)


def _dedupe_points(points):
    out = []
    for pt in points:
        if not any(pt[0] == q[0] and pt[1] == q[1] for q in out):
            out.append(pt)
    return out


def _real_sign(value) -> int:
    """Exact sign of a real-mode scalar."""
    if is_base_scalar(value):
        f = Fraction(value) if not isinstance(value, Fraction) else value
        return (f > 0) - (f < 0)
    target = Fraction(1, 16)
    while True:
        iv = value.value_region(target)
        if iv.lo > 0:
            return 1
        if iv.hi < 0:
            return -1
        target /= 2


def _sqrt_in_base(value, mode: FieldMode):
    if mode is FieldMode.REAL:
        return rational_sqrt(Fraction(value))
    return gaussian_sqrt(value)


def _sqrt_in_field(delta, mode: FieldMode):
    """Square root of delta within its own field, or None.

    Base scalars use the closed-form base-field tests. Algebraic scalars are
    supported for quadratic contexts only: with minimal polynomial T^2+pT+q,
    a root u+vT of z^2 = d0+d1*T forces v^2 to satisfy an explicit quadratic
    over the base field, so existence reduces to base-field square tests.
    """
    if is_base_scalar(delta):
        return _sqrt_in_base(delta, mode)
    ctx = delta.ctx
    if ctx.degree != 2:
        return None
    m = ctx.minpoly
    p, q = m.coeff(1), m.coeff(0)
    d0, d1 = delta.rep.coeff(0), delta.rep.coeff(1)
    disc_m = p * p - 4 * q
    candidates = []
    if d1 == 0:
        r = _sqrt_in_base(d0, mode)
        if r is not None:
            return r
        w = 4 * d0 / disc_m
        v = _sqrt_in_base(w, mode)
        if v is not None and v != 0:
            candidates.append((p * v / 2, v))
    else:
        a2, a1, a0 = disc_m, 2 * p * d1 - 4 * d0, d1 * d1
        sig = _sqrt_in_base(a1 * a1 - 4 * a2 * a0, mode)
        if sig is not None:
            for w in ((-a1 + sig) / (2 * a2), (-a1 - sig) / (2 * a2)):
                v = _sqrt_in_base(w, mode)
                if v is not None and v != 0:
                    candidates.append(((d1 + p * v * v) / (2 * v), v))
    for u, v in candidates:
        z = make_algebraic(ctx, UniPoly((u, v)))
        if z * z == delta:
            return z
    return None


# ---------------------------------------------------------------------------
# one-dimensional components
# ---------------------------------------------------------------------------


def _real_conic_class(fac: BiPoly):
    """Classify the real zero set of an irreducible non-graph conic.

    Returns ("curve", None) for infinitely many real points, ("point", (x, y))
    when the only real point is the common zero of both partial derivatives,
    and ("empty", None) when there are no real points.
    """
    A, B, C = fac.coeff(2, 0), fac.coeff(1, 1), fac.coeff(0, 2)
    D, E, F0 = fac.coeff(1, 0), fac.coeff(0, 1), fac.coeff(0, 0)
    delta = B * B - 4 * A * C
    det4 = 4 * A * C * F0 + B * D * E - A * E * E - C * D * D - F0 * B * B
    if delta < 0:
        if det4 == 0:
            den = -delta
            x0 = (B * E - 2 * C * D) / den
            y0 = (B * D - 2 * A * E) / den
            if fac.eval(x0, y0) != 0:
                raise InconsistencyDetected("conic gradient point misses the curve")
            return ("point", (x0, y0))
        if (A + C) * det4 < 0:
            return ("curve", None)
        return ("empty", None)
    if delta > 0:
        return ("curve", None)
    if A != 0:
        if 2 * A * E - B * D != 0:
            return ("curve", None)
        if A * (4 * A * F0 - D * D) > 0:
            return ("empty", None)
        return ("curve", None)
    # delta = 0 with A = 0 forces B = 0; a non-graph factor then has no x term
    raise InconsistencyDetected("conic classifier reached an impossible shape")


def _components_of(g: BiPoly, mode: FieldMode):
    """Split a nonconstant common factor into components and pointlike pieces."""
    curves = []
    extra_points = []
    for fac, _mult in bipoly_factor_list(g, mode):
        dx, dy = fac.deg_x, fac.deg_y
        if dy == 0:
            for r in roots_in_mode(fac.substitute_y(mode.zero), mode):
                curves.append(CurveComponent(CurveKind.FIXED_X, fac, value=r))
        elif dx == 0:
            for r in roots_in_mode(fac.substitute_x(mode.zero), mode):
                curves.append(CurveComponent(CurveKind.FIXED_Y, fac, value=r))
        elif dx == 1:
            cols = fac.coeffs_in_x()
            curves.append(
                CurveComponent(CurveKind.GRAPH_X, fac, coeff=cols[1], offset=cols[0])
            )
        elif dy == 1:
            cols = fac.coeffs_in_y()
            curves.append(
                CurveComponent(CurveKind.GRAPH_Y, fac, coeff=cols[1], offset=cols[0])
            )
        elif mode is FieldMode.COMPLEX:
            curves.append(CurveComponent(CurveKind.GENERIC, fac))
        elif fac.total_degree == 2:
            verdict, pt = _real_conic_class(fac)
            if verdict == "curve":
                curves.append(CurveComponent(CurveKind.GENERIC, fac))
            elif verdict == "point":
                extra_points.append(pt)
        else:
            raise DegreeTooLarge(
                "cannot decide real-point finiteness for an irreducible factor "
                f"of degree {fac.total_degree}"
            )
    return curves, extra_points


# ---------------------------------------------------------------------------
# finite part
# ---------------------------------------------------------------------------


def _merge_pair(x0, y0, mode: FieldMode):
    """Express (x0, y0) with y0 rewritten inside the field of x0.

    Trivial when either coordinate is a base scalar. When both are algebraic
    over quadratic contexts, y0 = u + v*x0 is found by matching minimal
    polynomials: v^2 must equal disc(y)/disc(x), a base-field square test.
    Returns None when y0 provably falls outside the field of x0.
    """
    if is_base_scalar(x0) or is_base_scalar(y0):
        return (x0, y0)
    if x0.ctx is y0.ctx:
        return (x0, y0)
    if x0.ctx.degree != 2 or y0.ctx.degree != 2:
        return None
    mx = x0.value_minpoly()
    my = y0.value_minpoly()
    if mx.degree != 2 or my.degree != 2:
        return None
    p, q = mx.coeff(1), mx.coeff(0)
    pp, qq = my.coeff(1), my.coeff(0)
    ratio = (pp * pp - 4 * qq) / (p * p - 4 * q)
    v = _sqrt_in_base(ratio, mode)
    if v is None or v == 0:
        return None
    for vs in (v, -v):
        u = (p * vs - pp) / 2
        cand = u + vs * x0
        if cand == y0:
            return (x0, cand)
    raise InconsistencyDetected("quadratic merge produced no matching embedding")


def _fiber_roots(hy: UniPoly, x0, mode: FieldMode):
    """Roots of the fiber polynomial hy over the field generated by x0."""
    if all(is_base_scalar(c) for c in hy.coeffs):
        base_poly = UniPoly(tuple(hy.coeffs))
        roots = []
        for y0 in roots_in_mode(base_poly, mode):
            pair = _merge_pair(x0, y0, mode)
            if pair is None:
                raise InconsistencyDetected(
                    "fiber root falls outside the field of the first coordinate"
                )
            roots.append(pair[1])
        return roots
    if hy.degree == 1:
        return [-hy.coeff(0) / hy.coeff(1)]
    if hy.degree == 2 and isinstance(x0, AlgebraicScalar) and x0.ctx.degree == 2:
        a, b, c = hy.coeff(2), hy.coeff(1), hy.coeff(0)
        delta = b * b - 4 * a * c
        if delta == 0:
            return [-b / (2 * a)]
        if mode is FieldMode.REAL and _real_sign(delta) < 0:
            return []
        s = _sqrt_in_field(delta, mode)
        if s is None:
            raise InconsistencyDetected(
                "fiber equation needs a tower of field extensions"
            )
        return [(-b + s) / (2 * a), (-b - s) / (2 * a)]
    raise InconsistencyDetected("fiber equation needs a tower of field extensions")


def _verify_points(candidates, polys):
    for x0, y0 in candidates:
        for p in polys:
            if p.eval(x0, y0) != 0:
                raise InconsistencyDetected("candidate point fails verification")
    return candidates


def _finite_set(points):
    pts = sorted(_dedupe_points(points), key=_point_sort_key)
    return SolutionSet(tuple(pts), (), False)


def _swap_solution(sol: SolutionSet) -> SolutionSet:
    if sol.curves or sol.whole_plane:
        raise InconsistencyDetected("axis swap expected a finite solution set")
    return SolutionSet(tuple((y, x) for x, y in sol.points), (), False)


def _split_and_union(live, splitter, mode, depth):
    """Fallback when every pairwise resultant vanishes.

    Every pair of mixed polynomials then shares a factor of positive y-degree.
    A splitter with a single irreducible factor would therefore divide every
    mixed polynomial, contradicting the trivial gcd; so the splitter factors
    properly, and each factor spawns a strictly smaller subsystem.
    """
    factors = bipoly_factor_list(splitter, mode)
    if len(factors) == 1:
        raise InconsistencyDetected(
            "vanishing resultants with an irreducible polynomial contradict "
            "the trivial gcd"
        )
    rest = [p for p in live if p is not splitter]
    collected = []
    for fac, _mult in factors:
        sub = solve_bivariate_system([fac] + rest, mode, _depth=depth + 1)
        if not sub.is_finite:
            raise InconsistencyDetected("split subsystem is not finite")
        collected.extend(sub.points)
    return _finite_set(collected)


def _solve_finite(live, mode: FieldMode, depth: int) -> SolutionSet:
    """Common zeros of a system with trivial gcd (a finite set)."""
    pure_x, pure_y, mixed = [], [], []
    for p in live:
        if p.deg_y == 0:
            pure_x.append(p.substitute_y(mode.zero))
        elif p.deg_x == 0:
            pure_y.append(p.substitute_x(mode.zero))
        else:
            mixed.append(p)

    if not mixed:
        if not pure_x or not pure_y:
            return SolutionSet((), (), False)
        gx, gy = gcd_many(pure_x), gcd_many(pure_y)
        if gx.degree <= 0 or gy.degree <= 0:
            return SolutionSet((), (), False)
        points = []
        for x0 in roots_in_mode(gx, mode):
            for y0 in roots_in_mode(gy, mode):
                pair = _merge_pair(x0, y0, mode)
                if pair is None:
                    raise InconsistencyDetected(
                        "product system needs a tower of field extensions"
                    )
                points.append(pair)
        return _finite_set(_verify_points(points, live))

    if len(mixed) == 1 and not pure_x:
        swapped = [p.swap_vars() for p in live]
        return _swap_solution(solve_bivariate_system(swapped, mode, _depth=depth + 1))

    gx_parts = list(pure_x)
    if len(mixed) >= 2:
        resultants = []
        for i in range(len(mixed)):
            for j in range(i + 1, len(mixed)):
                r = resultant_y(mixed[i], mixed[j])
                if not r.is_zero():
                    resultants.append(r)
        if not resultants and not pure_x:
            g = mixed[0]
            for m in mixed[1:]:
                g = bipoly_gcd(g, m, mode)
            if g.total_degree >= 1:
                # The mixed equations share the factor g while the pure ones
                # keep the overall gcd trivial: split the zero set along g.
                pure = [p for p in live if p.deg_y == 0 or p.deg_x == 0]
                reduced = [bipoly_exact_div(m, g, mode) for m in mixed]
                sub_a = solve_bivariate_system([g] + pure, mode, _depth=depth + 1)
                sub_b = solve_bivariate_system(reduced + pure, mode, _depth=depth + 1)
                if not (sub_a.is_finite and sub_b.is_finite):
                    raise InconsistencyDetected(
                        "gcd split produced a curve despite the trivial gcd"
                    )
                points = list(sub_a.points) + list(sub_b.points)
                return _finite_set(_verify_points(points, live))
            return _split_and_union(live, mixed[0], mode, depth)
        gx_parts.extend(resultants)
    gx = gcd_many(gx_parts)
    if gx.is_zero():
        raise InconsistencyDetected("x-candidate gcd collapsed to zero")
    if gx.degree == 0:
        return SolutionSet((), (), False)

    candidates = []
    for x0 in roots_in_mode(gx, mode):
        fibers = [m.substitute_x(x0) for m in mixed] + [
            UniPoly(tuple(q.coeffs)) for q in pure_y
        ]
        hy = gcd_many(fibers)
        if hy.is_zero():
            raise InconsistencyDetected("an entire fiber vanished despite trivial gcd")
        if hy.degree == 0:
            continue
        for y0 in _fiber_roots(hy, x0, mode):
            candidates.append((x0, y0))
    return _finite_set(_verify_points(candidates, live))


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def solve_bivariate_system(polys, mode: FieldMode, _depth: int = 0) -> SolutionSet:
    """Decompose the common zero set of bivariate polynomials.

    Returns isolated points (exact coordinates, deduplicated, sorted) plus the
    one-dimensional components, or whole_plane when every polynomial is zero.
    Points lying on a listed component are not repeated in the point list.
    """
    if _depth > _MAX_SPLIT_DEPTH:
        raise InconsistencyDetected("factor splitting failed to terminate")
    live = [p for p in polys if not p.is_zero()]
    if not live:
        return SolutionSet((), (), True)
    if any(p.total_degree == 0 for p in live):
        return SolutionSet((), (), False)

    g = live[0]
    for p in live[1:]:
        g = bipoly_gcd(g, p, mode)
    if g.total_degree > 0:
        curves, extra_points = _components_of(g, mode)
        cofactors = [bipoly_exact_div(p, g, mode) for p in live]
        sub = solve_bivariate_system(cofactors, mode, _depth=_depth + 1)
        if sub.whole_plane or sub.curves:
            raise InconsistencyDetected("cofactor system kept a common component")
        points = _verify_points(list(extra_points) + list(sub.points), live)
        isolated = [
            pt for pt in points if not any(c.contains(pt[0], pt[1]) for c in curves)
        ]
        return SolutionSet(
            tuple(sorted(_dedupe_points(isolated), key=_point_sort_key)),
            tuple(sorted(curves, key=_curve_sort_key)),
            False,
        )
    return _solve_finite(live, mode, _depth)
