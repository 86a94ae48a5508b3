"""Factorization over the rationals and the Gaussian rationals.

Degrees one and two are handled by closed forms; higher degrees delegate to
sympy's exact factorization in the matching domain (QQ or QQ_I) and convert
the factors back to UniPoly/BiPoly form. Root extraction returns the roots
visible to the field mode: linear factors give base scalars, irreducible
factors of higher degree give algebraic scalars with isolating regions.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .algnum import context_roots_of_irreducible
from .errors import DegenerateInput, DegreeTooLarge
from .poly import BiPoly, UniPoly
from .scalar import FieldMode, GaussianRational, scalar_sort_key

MAX_FACTOR_DEGREE = 8

_X, _Y = sympy.symbols("x y")


def _domain(mode: FieldMode) -> str:
    return "QQ" if mode is FieldMode.REAL else "QQ_I"


def _coeff_to_sympy(c):
    if isinstance(c, GaussianRational):
        return sympy.Rational(c.re) + sympy.Rational(c.im) * sympy.I
    return sympy.Rational(Fraction(c))


def _coeff_from_sympy(expr, mode: FieldMode):
    re = sympy.re(expr)
    im = sympy.im(expr)
    re_f = Fraction(int(re.p), int(re.q))
    im_f = Fraction(int(im.p), int(im.q))
    if mode is FieldMode.REAL:
        if im_f != 0:
            raise DegenerateInput("imaginary coefficient in real mode")
        return re_f
    return GaussianRational(re_f, im_f)


def _uni_to_sympy(p: UniPoly, mode: FieldMode):
    expr = sympy.Integer(0)
    for k, c in enumerate(p.coeffs):
        expr += _coeff_to_sympy(c) * _X**k
    return sympy.Poly(expr, _X, domain=_domain(mode))


def _uni_from_sympy(poly, mode: FieldMode) -> UniPoly:
    coeffs = list(reversed(poly.all_coeffs()))
    return UniPoly(tuple(_coeff_from_sympy(c, mode) for c in coeffs))


def factor_univariate(p: UniPoly, mode: FieldMode) -> tuple:
    """Monic irreducible factors with multiplicities over the mode's base field.

    The scalar content is dropped. Degrees above MAX_FACTOR_DEGREE are
    rejected rather than attempted.
    """
    if p.is_zero():
        raise DegenerateInput("cannot factor the zero polynomial")
    if p.degree > MAX_FACTOR_DEGREE:
        raise DegreeTooLarge(f"degree {p.degree} exceeds the factoring limit")
    if p.degree == 0:
        return ()
    if p.degree == 1:
        return ((p.monic(), 1),)
    if p.degree == 2:
        return _factor_quadratic(p, mode)
    _, factors = _uni_to_sympy(p, mode).factor_list()
    out = []
    for f, mult in factors:
        out.append((_uni_from_sympy(f, mode).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, _poly_sort_blob(fm[0])))
    return tuple(out)


def _poly_sort_blob(p: UniPoly):
    blob = []
    for c in p.coeffs:
        if isinstance(c, GaussianRational):
            blob.append((c.re, c.im))
        else:
            blob.append((Fraction(c), Fraction(0)))
    return tuple(blob)


def _factor_quadratic(p: UniPoly, mode: FieldMode) -> tuple:
    from .scalar import rational_sqrt, gaussian_sqrt

    monic = p.monic()
    b = monic.coeff(1)
    c = monic.coeff(0)
    disc = b * b - 4 * c
    if disc == 0:
        root = -b / 2
        return ((UniPoly((-root, mode.one)), 2),)
    s = rational_sqrt(disc) if mode is FieldMode.REAL else gaussian_sqrt(disc)
    if s is None:
        return ((monic, 1),)
    r1 = (-b - s) / 2
    r2 = (-b + s) / 2
    f1 = UniPoly((-r1, mode.one))
    f2 = UniPoly((-r2, mode.one))
    ordered = sorted([f1, f2], key=_poly_sort_blob)
    return ((ordered[0], 1), (ordered[1], 1))


def roots_in_mode(p: UniPoly, mode: FieldMode) -> tuple:
    """Distinct roots of p lying in the mode's field closure, sorted.

    Real mode returns rational and real-algebraic roots; complex mode returns
    Gaussian-rational and complex-algebraic roots. Multiplicities are ignored.
    """
    roots = []
    for factor, _ in factor_univariate(p, mode):
        if factor.degree == 1:
            roots.append(-factor.coeff(0))
        else:
            roots.extend(context_roots_of_irreducible(factor, mode))
    return tuple(sorted(roots, key=scalar_sort_key))


# ---------------------------------------------------------------------------
# bivariate bridges
# ---------------------------------------------------------------------------


def _bi_to_sympy(p: BiPoly, mode: FieldMode):
    expr = sympy.Integer(0)
    for (dx, dy), c in p.terms:
        expr += _coeff_to_sympy(c) * _X**dx * _Y**dy
    return sympy.Poly(expr, _X, _Y, domain=_domain(mode))


def _bi_from_sympy(poly, mode: FieldMode) -> BiPoly:
    d = {}
    for (dx, dy), c in poly.terms():
        d[(int(dx), int(dy))] = _coeff_from_sympy(c, mode)
    return BiPoly.from_dict(d)


def bipoly_gcd(p: BiPoly, q: BiPoly, mode: FieldMode) -> BiPoly:
    """Greatest common divisor of two bivariate polynomials over the base field."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    g = _bi_to_sympy(p, mode).gcd(_bi_to_sympy(q, mode))
    return _bi_from_sympy(g, mode)


def bipoly_exact_div(p: BiPoly, q: BiPoly, mode: FieldMode) -> BiPoly:
    """Quotient p/q for an exact bivariate division."""
    if q.is_zero():
        raise DegenerateInput("division by the zero polynomial")
    quo, rem = _bi_to_sympy(p, mode).div(_bi_to_sympy(q, mode))
    if not rem.is_zero:
        raise DegenerateInput("inexact bivariate division")
    return _bi_from_sympy(quo, mode)


def bipoly_factor_list(p: BiPoly, mode: FieldMode) -> tuple:
    """Irreducible bivariate factors with multiplicities (content dropped)."""
    if p.is_zero():
        raise DegenerateInput("cannot factor the zero polynomial")
    if p.total_degree == 0:
        return ()
    _, factors = _bi_to_sympy(p, mode).factor_list()
    out = []
    for f, mult in factors:
        out.append((_bi_from_sympy(f, mode), int(mult)))
    out.sort(key=lambda fm: (fm[0].total_degree, tuple(sorted(k for k, _ in fm[0].terms))))
    return tuple(out)
