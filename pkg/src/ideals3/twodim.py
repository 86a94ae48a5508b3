"""Enumeration of two-dimensional two-sided ideals of a 3-dimensional algebra.

Every plane in the 3-space falls into exactly one of four coordinate charts
(subspace.PlaneKind).  Each chart reduces the ideal condition to a polynomial
system in at most two unknowns:

  type I    a single yes/no membership test (eight structure constants vanish),
  type II   twelve univariate polynomials in the chart coordinate x,
  type III  the type II system of a relabeled basis,
  type IV   twelve bivariate polynomials in (x, y) with y != 0.

For type IV the decision procedure works on the commutative part of the
product.  The six distinct equations of the symmetrized system are linear in
the monomials (x^2 y, x y, x, y, x y^2, y^2), giving a 6x6 linear system whose
rank drives the case split: full rank pins down at most one candidate plane,
rank defects produce either finitely many planes or a parametric family.
Non-commutative input is handled by solving the symmetrized system first and
then cutting the result down with the full twelve-equation system.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .algebra import StructureTensor
from .bisolve import CurveComponent, CurveKind, SolutionSet, solve_bivariate_system
from .errors import BoundViolation, InconsistencyDetected, InvalidParameters
from .factor import roots_in_mode
from .poly import BiPoly, UniPoly, gcd_many, matrix_det, matrix_rank
from .scalar import FieldMode, scalar_sort_key
from .subspace import PlaneDescriptor, PlaneKind, is_ideal_plane

__all__ = [
    "TypeIIEquations",
    "KDiagnostic",
    "ScalarSolutionSet",
    "TypeIVEquations",
    "TSystem",
    "PlaneFamilyKind",
    "PlaneFamily",
    "PlaneSolutionSet",
    "TwoDimEnumeration",
    "type_ii_equations",
    "solve_type_II",
    "solve_type_III",
    "type_iv_equations",
    "t_system",
    "solve_type_IV",
    "has_type_I",
    "enumerate_twodim",
]

# Relabeling that turns the type III chart of a tensor into the type II chart
# of the relabeled tensor: basis vector e_i is renamed f_{_TYPE_III_SIGMA[i]}.
_TYPE_III_SIGMA = (2, 0, 1)


def _getter(tensor: StructureTensor):
    """1-based accessor for structure constants, w(i, j, k) = omega_{ijk}."""

    def w(i: int, j: int, k: int):
        return tensor.omega[i - 1][j - 1][k - 1]

    return w


# ---------------------------------------------------------------------------
# Type II: planes spanned by x e1 + e2 and e3.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TypeIIEquations:
    """The twelve univariate conditions for Lin{x e1 + e2, e3} to be an ideal.

    For each generator index i the plane absorbs e_i products exactly when
    two linear and two quadratic polynomials in x all vanish.  polys lists
    them as (L1_i, L2_i, Q1_i, Q2_i) for i = 1, 2, 3.
    """

    polys: tuple


def type_ii_equations(tensor: StructureTensor) -> TypeIIEquations:
    w = _getter(tensor)
    polys = []
    for i in (1, 2, 3):
        polys.append(UniPoly((w(3, i, 1), -w(3, i, 2))))
        polys.append(UniPoly((w(i, 3, 1), -w(i, 3, 2))))
        polys.append(UniPoly((-w(2, i, 1), w(2, i, 2) - w(1, i, 1), w(1, i, 2))))
        polys.append(UniPoly((-w(i, 2, 1), w(i, 2, 2) - w(i, 1, 1), w(i, 1, 2))))
    return TypeIIEquations(tuple(polys))


@dataclass(frozen=True)
class ScalarSolutionSet:
    """Solutions of a univariate system: everything, nothing, or a few roots."""

    all_scalars: bool = False
    roots: tuple = ()

    @property
    def is_finite(self) -> bool:
        return not self.all_scalars

    def count(self) -> Optional[int]:
        return None if self.all_scalars else len(self.roots)


@dataclass(frozen=True)
class KDiagnostic:
    """Structural certificate for the type II solution count.

    verdict "K1": products only ever hit the e3 axis, every x works.
    verdict "K2": one essential quadratic with nonzero discriminant, two roots.
    verdict "K3": a single forced root x0, produced by the named case.
    verdict None: no certificate; the solver count stands on its own.
    """

    verdict: Optional[str]
    i0: Optional[int] = None
    discriminant: object = None
    case_tag: Optional[str] = None
    x0: object = None


def _k1_holds(tensor: StructureTensor) -> bool:
    # All products lie on the e3 axis, so every type II plane absorbs them.
    return all(
        tensor.omega[i][j][0] == 0 and tensor.omega[i][j][1] == 0
        for i in range(3)
        for j in range(3)
    )


def _k_linear_part_vanishes(w) -> bool:
    return all(
        w(3, i, 1) == 0 and w(3, i, 2) == 0 and w(i, 3, 1) == 0 and w(i, 3, 2) == 0
        for i in (1, 2, 3)
    )


def _k_off_index_balanced(w, i0: int) -> bool:
    for i in (1, 2, 3):
        if i == i0:
            continue
        if not (
            w(1, i, 2) == 0
            and w(2, i, 1) == 0
            and w(i, 1, 2) == 0
            and w(i, 2, 1) == 0
            and w(2, i, 2) == w(1, i, 1)
            and w(i, 2, 2) == w(i, 1, 1)
        ):
            return False
    return True


def _disc_left(w, i0: int):
    # Discriminant of x^2 w(1,i0,2) + x (w(2,i0,2) - w(1,i0,1)) - w(2,i0,1).
    b = w(2, i0, 2) - w(1, i0, 1)
    return b * b + 4 * w(1, i0, 2) * w(2, i0, 1)


def _disc_right(w, i0: int):
    b = w(i0, 2, 2) - w(i0, 1, 1)
    return b * b + 4 * w(i0, 1, 2) * w(i0, 2, 1)


def _disc_splits(value, mode: FieldMode) -> bool:
    """True when a nonzero discriminant yields two roots in the working field."""
    if mode is FieldMode.REAL:
        return value > 0
    return value != 0


def _k2_diagnostic(tensor: StructureTensor) -> Optional[KDiagnostic]:
    w = _getter(tensor)
    if not _k_linear_part_vanishes(w):
        return None
    for i0 in (1, 2):
        if not _k_off_index_balanced(w, i0):
            continue
        if w(1, i0, 2) != 0 and _disc_splits(_disc_left(w, i0), tensor.mode):
            return KDiagnostic("K2", i0=i0, discriminant=_disc_left(w, i0))
        if w(i0, 1, 2) != 0 and _disc_splits(_disc_right(w, i0), tensor.mode):
            return KDiagnostic("K2", i0=i0, discriminant=_disc_right(w, i0))
    return None


def _k3_candidates(tensor: StructureTensor):
    """Forced-root candidates (case_tag, i0, x0) in scan order."""
    w = _getter(tensor)
    for i0 in (1, 2, 3):
        if w(3, i0, 2) != 0:
            yield "L1", i0, w(3, i0, 1) / w(3, i0, 2)
        if w(i0, 3, 2) != 0:
            yield "L2", i0, w(i0, 3, 1) / w(i0, 3, 2)
        if w(1, i0, 2) != 0 and _disc_left(w, i0) == 0:
            yield "Q1-double", i0, -(w(2, i0, 2) - w(1, i0, 1)) / (2 * w(1, i0, 2))
        if w(i0, 1, 2) != 0 and _disc_right(w, i0) == 0:
            yield "Q2-double", i0, -(w(i0, 2, 2) - w(i0, 1, 1)) / (2 * w(i0, 1, 2))
        if w(1, i0, 2) == 0 and w(2, i0, 2) != w(1, i0, 1):
            yield "Q1-linear", i0, w(2, i0, 1) / (w(2, i0, 2) - w(1, i0, 1))
        if w(i0, 1, 2) == 0 and w(i0, 2, 2) != w(i0, 1, 1):
            yield "Q2-linear", i0, w(i0, 2, 1) / (w(i0, 2, 2) - w(i0, 1, 1))


def _k3_diagnostic(tensor: StructureTensor, polys) -> Optional[KDiagnostic]:
    for case_tag, i0, x0 in _k3_candidates(tensor):
        if all(p.eval(x0) == 0 for p in polys):
            return KDiagnostic("K3", i0=i0, case_tag=case_tag, x0=x0)
    return None


def k_diagnostic(tensor: StructureTensor) -> KDiagnostic:
    """Certificate for the type II count, tried in order K1, K2, K3."""
    if _k1_holds(tensor):
        return KDiagnostic("K1")
    diag = _k2_diagnostic(tensor)
    if diag is not None:
        return diag
    diag = _k3_diagnostic(tensor, type_ii_equations(tensor).polys)
    if diag is not None:
        return diag
    return KDiagnostic(None)


def _check_k_against_count(diag: KDiagnostic, solutions: ScalarSolutionSet) -> None:
    if diag.verdict == "K1" and not solutions.all_scalars:
        raise InconsistencyDetected(
            "products lie on the e3 axis yet some type II plane fails"
        )
    if diag.verdict == "K2" and solutions.count() != 2:
        raise InconsistencyDetected(
            "split quadratic certificate disagrees with the solved root count"
        )
    if diag.verdict == "K3":
        if solutions.count() != 1 or solutions.roots[0] != diag.x0:
            raise InconsistencyDetected(
                "forced-root certificate disagrees with the solved root"
            )


def solve_type_II(tensor: StructureTensor):
    """All x with Lin{x e1 + e2, e3} a two-sided ideal, plus a certificate.

    Returns (ScalarSolutionSet, KDiagnostic).  The twelve conditions share
    their roots, so the monic gcd of the nonzero ones carries the full
    solution set: a constant gcd means no solutions, a zero system means all
    of them, and otherwise the gcd has degree at most two.
    """
    polys = type_ii_equations(tensor).polys
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        solutions = ScalarSolutionSet(all_scalars=True)
    else:
        g = gcd_many(nonzero)
        if g.degree == 0:
            solutions = ScalarSolutionSet(roots=())
        else:
            solutions = ScalarSolutionSet(roots=roots_in_mode(g, tensor.mode))
    diag = k_diagnostic(tensor)
    _check_k_against_count(diag, solutions)
    return solutions, diag


def solve_type_III(tensor: StructureTensor) -> ScalarSolutionSet:
    """All x with Lin{x e2 + e3, e1} a two-sided ideal.

    Renaming (e1, e2, e3) to (f3, f1, f2) carries this chart onto the type II
    chart with the same coordinate x, so the type II solver does the work.
    """
    relabeled = tensor.permute_basis(_TYPE_III_SIGMA)
    solutions, _ = solve_type_II(relabeled)
    return solutions


# ---------------------------------------------------------------------------
# Type IV: planes spanned by x e1 + e2 and e1 + y e3 with y != 0.
# ---------------------------------------------------------------------------

# Monomial order shared by the coefficient matrix of the bivariate system.
_M_MONOMIALS = ((2, 1), (1, 2), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0))


@dataclass(frozen=True)
class TypeIVEquations:
    """The twelve bivariate conditions for Lin{x e1 + e2, e1 + y e3}.

    polys lists, for i = 1, 2, 3, the absorption conditions (A_i, B_i, C_i,
    D_i) for left and right products against each generator.  coefficient_matrix
    is the 12x7 matrix of their coefficients over the monomials
    (x^2 y, x y^2, x y, y^2, x, y, 1); rank is its rank over the base field.
    """

    polys: tuple
    coefficient_matrix: tuple
    rank: int


def type_iv_equations(tensor: StructureTensor) -> TypeIVEquations:
    w = _getter(tensor)
    zero = tensor.mode.zero
    polys = []
    for i in (1, 2, 3):
        polys.append(
            BiPoly.from_dict(
                {
                    (2, 1): w(1, i, 2),
                    (1, 1): w(2, i, 2) - w(1, i, 1),
                    (1, 0): w(1, i, 3),
                    (0, 1): -w(2, i, 1),
                    (0, 0): w(2, i, 3),
                }
            )
        )
        polys.append(
            BiPoly.from_dict(
                {
                    (2, 1): w(i, 1, 2),
                    (1, 1): w(i, 2, 2) - w(i, 1, 1),
                    (1, 0): w(i, 1, 3),
                    (0, 1): -w(i, 2, 1),
                    (0, 0): w(i, 2, 3),
                }
            )
        )
        polys.append(
            BiPoly.from_dict(
                {
                    (1, 2): w(3, i, 2),
                    (1, 1): w(1, i, 2),
                    (0, 2): -w(3, i, 1),
                    (0, 1): w(3, i, 3) - w(1, i, 1),
                    (0, 0): w(1, i, 3),
                }
            )
        )
        polys.append(
            BiPoly.from_dict(
                {
                    (1, 2): w(i, 3, 2),
                    (1, 1): w(i, 1, 2),
                    (0, 2): -w(i, 3, 1),
                    (0, 1): w(i, 3, 3) - w(i, 1, 1),
                    (0, 0): w(i, 1, 3),
                }
            )
        )
    matrix = tuple(
        tuple(p.coeff(dx, dy) if p.coeff(dx, dy) != 0 else zero for dx, dy in _M_MONOMIALS)
        for p in polys
    )
    return TypeIVEquations(tuple(polys), matrix, matrix_rank([list(r) for r in matrix]))


@dataclass(frozen=True)
class TSystem:
    """Linear system behind the symmetrized type IV equations.

    For a commutative tensor the six distinct absorption conditions are linear
    in the monomial vector (x^2 y, x y, x, y, x y^2, y^2).  matrix is the 6x6
    coefficient matrix, rhs the right-hand side, det its determinant, and
    cramer_dets the six column-replacement determinants.  candidate holds the
    unique monomial-vector solution when det != 0.
    """

    matrix: tuple
    rhs: tuple
    det: object
    cramer_dets: tuple
    rank: int
    rank_augmented: int
    candidate: Optional[tuple]


def t_system(tensor: StructureTensor) -> TSystem:
    if not tensor.is_commutative():
        raise InvalidParameters("the linear reduction needs a commutative tensor")
    w = _getter(tensor)
    z = tensor.mode.zero
    rows = (
        (w(1, 1, 2), w(1, 2, 2) - w(1, 1, 1), w(1, 1, 3), -w(1, 2, 1), z, z),
        (w(1, 2, 2), w(2, 2, 2) - w(1, 2, 1), w(1, 2, 3), -w(2, 2, 1), z, z),
        (w(1, 3, 2), w(2, 3, 2) - w(1, 3, 1), w(1, 3, 3), -w(2, 3, 1), z, z),
        (z, w(1, 1, 2), z, w(1, 3, 3) - w(1, 1, 1), w(1, 3, 2), -w(1, 3, 1)),
        (z, w(1, 2, 2), z, w(2, 3, 3) - w(1, 2, 1), w(2, 3, 2), -w(2, 3, 1)),
        (z, w(1, 3, 2), z, w(3, 3, 3) - w(1, 3, 1), w(3, 3, 2), -w(3, 3, 1)),
    )
    rhs = (-w(1, 2, 3), -w(2, 2, 3), -w(2, 3, 3), -w(1, 1, 3), -w(1, 2, 3), -w(1, 3, 3))
    det = matrix_det([list(r) for r in rows])
    cramer = []
    for col in range(6):
        replaced = [
            [rhs[r] if c == col else rows[r][c] for c in range(6)] for r in range(6)
        ]
        cramer.append(matrix_det(replaced))
    rank = matrix_rank([list(r) for r in rows])
    rank_aug = matrix_rank([list(r) + [rhs[i]] for i, r in enumerate(rows)])
    candidate = None
    if det != 0:
        candidate = tuple(c / det for c in cramer)
    return TSystem(rows, rhs, det, tuple(cramer), rank, rank_aug, candidate)


class PlaneFamilyKind(Enum):
    WHOLE_PLANE = "whole-plane"
    FIXED_Y = "fixed-y"
    FIXED_X = "fixed-x"
    HYPERBOLA = "hyperbola"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class PlaneFamily:
    """Infinite family of type IV planes.

    WHOLE_PLANE: every (x, y) with y != 0.
    FIXED_Y: every (x, value); FIXED_X: every (value, y) with y != 0.
    HYPERBOLA: the bilinear curve defining[0] = 0 (nonzero xy coefficient),
    so x is a rational function of y away from finitely many y.
    UNCLASSIFIED: some other curve; defining carries its equations.
    """

    kind: PlaneFamilyKind
    value: object = None
    defining: tuple = ()

    def sample_members(self, limit: int = 3) -> tuple:
        """Up to limit exact (x, y) members, used for verification."""
        out = []
        if self.kind is PlaneFamilyKind.WHOLE_PLANE:
            out = [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(3))]
        elif self.kind is PlaneFamilyKind.FIXED_Y:
            out = [(Fraction(n), self.value) for n in range(limit)]
        elif self.kind is PlaneFamilyKind.FIXED_X:
            out = [(self.value, Fraction(n)) for n in range(1, limit + 1)]
        elif self.kind is PlaneFamilyKind.HYPERBOLA:
            poly = self.defining[0]
            a, b = poly.coeff(1, 1), poly.coeff(1, 0)
            c, d = poly.coeff(0, 1), poly.coeff(0, 0)
            for n in range(1, 12):
                y = Fraction(n)
                denom = a * y + b
                if denom == 0:
                    continue
                out.append((-(c * y + d) / denom, y))
                if len(out) == limit:
                    break
        return tuple(out[:limit])


@dataclass(frozen=True)
class PlaneSolutionSet:
    """Type IV solutions: isolated planes plus any parametric families.

    points hold exact (x, y) pairs with y != 0, sorted.  dropped_y_zero
    records candidate pairs discarded for having y = 0 (they fall in other
    charts); reports surface them as notes.
    """

    points: tuple
    families: tuple = ()
    dropped_y_zero: tuple = ()

    @property
    def is_finite(self) -> bool:
        return not self.families

    def count(self) -> Optional[int]:
        return None if self.families else len(self.points)


def _point_sort_key(point):
    return (scalar_sort_key(point[0]), scalar_sort_key(point[1]))


def _classify_curve(component: CurveComponent) -> PlaneFamily:
    if component.kind is CurveKind.FIXED_Y:
        return PlaneFamily(PlaneFamilyKind.FIXED_Y, value=component.value)
    if component.kind is CurveKind.FIXED_X:
        return PlaneFamily(PlaneFamilyKind.FIXED_X, value=component.value)
    poly = component.poly
    if poly.deg_x <= 1 and poly.deg_y <= 1 and poly.coeff(1, 1) != 0:
        return PlaneFamily(PlaneFamilyKind.HYPERBOLA, defining=(poly,))
    return PlaneFamily(PlaneFamilyKind.UNCLASSIFIED, defining=(poly,))


def _dt_identities_hold(ts: TSystem) -> bool:
    """Compatibility of the unique linear solution with the monomial relations.

    The six unknowns stand for (x^2 y, x y, x, y, x y^2, y^2); a consistent
    assignment must satisfy x1 = x3^2 x4, x2 = x3 x4, x5 = x3 x4^2, x6 = x4^2,
    which in determinant form reads as four product identities.
    """
    d = ts.det
    d1, d2, d3, d4, d5, d6 = ts.cramer_dets
    return (
        d * d1 == d2 * d3
        and d * d2 == d3 * d4
        and d * d5 == d2 * d4
        and d * d6 == d4 * d4
    )


def _solution_set_from_symmetric(tensor: StructureTensor, ts: TSystem) -> SolutionSet:
    """Solve the symmetrized type IV system for a commutative tensor."""
    if ts.rank != ts.rank_augmented:
        return SolutionSet((), ())
    if ts.det != 0:
        if _dt_identities_hold(ts):
            x = ts.cramer_dets[2] / ts.det
            y = ts.cramer_dets[3] / ts.det
            return SolutionSet(((x, y),), ())
        return SolutionSet((), ())
    # Singular but consistent: fall back to the exact bivariate solver on the
    # six distinct equations (left and right conditions coincide here).
    eqs = type_iv_equations(tensor).polys
    distinct = [eqs[4 * i] for i in range(3)] + [eqs[4 * i + 2] for i in range(3)]
    return solve_bivariate_system(distinct, tensor.mode)


def _restrict_to_family(tensor: StructureTensor, family_polys, full_polys):
    """Cut the full system down to one family curve.

    Returns (surviving_curves, extra_points): curves kept mean the whole
    family satisfies the full system; points are isolated survivors on it.
    """
    system = list(full_polys) + list(family_polys)
    sub = solve_bivariate_system(system, tensor.mode)
    return sub.curves, sub.points


def solve_type_IV(tensor: StructureTensor) -> PlaneSolutionSet:
    """All (x, y), y != 0, with Lin{x e1 + e2, e1 + y e3} a two-sided ideal.

    The commutative part of the product decides a superset of the solutions:
    a plane absorbing uv and vu also absorbs uv + vu.  The symmetrized system
    is linear in six monomials and is dispatched on the rank of that system;
    non-commutative input then filters the superset through its own twelve
    conditions, keeping whole families only when the full system vanishes on
    them and harvesting isolated survivors otherwise.
    """
    mode = tensor.mode
    sym = tensor.symmetrize()
    ts = t_system(sym)
    base = _solution_set_from_symmetric(sym, ts)

    full = None
    if not tensor.is_commutative():
        full = [p for p in type_iv_equations(tensor).polys if not p.is_zero()]
        if base.whole_plane:
            base = solve_bivariate_system(full, mode)
        else:
            points = [
                p
                for p in base.points
                if all(q.eval(p[0], p[1]) == 0 for q in full)
            ]
            curves = []
            for component in base.curves:
                kept, extra = _restrict_to_family(tensor, (component.poly,), full)
                curves.extend(kept)
                points.extend(extra)
            base = SolutionSet(tuple(points), tuple(curves))

    if base.whole_plane:
        return PlaneSolutionSet((), (PlaneFamily(PlaneFamilyKind.WHOLE_PLANE),))

    kept_points = []
    dropped = []
    for point in base.points:
        if point[1] == 0:
            dropped.append(point)
        else:
            kept_points.append(point)

    families = []
    for component in base.curves:
        family = _classify_curve(component)
        if family.kind is PlaneFamilyKind.FIXED_Y and family.value == 0:
            dropped.append(("*", family.value))
            continue
        families.append(family)

    kept_points = sorted(set(kept_points), key=_point_sort_key)
    return PlaneSolutionSet(tuple(kept_points), tuple(families), tuple(dropped))


# ---------------------------------------------------------------------------
# Type I and the full enumeration.
# ---------------------------------------------------------------------------


def has_type_I(tensor: StructureTensor) -> bool:
    """Whether Lin{e1, e2} is a two-sided ideal.

    The plane absorbs all products exactly when every product of basis
    vectors other than e3 e3 has no e3 component.
    """
    w = _getter(tensor)
    return all(w(i, j, 3) == 0 for i in (1, 2, 3) for j in (1, 2, 3) if (i, j) != (3, 3))


@dataclass(frozen=True)
class TwoDimEnumeration:
    """Complete classification of the two-dimensional two-sided ideals."""

    type_I: bool
    type_II: ScalarSolutionSet
    type_II_diagnostic: KDiagnostic
    type_III: ScalarSolutionSet
    type_IV: PlaneSolutionSet
    planes: tuple = ()

    @property
    def is_infinite(self) -> bool:
        return (
            self.type_II.all_scalars
            or self.type_III.all_scalars
            or not self.type_IV.is_finite
        )

    def count(self) -> Optional[int]:
        if self.is_infinite:
            return None
        return (
            (1 if self.type_I else 0)
            + len(self.type_II.roots)
            + len(self.type_III.roots)
            + len(self.type_IV.points)
        )


def _verified_descriptor(tensor: StructureTensor, descriptor: PlaneDescriptor):
    if not is_ideal_plane(tensor, descriptor):
        raise InconsistencyDetected(
            "an enumerated plane failed the exact ideal verification"
        )
    return descriptor


def enumerate_twodim(tensor: StructureTensor) -> TwoDimEnumeration:
    """Enumerate and verify every two-dimensional two-sided ideal.

    Every reported finite solution is re-checked against the definition via
    is_ideal_plane; members of infinite families are spot-checked the same
    way.  A finite total above four violates the structural bound and raises
    BoundViolation.
    """
    type_i = has_type_I(tensor)
    sols_ii, diag = solve_type_II(tensor)
    sols_iii = solve_type_III(tensor)
    sols_iv = solve_type_IV(tensor)

    planes = []
    if type_i:
        planes.append(_verified_descriptor(tensor, PlaneDescriptor(PlaneKind.TYPE_I)))
    if sols_ii.is_finite:
        for x in sols_ii.roots:
            planes.append(
                _verified_descriptor(tensor, PlaneDescriptor(PlaneKind.TYPE_II, x=x))
            )
    if sols_iii.is_finite:
        for x in sols_iii.roots:
            planes.append(
                _verified_descriptor(tensor, PlaneDescriptor(PlaneKind.TYPE_III, x=x))
            )
    for x, y in sols_iv.points:
        planes.append(
            _verified_descriptor(tensor, PlaneDescriptor(PlaneKind.TYPE_IV, x=x, y=y))
        )
    for family in sols_iv.families:
        for x, y in family.sample_members():
            if y == 0:
                continue
            _verified_descriptor(tensor, PlaneDescriptor(PlaneKind.TYPE_IV, x=x, y=y))

    # The four charts partition the planes, so descriptors never collide
    # across types; deduplication is a checked no-op.
    if len(set(planes)) != len(planes):
        raise InconsistencyDetected("duplicate plane descriptors across charts")

    enumeration = TwoDimEnumeration(
        type_I=type_i,
        type_II=sols_ii,
        type_II_diagnostic=diag,
        type_III=sols_iii,
        type_IV=sols_iv,
        planes=tuple(planes),
    )
    total = enumeration.count()
    if total is not None and total > 4:
        raise BoundViolation(
            "more than four two-dimensional ideals on a finite enumeration"
        )
    return enumeration
