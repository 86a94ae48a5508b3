"""Lines, planes, ideal membership tests, and quotients.

Lines are 1-dimensional subspaces in canonical form (first nonzero
coordinate scaled to one). Planes are 2-dimensional subspaces in one of four
canonical shapes that partition all planes of a 3-dimensional space:

  type I   span{e1, e2}
  type II  span{x e1 + e2, e3}           (one rational/Gaussian parameter x)
  type III span{x e2 + e3, e1}
  type IV  span{x e1 + e2, e1 + y e3}    (y != 0)

Membership of a subspace as a two-sided ideal is decided by exact linear
algebra against the structure tensor.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .algebra import StructureTensor
from .errors import DependentVectors, DegenerateInput, NotAnIdeal
from .poly import matrix_det, solve_linear_with_rank
from .scalar import FieldMode


@dataclass(frozen=True)
class Line:
    """1-dimensional subspace, coordinates scaled so the pivot entry is 1."""

    coords: tuple

    def __post_init__(self):
        # Plain ints (e.g. kernel free-column seeds) divide to floats; keep
        # the normalization exact by lifting them to Fraction first.
        coords = tuple(
            Fraction(c) if isinstance(c, int) else c for c in self.coords
        )
        if len(coords) != 3:
            raise DegenerateInput("lines live in a 3-dimensional space")
        pivot = None
        for idx, c in enumerate(coords):
            if c != 0:
                pivot = idx
                break
        if pivot is None:
            raise DegenerateInput("zero vector spans no line")
        lead = coords[pivot]
        normalized = []
        for k, c in enumerate(coords):
            if k < pivot:
                normalized.append(c)
            elif k == pivot:
                normalized.append(lead / lead)
            else:
                normalized.append(c / lead)
        object.__setattr__(self, "coords", tuple(normalized))

    @property
    def pivot(self) -> int:
        for idx, c in enumerate(self.coords):
            if c != 0:
                return idx
        raise DegenerateInput("zero vector spans no line")  # unreachable

    def __repr__(self):
        return f"Line{self.coords!r}"


class PlaneKind(Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"
    TYPE_IV = "IV"


@dataclass(frozen=True)
class PlaneDescriptor:
    """Canonical description of a plane by kind and parameters."""

    kind: PlaneKind
    x: Optional[object] = None
    y: Optional[object] = None

    def __post_init__(self):
        if self.kind is PlaneKind.TYPE_I:
            if self.x is not None or self.y is not None:
                raise DegenerateInput("type I planes carry no parameters")
        elif self.kind in (PlaneKind.TYPE_II, PlaneKind.TYPE_III):
            if self.x is None or self.y is not None:
                raise DegenerateInput("types II and III carry exactly the parameter x")
        else:
            if self.x is None or self.y is None:
                raise DegenerateInput("type IV carries parameters x and y")
            if self.y == 0:
                raise DegenerateInput("type IV requires y != 0")

    def spanning_vectors(self, mode: FieldMode) -> tuple:
        zero, one = mode.zero, mode.one
        if self.kind is PlaneKind.TYPE_I:
            return ((one, zero, zero), (zero, one, zero))
        if self.kind is PlaneKind.TYPE_II:
            return ((self.x, one, zero), (zero, zero, one))
        if self.kind is PlaneKind.TYPE_III:
            return ((zero, self.x, one), (one, zero, zero))
        return ((self.x, one, zero), (one, zero, self.y))

    def complement_index(self) -> int:
        """Standard basis vector index (0-based) spanning a complement."""
        if self.kind is PlaneKind.TYPE_I:
            return 2
        if self.kind is PlaneKind.TYPE_II:
            return 0
        if self.kind is PlaneKind.TYPE_III:
            return 1
        return 2  # e3 is never inside a type IV plane since y != 0

    def __repr__(self):
        if self.kind is PlaneKind.TYPE_I:
            return "Plane(I)"
        if self.kind in (PlaneKind.TYPE_II, PlaneKind.TYPE_III):
            return f"Plane({self.kind.value}, x={self.x!r})"
        return f"Plane(IV, x={self.x!r}, y={self.y!r})"


def _independent(u, v) -> bool:
    minors = (
        u[0] * v[1] - u[1] * v[0],
        u[0] * v[2] - u[2] * v[0],
        u[1] * v[2] - u[2] * v[1],
    )
    return any(m != 0 for m in minors)


def classify_plane(u, v, mode: FieldMode) -> PlaneDescriptor:
    """Canonical descriptor of the plane spanned by two independent vectors."""
    if len(u) != 3 or len(v) != 3:
        raise DegenerateInput("plane spans live in a 3-dimensional space")
    u = tuple(Fraction(c) if isinstance(c, int) else c for c in u)
    v = tuple(Fraction(c) if isinstance(c, int) else c for c in v)
    if not _independent(u, v):
        raise DependentVectors("spanning vectors are linearly dependent")
    # arrange a spanning pair (alpha, beta) with alpha[2] == 0, alpha != 0
    if u[2] == 0:
        alpha, beta = u, v
    elif v[2] == 0:
        alpha, beta = v, u
    else:
        alpha = tuple(a / u[2] - b / v[2] for a, b in zip(u, v))
        beta = v
    if alpha[1] != 0:
        x = alpha[0] / alpha[1]
        reduced = tuple(b - beta[1] * a / alpha[1] for a, b in zip(alpha, beta))
        if reduced[2] == 0:
            return PlaneDescriptor(PlaneKind.TYPE_I)
        if reduced[0] == 0:
            return PlaneDescriptor(PlaneKind.TYPE_II, x=x)
        return PlaneDescriptor(PlaneKind.TYPE_IV, x=x, y=reduced[2] / reduced[0])
    # alpha is proportional to e1
    reduced = tuple(b - beta[0] * a / alpha[0] for a, b in zip(alpha, beta))
    if reduced[1] != 0:
        ytilde = reduced[2] / reduced[1]
        if ytilde == 0:
            return PlaneDescriptor(PlaneKind.TYPE_I)
        return PlaneDescriptor(PlaneKind.TYPE_III, x=1 / ytilde)
    return PlaneDescriptor(PlaneKind.TYPE_III, x=mode.zero)


def is_ideal_line(tensor: StructureTensor, line: Line) -> bool:
    """True when the line is invariant under all one-sided multiplications."""
    u = line.coords
    for m in tensor.multiplication_matrices():
        w = tuple(sum((m[r][c] * u[c] for c in range(3)), tensor.zero) for r in range(3))
        if (
            w[0] * u[1] - w[1] * u[0] != 0
            or w[0] * u[2] - w[2] * u[0] != 0
            or w[1] * u[2] - w[2] * u[1] != 0
        ):
            return False
    return True


def is_ideal_plane(tensor: StructureTensor, plane: PlaneDescriptor) -> bool:
    """True when products of basis vectors with the plane stay in the plane."""
    u, v = plane.spanning_vectors(tensor.mode)
    basis = [
        (tensor.mode.one, tensor.mode.zero, tensor.mode.zero),
        (tensor.mode.zero, tensor.mode.one, tensor.mode.zero),
        (tensor.mode.zero, tensor.mode.zero, tensor.mode.one),
    ]
    for w in (u, v):
        for e in basis:
            for prod in (tensor.product(e, w), tensor.product(w, e)):
                cols = [[prod[r], u[r], v[r]] for r in range(3)]
                if matrix_det(cols) != 0:
                    return False
    return True


@dataclass(frozen=True)
class QuotientAlgebra:
    """Structure constants of the quotient by an ideal, in a complement basis.

    The complement basis consists of cosets of standard basis vectors whose
    indices are listed in complement_indices (0-based, ascending).
    """

    dim: int
    complement_indices: tuple
    gamma: tuple  # gamma[a][b][c]: f_a f_b = sum_c gamma[a][b][c] f_c
    mode: FieldMode


def _coset_coordinates(ideal_basis: list, complement: list, vec, mode: FieldMode) -> tuple:
    """Coordinates of a vector's coset in the complement basis."""
    columns = list(ideal_basis) + list(complement)
    matrix = [[columns[c][r] for c in range(len(columns))] for r in range(3)]
    res = solve_linear_with_rank(matrix, list(vec))
    if not res.consistent or len(res.kernel) > 0:
        raise NotAnIdeal("ideal and complement do not span the space")
    return tuple(res.particular[len(ideal_basis):])


def quotient_by_line(tensor: StructureTensor, line: Line) -> QuotientAlgebra:
    if not is_ideal_line(tensor, line):
        raise NotAnIdeal("the line is not a two-sided ideal")
    pivot = line.pivot
    indices = tuple(k for k in range(3) if k != pivot)
    return _quotient(tensor, [list(line.coords)], indices)


def quotient_by_plane(tensor: StructureTensor, plane: PlaneDescriptor) -> QuotientAlgebra:
    if not is_ideal_plane(tensor, plane):
        raise NotAnIdeal("the plane is not a two-sided ideal")
    u, v = plane.spanning_vectors(tensor.mode)
    return _quotient(tensor, [list(u), list(v)], (plane.complement_index(),))


def _quotient(tensor: StructureTensor, ideal_basis: list, indices: tuple) -> QuotientAlgebra:
    mode = tensor.mode
    complement = []
    for idx in indices:
        e = [mode.zero, mode.zero, mode.zero]
        e[idx] = mode.one
        complement.append(tuple(e))
    n = len(indices)
    gamma = [[[mode.zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            prod = tensor.product(complement[a], complement[b])
            coords = _coset_coordinates(ideal_basis, complement, prod, mode)
            for c in range(n):
                gamma[a][b][c] = coords[c]
    gamma_t = tuple(tuple(tuple(row) for row in plane) for plane in gamma)
    return QuotientAlgebra(n, indices, gamma_t, mode)


def quotient_product_check(
    tensor: StructureTensor,
    ideal_basis: list,
    quotient: QuotientAlgebra,
    rep_a,
    rep_b,
) -> bool:
    """Whether coset multiplication through arbitrary representatives matches.

    rep_a and rep_b are any vectors; their cosets are multiplied both through
    the quotient constants and through the algebra product, and compared.
    """
    complement = []
    for idx in quotient.complement_indices:
        e = [tensor.mode.zero, tensor.mode.zero, tensor.mode.zero]
        e[idx] = tensor.mode.one
        complement.append(tuple(e))
    ca = _coset_coordinates(ideal_basis, complement, rep_a, tensor.mode)
    cb = _coset_coordinates(ideal_basis, complement, rep_b, tensor.mode)
    n = quotient.dim
    via_gamma = [tensor.mode.zero for _ in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                via_gamma[c] = via_gamma[c] + ca[a] * cb[b] * quotient.gamma[a][b][c]
    direct = tensor.product(rep_a, rep_b)
    via_product = _coset_coordinates(ideal_basis, complement, direct, tensor.mode)
    return tuple(via_gamma) == tuple(via_product)
