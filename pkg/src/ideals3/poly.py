"""Exact polynomial and linear-algebra kernels.

UniPoly is a dense univariate polynomial (coefficients lowest-degree first)
over any exact field scalar that supports +, -, *, /, == (Fraction,
GaussianRational, AlgebraicScalar). BiPoly is a sparse bivariate polynomial
over the base field. The linear solvers run plain exact Gaussian elimination
and report ranks, a particular solution, and a kernel basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import DegenerateInput


def _is_zero(c) -> bool:
    return c == 0


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial; coeffs[k] multiplies x**k."""

    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def x(one=Fraction(1)) -> "UniPoly":
        return UniPoly((one * 0, one))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if self.is_zero():
            raise DegenerateInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly.zero()
            out = [self.coeffs[0] * other.coeffs[0] * 0] * (
                len(self.coeffs) + len(other.coeffs) - 1
            )
            for i, a in enumerate(self.coeffs):
                if _is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(tuple(out))
        return UniPoly(tuple(c * other for c in self.coeffs))

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, s) -> "UniPoly":
        return UniPoly(tuple(c * s for c in self.coeffs))

    def divmod(self, other: "UniPoly"):
        """Exact-field division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return UniPoly.zero(), self
        rem = list(self.coeffs)
        lead = other.leading()
        dq = self.degree - other.degree
        q = [self.coeffs[0] * 0] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[other.degree + k]
            if _is_zero(top):
                continue
            factor = top / lead
            q[k] = factor
            for j, b in enumerate(other.coeffs):
                rem[j + k] = rem[j + k] - factor * b
        return UniPoly(tuple(q)), UniPoly(tuple(rem[: other.degree]))

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise DegenerateInput("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(self.coeffs[k] * k for k in range(1, len(self.coeffs))))

    def eval(self, point):
        """Horner evaluation; the point may live in an extension field."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return 0 if acc is None else acc

    def compose_linear(self, a, b) -> "UniPoly":
        """The polynomial p(a + b*t) as a polynomial in t."""
        acc = UniPoly.zero()
        lin = UniPoly((a, b))
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly.const(c)
        return acc

    def shift_degree(self, k: int) -> "UniPoly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        zero = self.coeffs[0] * 0
        return UniPoly((zero,) * k + self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


def gcd_univariate(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


def gcd_many(polys: Sequence[UniPoly]) -> UniPoly:
    g = UniPoly.zero()
    for p in polys:
        g = gcd_univariate(g, p)
        if g.degree == 0:
            return g
    return g


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p.monic()
    g = gcd_univariate(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return p.exact_div(g).monic()


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiPoly:
    """Sparse bivariate polynomial; terms maps (deg_x, deg_y) -> coefficient."""

    terms: tuple  # tuple of ((dx, dy), coeff), sorted, zero coeffs dropped

    def __post_init__(self):
        cleaned = tuple(
            sorted(((k, c) for k, c in self.terms if not _is_zero(c)), key=lambda t: t[0])
        )
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def from_dict(d: dict) -> "BiPoly":
        return BiPoly(tuple(d.items()))

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly(())

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly((((0, 0), c),))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, dx: int, dy: int):
        for k, c in self.terms:
            if k == (dx, dy):
                return c
        return 0

    @property
    def deg_x(self) -> int:
        return max((k[0] for k, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((k[1] for k, _ in self.terms), default=-1)

    @property
    def total_degree(self) -> int:
        return max((k[0] + k[1] for k, _ in self.terms), default=-1)

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        d = dict(self.terms)
        for k, c in other.terms:
            d[k] = d.get(k, 0) + c
        return BiPoly.from_dict(d)

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        d = dict(self.terms)
        for k, c in other.terms:
            d[k] = d.get(k, 0) - c
        return BiPoly.from_dict(d)

    def __neg__(self):
        return BiPoly(tuple((k, -c) for k, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            d = {}
            for (ax, ay), a in self.terms:
                for (bx, by), b in other.terms:
                    k = (ax + bx, ay + by)
                    d[k] = d.get(k, 0) + a * b
            return BiPoly.from_dict(d)
        return BiPoly(tuple((k, c * other) for k, c in self.terms))

    __rmul__ = __mul__

    def eval(self, x, y):
        acc = 0
        for (dx, dy), c in self.terms:
            term = c
            for _ in range(dx):
                term = term * x
            for _ in range(dy):
                term = term * y
            acc = acc + term
        return acc

    def substitute_x(self, x) -> UniPoly:
        """Evaluate x, leaving a univariate polynomial in y."""
        by_dy: dict = {}
        for (dx, dy), c in self.terms:
            term = c
            for _ in range(dx):
                term = term * x
            by_dy[dy] = by_dy.get(dy, 0) + term
        if not by_dy:
            return UniPoly.zero()
        n = max(by_dy) + 1
        return UniPoly(tuple(by_dy.get(k, 0) for k in range(n)))

    def substitute_y(self, y) -> UniPoly:
        by_dx: dict = {}
        for (dx, dy), c in self.terms:
            term = c
            for _ in range(dy):
                term = term * y
            by_dx[dx] = by_dx.get(dx, 0) + term
        if not by_dx:
            return UniPoly.zero()
        n = max(by_dx) + 1
        return UniPoly(tuple(by_dx.get(k, 0) for k in range(n)))

    def coeffs_in_y(self) -> list:
        """Coefficients of powers of y, each a UniPoly in x, lowest first."""
        if self.is_zero():
            return []
        out = []
        for dy in range(self.deg_y + 1):
            row = {}
            for (dx, d), c in self.terms:
                if d == dy:
                    row[dx] = c
            n = max(row) + 1 if row else 0
            out.append(UniPoly(tuple(row.get(k, 0) for k in range(n))))
        return out

    def coeffs_in_x(self) -> list:
        """Coefficients of powers of x, each a UniPoly in y, lowest first."""
        if self.is_zero():
            return []
        out = []
        for dx in range(self.deg_x + 1):
            row = {}
            for (d, dy), c in self.terms:
                if d == dx:
                    row[dy] = c
            n = max(row) + 1 if row else 0
            out.append(UniPoly(tuple(row.get(k, 0) for k in range(n))))
        return out

    @staticmethod
    def from_coeffs_in_y(cols: Sequence[UniPoly]) -> "BiPoly":
        d = {}
        for dy, poly in enumerate(cols):
            for dx, c in enumerate(poly.coeffs):
                if not _is_zero(c):
                    d[(dx, dy)] = c
        return BiPoly.from_dict(d)

    def swap_vars(self) -> "BiPoly":
        return BiPoly(tuple(((dy, dx), c) for (dx, dy), c in self.terms))

    def __repr__(self):
        return f"BiPoly({dict(self.terms)!r})"


def resultant_y(p: BiPoly, q: BiPoly) -> UniPoly:
    """Resultant of p and q with respect to y: a polynomial in x alone.

    Built from the Sylvester matrix whose entries are UniPolys in x; the
    determinant is expanded with the fraction-free Bareiss scheme, so all
    intermediate divisions are exact. Requires both arguments to have positive
    degree in y.
    """
    m, n = p.deg_y, q.deg_y
    if m <= 0 or n <= 0:
        raise DegenerateInput("resultant_y needs positive y-degree in both arguments")
    pc = p.coeffs_in_y()  # degree m, lowest first
    qc = q.coeffs_in_y()
    size = m + n
    zero = UniPoly.zero()
    rows = []
    for i in range(n):  # rows of p-coefficients, highest first
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = pc[m - k]
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = qc[n - k]
        rows.append(row)
    one = UniPoly.const(Fraction(1))
    return _det_bareiss_ring(
        rows, lambda a, b: a.exact_div(b), one, UniPoly.zero(), lambda v: v.is_zero()
    )


def _det_bareiss_ring(rows, exact_div: Callable, one, zero, is_zero: Callable):
    """Bareiss determinant over an integral domain with exact division."""
    n = len(rows)
    if n == 0:
        return one
    a = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            pivot_row = None
            for r in range(k + 1, n):
                if not is_zero(a[r][k]):
                    pivot_row = r
                    break
            if pivot_row is None:
                return zero
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
            a[i][k] = zero
        prev = a[k][k]
    det = a[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det


# ---------------------------------------------------------------------------
# exact linear algebra over a field
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearSolveResult:
    """Outcome of solving A x = b exactly.

    rank: rank of A. rank_augmented: rank of (A | b). If the system is
    consistent, ``particular`` holds one solution and ``kernel`` a basis of
    the null space (empty tuple when the solution is unique); otherwise
    ``particular`` is None.
    """

    rank: int
    rank_augmented: int
    particular: Optional[tuple]
    kernel: tuple

    @property
    def consistent(self) -> bool:
        return self.rank == self.rank_augmented


def _row_echelon(matrix):
    """In-place-free echelon reduction; returns (rows, pivot_cols)."""
    rows = [list(r) for r in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if not _is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(n_rows):
            if i != r and not _is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def matrix_rank(matrix) -> int:
    if not matrix:
        return 0
    _, pivots = _row_echelon(matrix)
    return len(pivots)


def matrix_det(matrix):
    """Determinant by exact Gaussian elimination (field scalars)."""
    n = len(matrix)
    if n == 0:
        raise DegenerateInput("empty matrix")
    rows = [list(r) for r in matrix]
    det = None
    sign = 1
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not _is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            return rows[0][0] * 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        lead = rows[c][c]
        det = lead if det is None else det * lead
        for i in range(c + 1, n):
            if not _is_zero(rows[i][c]):
                f = rows[i][c] / lead
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det if sign > 0 else -det


def kernel_basis(matrix) -> tuple:
    """Basis of the null space of a matrix over a field."""
    if not matrix:
        return ()
    n_cols = len(matrix[0])
    rows, pivots = _row_echelon(matrix)
    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [0] * n_cols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(tuple(vec))
    return tuple(basis)


def solve_linear_with_rank(matrix, rhs) -> LinearSolveResult:
    """Solve A x = b exactly, reporting ranks, a particular solution, kernel."""
    n_rows = len(matrix)
    if n_rows == 0:
        return LinearSolveResult(0, 0, (), ())
    n_cols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = _row_echelon(aug)
    rank_aug = len(pivots)
    if pivots and pivots[-1] == n_cols:
        # a pivot in the rhs column: inconsistent
        rank_a = rank_aug - 1
        return LinearSolveResult(rank_a, rank_aug, None, kernel_basis(matrix))
    rank_a = rank_aug
    particular = [0] * n_cols
    for r, pc in enumerate(pivots):
        particular[pc] = rows[r][n_cols]
    return LinearSolveResult(rank_a, rank_aug, tuple(particular), kernel_basis(matrix))
