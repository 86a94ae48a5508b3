"""Structure tensors of 3-dimensional algebras.

A StructureTensor holds the 27 structure constants omega[i][j][k] (0-based)
of a bilinear product on a 3-dimensional space: e_i e_j = sum_k omega[i][j][k] e_k.
No associativity, commutativity, or unit is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .poly import kernel_basis
from .scalar import FieldMode, as_base_scalar, parse_scalar


@dataclass(frozen=True)
class StructureTensor:
    """27 structure constants over the field selected by mode."""

    omega: tuple  # 3x3x3 nested tuples, omega[i][j][k], all 0-based
    mode: FieldMode

    def __post_init__(self):
        if len(self.omega) != 3 or any(
            len(plane) != 3 or any(len(row) != 3 for row in plane) for plane in self.omega
        ):
            raise ParseError("structure tensor must be 3x3x3")

    @staticmethod
    def build(entries, mode: FieldMode) -> "StructureTensor":
        """From any nested 3x3x3 of values coercible to the mode's field."""
        omega = tuple(
            tuple(tuple(as_base_scalar(entries[i][j][k], mode) for k in range(3)) for j in range(3))
            for i in range(3)
        )
        return StructureTensor(omega, mode)

    @staticmethod
    def from_entries(entries: dict, mode: FieldMode) -> "StructureTensor":
        """From a sparse {(i, j, k): value} map with 1-based indices."""
        data = [[[mode.zero for _ in range(3)] for _ in range(3)] for _ in range(3)]
        for (i, j, k), v in entries.items():
            if not (1 <= i <= 3 and 1 <= j <= 3 and 1 <= k <= 3):
                raise ParseError(f"structure constant index out of range: {(i, j, k)}")
            data[i - 1][j - 1][k - 1] = as_base_scalar(v, mode)
        return StructureTensor.build(data, mode)

    @staticmethod
    def from_json_nested(data, mode: FieldMode) -> "StructureTensor":
        """From JSON-level nested arrays of scalar literals."""
        if not isinstance(data, list) or len(data) != 3:
            raise ParseError("omega must be a 3x3x3 nested array")
        rows = []
        for plane in data:
            if not isinstance(plane, list) or len(plane) != 3:
                raise ParseError("omega must be a 3x3x3 nested array")
            prow = []
            for row in plane:
                if not isinstance(row, list) or len(row) != 3:
                    raise ParseError("omega must be a 3x3x3 nested array")
                prow.append(tuple(parse_scalar(v, mode) for v in row))
            rows.append(tuple(prow))
        return StructureTensor(tuple(rows), mode)

    def omega1(self, i: int, j: int, k: int):
        """Structure constant with 1-based indices (matches written formulas)."""
        return self.omega[i - 1][j - 1][k - 1]

    @property
    def zero(self):
        return self.mode.zero

    def product(self, u, v) -> tuple:
        """Coordinates of the algebra product of two coordinate vectors."""
        out = []
        for k in range(3):
            acc = self.mode.zero
            for i in range(3):
                if u[i] == 0:
                    continue
                for j in range(3):
                    if v[j] == 0:
                        continue
                    acc = acc + u[i] * v[j] * self.omega[i][j][k]
            out.append(acc)
        return tuple(out)

    def left_matrix(self, k: int) -> list:
        """Matrix of left multiplication by e_k: row r, column c is omega[k][c][r]."""
        return [[self.omega[k][c][r] for c in range(3)] for r in range(3)]

    def right_matrix(self, k: int) -> list:
        """Matrix of right multiplication by e_k: row r, column c is omega[c][k][r]."""
        return [[self.omega[c][k][r] for c in range(3)] for r in range(3)]

    def multiplication_matrices(self) -> list:
        """All six one-sided multiplication matrices, left three then right three."""
        return [self.left_matrix(k) for k in range(3)] + [self.right_matrix(k) for k in range(3)]

    def annihilator_basis(self) -> tuple:
        """Basis of {u : u A = A u = 0}, the two-sided annihilator."""
        stacked = []
        for m in self.multiplication_matrices():
            stacked.extend(m)
        return kernel_basis(stacked)

    def is_zero(self) -> bool:
        return all(
            self.omega[i][j][k] == 0 for i in range(3) for j in range(3) for k in range(3)
        )

    def is_commutative(self) -> bool:
        return all(
            self.omega[i][j][k] == self.omega[j][i][k]
            for i in range(3)
            for j in range(3)
            for k in range(3)
        )

    def symmetrize(self) -> "StructureTensor":
        """Commutative part: the tensor of the product (uv + vu) / 2."""
        omega = tuple(
            tuple(
                tuple((self.omega[i][j][k] + self.omega[j][i][k]) / 2 for k in range(3))
                for j in range(3)
            )
            for i in range(3)
        )
        return StructureTensor(omega, self.mode)

    def permute_basis(self, sigma: tuple) -> "StructureTensor":
        """Structure constants in the permuted basis f_m = e_{sigma^{-1}(m)}.

        sigma is a 0-based permutation tuple: basis vector e_i becomes f_{sigma[i]}.
        The new tensor satisfies omega'[sigma(i)][sigma(j)][sigma(k)] = omega[i][j][k].
        """
        if sorted(sigma) != [0, 1, 2]:
            raise ParseError("sigma must be a permutation of 0, 1, 2")
        data = [[[self.mode.zero for _ in range(3)] for _ in range(3)] for _ in range(3)]
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    data[sigma[i]][sigma[j]][sigma[k]] = self.omega[i][j][k]
        return StructureTensor.build(data, self.mode)

    def transpose_product(self) -> "StructureTensor":
        """Tensor of the opposite algebra (product arguments swapped)."""
        omega = tuple(
            tuple(tuple(self.omega[j][i][k] for k in range(3)) for j in range(3))
            for i in range(3)
        )
        return StructureTensor(omega, self.mode)
