"""Structure tensor construction and basic operators."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ideals3.algebra import StructureTensor
from ideals3.errors import ParseError
from ideals3.scalar import FieldMode, GaussianRational

small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=2)


def tensor_from(entries, mode=FieldMode.REAL):
    return StructureTensor.from_entries(entries, mode)


def random_tensors():
    return st.builds(
        lambda vals: StructureTensor.build(
            [[[vals[9 * i + 3 * j + k] for k in range(3)] for j in range(3)] for i in range(3)],
            FieldMode.REAL,
        ),
        st.lists(small_fracs, min_size=27, max_size=27),
    )


class TestConstruction:
    def test_from_entries_one_based(self):
        t = tensor_from({(1, 1, 2): Fraction(5)})
        assert t.omega[0][0][1] == 5
        assert t.omega1(1, 1, 2) == 5
        assert t.omega[2][2][2] == 0

    def test_from_entries_rejects_bad_index(self):
        with pytest.raises(ParseError):
            tensor_from({(0, 1, 1): Fraction(1)})
        with pytest.raises(ParseError):
            tensor_from({(1, 1, 4): Fraction(1)})

    def test_from_json_nested(self):
        data = [[["0"] * 3 for _ in range(3)] for _ in range(3)]
        data[0][0][1] = "1/2"
        t = StructureTensor.from_json_nested(data, FieldMode.REAL)
        assert t.omega1(1, 1, 2) == Fraction(1, 2)

    def test_from_json_rejects_shape(self):
        with pytest.raises(ParseError):
            StructureTensor.from_json_nested([[["0"] * 3] * 3] * 2, FieldMode.REAL)
        with pytest.raises(ParseError):
            StructureTensor.from_json_nested("nope", FieldMode.REAL)

    def test_complex_entries(self):
        data = [[[{"re": "0", "im": "1"}] * 3 for _ in range(3)] for _ in range(3)]
        t = StructureTensor.from_json_nested(data, FieldMode.COMPLEX)
        assert t.omega[0][0][0] == GaussianRational(0, 1)


class TestProduct:
    def test_single_structure_constant(self):
        t = tensor_from({(1, 1, 2): Fraction(1)})
        e1 = (Fraction(1), Fraction(0), Fraction(0))
        assert t.product(e1, e1) == (Fraction(0), Fraction(1), Fraction(0))

    def test_bilinearity_against_direct_sum(self):
        t = tensor_from({(1, 2, 3): Fraction(2), (2, 1, 3): Fraction(-1)})
        u = (Fraction(1), Fraction(2), Fraction(0))
        v = (Fraction(3), Fraction(1), Fraction(0))
        # u v = sum u_i v_j e_i e_j: only e1e2 and e2e1 contribute
        assert t.product(u, v) == (Fraction(0), Fraction(0), Fraction(1 * 1 * 2 + 2 * 3 * -1))

    def test_left_right_matrices_agree_with_product(self):
        t = tensor_from({(1, 2, 1): Fraction(3), (2, 1, 2): Fraction(7), (3, 3, 3): Fraction(1)})
        u = (Fraction(2), Fraction(-1), Fraction(4))
        for k in range(3):
            e = [Fraction(0)] * 3
            e[k] = Fraction(1)
            left = t.left_matrix(k)
            got = tuple(sum(left[r][c] * u[c] for c in range(3)) for r in range(3))
            assert got == t.product(tuple(e), u)
            right = t.right_matrix(k)
            got = tuple(sum(right[r][c] * u[c] for c in range(3)) for r in range(3))
            assert got == t.product(u, tuple(e))

    @given(random_tensors(), st.lists(small_fracs, min_size=6, max_size=6))
    @settings(max_examples=30)
    def test_product_is_bilinear(self, t, vals):
        u = tuple(vals[:3])
        v = tuple(vals[3:])
        two_u = tuple(2 * a for a in u)
        assert t.product(two_u, v) == tuple(2 * a for a in t.product(u, v))
        w = (Fraction(1), Fraction(1), Fraction(1))
        lhs = t.product(tuple(a + b for a, b in zip(u, w)), v)
        rhs = tuple(a + b for a, b in zip(t.product(u, v), t.product(w, v)))
        assert lhs == rhs


class TestStructureOps:
    def test_annihilator_of_zero_tensor(self):
        t = StructureTensor.build(
            [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)], FieldMode.REAL
        )
        assert t.is_zero()
        assert len(t.annihilator_basis()) == 3

    def test_annihilator_detects_dead_direction(self):
        # only e1 e1 = e1: e2 and e3 annihilate everything
        t = tensor_from({(1, 1, 1): Fraction(1)})
        basis = t.annihilator_basis()
        assert len(basis) == 2
        for v in basis:
            assert v[0] == 0

    def test_annihilator_trivial(self):
        t = tensor_from({(i, i, i): Fraction(1) for i in (1, 2, 3)})
        assert t.annihilator_basis() == ()

    def test_commutativity(self):
        sym = tensor_from({(1, 2, 3): Fraction(1), (2, 1, 3): Fraction(1)})
        asym = tensor_from({(1, 2, 3): Fraction(1)})
        assert sym.is_commutative()
        assert not asym.is_commutative()

    def test_symmetrize(self):
        t = tensor_from({(1, 2, 3): Fraction(2)})
        s = t.symmetrize()
        assert s.is_commutative()
        assert s.omega1(1, 2, 3) == 1 and s.omega1(2, 1, 3) == 1
        u = (Fraction(1), Fraction(0), Fraction(0))
        v = (Fraction(0), Fraction(1), Fraction(0))
        uv = t.product(u, v)
        vu = t.product(v, u)
        expect = tuple((a + b) / 2 for a, b in zip(uv, vu))
        assert s.product(u, v) == expect

    def test_permute_basis_relabels_products(self):
        # e1 e1 = e2; after sigma = (1, 2, 0) the same product reads f2 f2 = f3
        t = tensor_from({(1, 1, 2): Fraction(1)})
        p = t.permute_basis((1, 2, 0))
        assert p.omega1(2, 2, 3) == 1
        assert sum(1 for i in range(3) for j in range(3) for k in range(3)
                   if p.omega[i][j][k] != 0) == 1

    def test_permute_basis_rejects_non_permutation(self):
        t = tensor_from({})
        with pytest.raises(ParseError):
            t.permute_basis((0, 0, 1))

    @given(random_tensors())
    @settings(max_examples=20)
    def test_permutation_round_trip(self, t):
        sigma = (1, 2, 0)
        inverse = (2, 0, 1)
        assert t.permute_basis(sigma).permute_basis(inverse).omega == t.omega

    def test_transpose_product(self):
        t = tensor_from({(1, 2, 3): Fraction(5)})
        o = t.transpose_product()
        assert o.omega1(2, 1, 3) == 5 and o.omega1(1, 2, 3) == 0
