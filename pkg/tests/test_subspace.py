"""Line/plane canonical forms, ideal membership, and quotients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ideals3.algebra import StructureTensor
from ideals3.errors import DegenerateInput, DependentVectors, NotAnIdeal
from ideals3.scalar import FieldMode, GaussianRational
from ideals3.subspace import (
    Line,
    PlaneDescriptor,
    PlaneKind,
    classify_plane,
    is_ideal_line,
    is_ideal_plane,
    quotient_by_line,
    quotient_by_plane,
    quotient_product_check,
)

F = Fraction
small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def vec(*vals):
    return tuple(F(v) for v in vals)


def tensor_from(entries, mode=FieldMode.REAL):
    return StructureTensor.from_entries(entries, mode)


class TestLine:
    def test_normalizes_pivot(self):
        assert Line(vec(0, 2, 4)).coords == vec(0, 1, 2)
        assert Line(vec(-3, 6, 0)).coords == vec(1, -2, 0)

    def test_rejects_zero(self):
        with pytest.raises(DegenerateInput):
            Line(vec(0, 0, 0))

    def test_equality_up_to_scale(self):
        assert Line(vec(2, 4, 6)) == Line(vec(1, 2, 3))
        assert Line(vec(0, 0, 5)) == Line(vec(0, 0, 1))

    def test_pivot(self):
        assert Line(vec(0, 0, 7)).pivot == 2
        assert Line(vec(5, 0, 0)).pivot == 0


class TestClassifyPlane:
    def test_type_i(self):
        d = classify_plane(vec(1, 0, 0), vec(0, 1, 0), FieldMode.REAL)
        assert d.kind is PlaneKind.TYPE_I

    def test_type_ii(self):
        d = classify_plane(vec(3, 1, 0), vec(0, 0, 1), FieldMode.REAL)
        assert d.kind is PlaneKind.TYPE_II and d.x == 3

    def test_type_iii_from_worked_example(self):
        # span{e1, e2 + 2 e3} is type III with x = 1/2
        d = classify_plane(vec(1, 0, 0), vec(0, 1, 2), FieldMode.REAL)
        assert d.kind is PlaneKind.TYPE_III and d.x == F(1, 2)

    def test_type_iii_x_zero(self):
        d = classify_plane(vec(1, 0, 0), vec(0, 0, 1), FieldMode.REAL)
        assert d.kind is PlaneKind.TYPE_III and d.x == 0

    def test_type_iv(self):
        d = classify_plane(vec(2, 1, 0), vec(1, 0, 5), FieldMode.REAL)
        assert d.kind is PlaneKind.TYPE_IV and d.x == 2 and d.y == 5

    def test_rejects_dependent(self):
        with pytest.raises(DependentVectors):
            classify_plane(vec(1, 2, 3), vec(2, 4, 6), FieldMode.REAL)

    def test_invariant_under_span_change(self):
        u, v = vec(2, 1, 0), vec(1, 0, 5)
        d1 = classify_plane(u, v, FieldMode.REAL)
        w1 = tuple(a + b for a, b in zip(u, v))
        w2 = tuple(3 * a - b for a, b in zip(u, v))
        d2 = classify_plane(w1, w2, FieldMode.REAL)
        assert d1 == d2

    @given(st.lists(small_fracs, min_size=6, max_size=6))
    @settings(max_examples=60)
    def test_descriptor_plane_matches_input_span(self, vals):
        u, v = tuple(vals[:3]), tuple(vals[3:])
        minors = [
            u[0] * v[1] - u[1] * v[0],
            u[0] * v[2] - u[2] * v[0],
            u[1] * v[2] - u[2] * v[1],
        ]
        if all(m == 0 for m in minors):
            return
        d = classify_plane(u, v, FieldMode.REAL)
        a, b = d.spanning_vectors(FieldMode.REAL)
        # u and v must lie in span{a, b}
        for w in (u, v):
            det = [
                [w[0], a[0], b[0]],
                [w[1], a[1], b[1]],
                [w[2], a[2], b[2]],
            ]
            from ideals3.poly import matrix_det
            assert matrix_det(det) == 0

    def test_descriptor_validation(self):
        with pytest.raises(DegenerateInput):
            PlaneDescriptor(PlaneKind.TYPE_I, x=F(1))
        with pytest.raises(DegenerateInput):
            PlaneDescriptor(PlaneKind.TYPE_II)
        with pytest.raises(DegenerateInput):
            PlaneDescriptor(PlaneKind.TYPE_IV, x=F(1), y=F(0))


class TestIdealMembership:
    def test_line_ideal_in_diagonal_algebra(self):
        # e_i e_i = e_i: each axis line is an ideal
        t = tensor_from({(i, i, i): F(1) for i in (1, 2, 3)})
        assert is_ideal_line(t, Line(vec(1, 0, 0)))
        assert is_ideal_line(t, Line(vec(0, 1, 0)))
        assert not is_ideal_line(t, Line(vec(1, 1, 0)))

    def test_line_not_ideal_when_products_leave(self):
        # e1 e1 = e2: span{e1} is not an ideal, span{e2} is
        t = tensor_from({(1, 1, 2): F(1)})
        assert not is_ideal_line(t, Line(vec(1, 0, 0)))
        assert is_ideal_line(t, Line(vec(0, 1, 0)))

    def test_plane_ideal_type_i(self):
        # products never reach e3 except from e3 e3
        t = tensor_from({(1, 1, 1): F(1), (3, 3, 3): F(1), (1, 2, 2): F(2)})
        assert is_ideal_plane(t, PlaneDescriptor(PlaneKind.TYPE_I))

    def test_plane_not_ideal(self):
        t = tensor_from({(1, 1, 3): F(1)})
        assert not is_ideal_plane(t, PlaneDescriptor(PlaneKind.TYPE_I))

    def test_plane_ideal_type_ii(self):
        # e1 e1 = e1 only: span{x e1 + e2, e3} must absorb products for x = 0
        t = tensor_from({(2, 2, 2): F(1), (3, 3, 2): F(1)})
        assert is_ideal_plane(t, PlaneDescriptor(PlaneKind.TYPE_II, x=F(0)))


class TestQuotient:
    def test_quotient_by_line(self):
        t = tensor_from({(1, 1, 1): F(1), (2, 2, 2): F(1), (3, 3, 3): F(1)})
        q = quotient_by_line(t, Line(vec(0, 0, 1)))
        assert q.dim == 2
        assert q.complement_indices == (0, 1)
        # f1 f1 = f1, f2 f2 = f2, mixed products vanish
        assert q.gamma[0][0][0] == 1 and q.gamma[1][1][1] == 1
        assert q.gamma[0][1][0] == 0 and q.gamma[0][1][1] == 0

    def test_quotient_by_plane(self):
        t = tensor_from({(3, 3, 3): F(1), (1, 1, 1): F(1)})
        q = quotient_by_plane(t, PlaneDescriptor(PlaneKind.TYPE_I))
        assert q.dim == 1
        assert q.complement_indices == (2,)
        assert q.gamma[0][0][0] == 1

    def test_quotient_rejects_non_ideal(self):
        t = tensor_from({(1, 1, 3): F(1)})
        with pytest.raises(NotAnIdeal):
            quotient_by_line(t, Line(vec(1, 0, 0)))
        with pytest.raises(NotAnIdeal):
            quotient_by_plane(t, PlaneDescriptor(PlaneKind.TYPE_I))

    def test_quotient_constants_respect_absorbed_products(self):
        # e1 e1 = e1 + e3, ideal span{e3}: quotient sees f1 f1 = f1
        t = tensor_from({(1, 1, 1): F(1), (1, 1, 3): F(1)})
        assert is_ideal_line(t, Line(vec(0, 0, 1)))
        q = quotient_by_line(t, Line(vec(0, 0, 1)))
        assert q.gamma[0][0][0] == 1 and q.gamma[0][0][1] == 0

    @given(st.lists(small_fracs, min_size=4, max_size=4))
    @settings(max_examples=30)
    def test_representative_independence(self, shifts):
        t = tensor_from({(1, 1, 1): F(1), (1, 1, 3): F(1), (2, 1, 2): F(3)})
        line = Line(vec(0, 0, 1))
        assert is_ideal_line(t, line)
        q = quotient_by_line(t, line)
        # representatives differ from complement vectors by ideal elements
        rep_a = (F(1), F(0), shifts[0])
        rep_b = (F(0), F(1), shifts[1])
        assert quotient_product_check(t, [list(line.coords)], q, rep_a, rep_b)
        rep_c = (F(2), F(5), shifts[2])
        rep_d = (F(-1), F(7), shifts[3])
        assert quotient_product_check(t, [list(line.coords)], q, rep_c, rep_d)

    def test_complement_index_type_iv_with_x_zero(self):
        # e2 lies inside span{0 e1 + e2, e1 + y e3}; the complement must dodge it
        d = PlaneDescriptor(PlaneKind.TYPE_IV, x=F(0), y=F(2))
        idx = d.complement_index()
        u, v = d.spanning_vectors(FieldMode.REAL)
        e = [F(0), F(0), F(0)]
        e[idx] = F(1)
        from ideals3.poly import matrix_det
        cols = [[e[r], u[r], v[r]] for r in range(3)]
        assert matrix_det(cols) != 0

    def test_gaussian_mode_quotient(self):
        i = GaussianRational(0, 1)
        t = StructureTensor.from_entries(
            {(1, 1, 1): i, (3, 3, 3): GaussianRational(1, 0)}, FieldMode.COMPLEX
        )
        line = Line((GaussianRational(0, 0), GaussianRational(1, 0), GaussianRational(0, 0)))
        assert is_ideal_line(t, line)
        q = quotient_by_line(t, line)
        assert q.gamma[0][0][0] == i
