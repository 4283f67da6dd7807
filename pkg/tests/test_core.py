from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, strategies as st

import maxplus as mp
from maxplus import EPS, TOP, DimensionError, DomainError, Matrix

from conftest import mat, rand_matrix

scalars = st.one_of(st.just(EPS), st.integers(min_value=-50, max_value=50))


class TestScalarAxioms:
    @given(scalars)
    def test_add_idempotent(self, a):
        assert mp.core.sadd(a, a) == a

    @given(scalars, scalars, scalars)
    def test_mul_distributes_over_add(self, a, b, c):
        lhs = mp.core.smul(a, mp.core.sadd(b, c))
        rhs = mp.core.sadd(mp.core.smul(a, b), mp.core.smul(a, c))
        assert lhs == rhs

    @given(scalars)
    def test_eps_neutral_and_absorbing(self, a):
        assert mp.core.sadd(a, EPS) == a
        assert mp.core.smul(a, EPS) == EPS
        assert mp.core.smul(EPS, a) == EPS

    @given(scalars, scalars, scalars)
    def test_mul_associative(self, a, b, c):
        assert mp.core.smul(a, mp.core.smul(b, c)) == mp.core.smul(mp.core.smul(a, b), c)

    def test_bottom_absorbs_top(self):
        assert mp.core.smul(EPS, TOP) == EPS
        assert mp.core.smul_min(TOP, EPS) == TOP


class TestMatrixConstruction:
    def test_rejects_top_by_default(self):
        with pytest.raises(DomainError):
            Matrix.of([[TOP]])
        assert Matrix.of([[TOP]], allow_top=True).data == ((TOP,),)

    def test_rejects_floats_and_bools(self):
        with pytest.raises(DomainError):
            Matrix.of([[1.5]])
        with pytest.raises(DomainError):
            Matrix.of([[True]])

    def test_rejects_ragged(self):
        with pytest.raises(DimensionError):
            Matrix.of([[0, 1], [2]])

    def test_zero_row_matrix_needs_width(self):
        with pytest.raises(DimensionError):
            Matrix.of([])
        assert Matrix.of([], cols=3).cols == 3

    def test_big_integers_stay_exact(self):
        big = 2**80
        m = mp.mat_mul(Matrix.of([[big]]), Matrix.of([[big]]))
        assert m.data[0][0] == 2 * big


class TestAdd:
    def test_eps_neutral(self):
        a = mat([[0, EPS], [EPS, 1]])
        assert mp.mat_add(a, mp.eps_matrix(2, 2)).data == a.data

    def test_scalar_max(self):
        assert mp.mat_add(mat([[1]]), mat([[3]])).data == ((3,),)

    def test_commutes_with_entrywise_recomputation(self):
        rng = random.Random(7)
        for _ in range(50):
            a = rand_matrix(rng, 3, 3)
            b = rand_matrix(rng, 3, 3)
            s = mp.mat_add(a, b)
            assert s.data == mp.mat_add(b, a).data
            for i in range(3):
                for j in range(3):
                    assert s.data[i][j] == max(a.data[i][j], b.data[i][j])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            mp.mat_add(mat([[0]]), mat([[0, 1]]))


class TestMul:
    def test_small_system_step(self):
        a = mat([[0, EPS], [EPS, 1]])
        x = mat([[0], [0]])
        assert mp.mat_mul(a, x).col(0) == (0, 1)

    def test_identity(self):
        rng = random.Random(8)
        m = rand_matrix(rng, 3, 4)
        assert mp.mat_mul(mp.identity(3), m).data == m.data

    def test_selection_row_picks_state_row(self, flowshop):
        fa = mp.mat_mul(flowshop["F"], flowshop["A"])
        # row 1 of F selects coordinate 1, so row 1 of F A is row 1 of A
        assert fa.data[0] == flowshop["A"].data[0]

    def test_associative(self):
        rng = random.Random(9)
        for _ in range(50):
            a = rand_matrix(rng, 2, 3)
            b = rand_matrix(rng, 3, 2)
            c = rand_matrix(rng, 2, 2)
            assert (mp.mat_mul(mp.mat_mul(a, b), c).data
                    == mp.mat_mul(a, mp.mat_mul(b, c)).data)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            mp.mat_mul(mat([[0, 1]]), mat([[0, 1]]))


class TestLeftResidual:
    def test_diagonal_forced(self):
        a = mat([[0, EPS], [EPS, 1]])
        b = mat([[3], [4]])
        x = mp.left_residual(a, b)
        assert x.col(0) == (3, 3)
        assert mp.mat_mul(a, x).data == b.data

    def test_min_forced(self):
        x = mp.left_residual(mat([[0], [0]]), mat([[2], [5]]))
        assert x.col(0) == (2,)

    def test_empty_column_gives_top(self):
        x = mp.left_residual(mat([[EPS], [EPS]]), mat([[0], [0]]))
        assert x.col(0) == (TOP,)

    def test_eps_target_forces_eps(self):
        x = mp.left_residual(mat([[0], [0]]), mat([[EPS], [5]]))
        assert x.col(0) == (EPS,)

    def test_galois_connection_on_grid(self):
        import numpy as np
        from _oracles import apply_many, grid, to_np
        rng = random.Random(10)
        values = [EPS] + list(range(-6, 7))
        for _ in range(30):
            a = rand_matrix(rng, 3, 3, -5, 5)
            b = rand_matrix(rng, 3, 1, -5, 5)
            x = mp.left_residual(a, b)
            xv = np.array([float(v) for v in x.col(0)])
            ys = grid(values, 3)
            lhs = np.all(apply_many(to_np(a), ys) <= to_np(b).T, axis=1)
            rhs = np.all(ys <= xv, axis=1)
            assert np.array_equal(lhs, rhs)


class TestRightResidual:
    def test_identity(self):
        h = mp.right_residual(mat([[3, 4]]), mp.identity(2))
        assert h.data == ((3, 4),)

    def test_scalar_division(self):
        assert mp.right_residual(mat([[0]]), mat([[5]])).data == ((-5,),)

    def test_greatest_on_integer_grid(self):
        import itertools
        rng = random.Random(11)
        for _ in range(20):
            a = rand_matrix(rng, 2, 3, -2, 2)
            b = rand_matrix(rng, 1, 3, -2, 2)
            h = mp.right_residual(b, a)
            hv = h.data[0]
            assert mp.mat_le(mp.mat_mul(h, a), b)
            pool = [EPS] + list(range(-6, 7))
            for cand in itertools.product(pool, repeat=2):
                cm = Matrix.of([list(cand)])
                if mp.mat_le(mp.mat_mul(cm, a), b):
                    assert all(c <= v for c, v in zip(cand, hv))


class TestMinPlus:
    def test_min_plus_identity(self):
        ident = mp.negate_transpose(mp.identity(3))
        z = Matrix.of([[5], [EPS], [-2]])
        assert mp.min_plus_mul(ident, z).data == z.data

    def test_top_drops_term(self):
        p = Matrix.of([[0, TOP]], allow_top=True)
        q = mat([[5], [9]])
        assert mp.min_plus_mul(p, q).data == ((5,),)

    def test_reconstruction_identity_on_selection_matrix(self, flowshop):
        f = flowshop["F"]
        inner = mp.min_plus_mul(mp.negate_transpose(f), f)
        assert mp.mat_mul(f, inner).data == f.data

    def test_residual_is_min_plus_by_negated_transpose(self):
        rng = random.Random(12)
        for _ in range(100):
            a = rand_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), -5, 5)
            b = rand_matrix(rng, a.rows, rng.randint(1, 2), -5, 5)
            assert (mp.left_residual(a, b).data
                    == mp.min_plus_mul(mp.negate_transpose(a), b).data)


class TestNegateTranspose:
    def test_row_to_column(self):
        nt = mp.negate_transpose(mat([[0, EPS]]))
        assert nt.data == ((0,), (TOP,))

    def test_scalar(self):
        assert mp.negate_transpose(mat([[2]])).data == ((-2,),)

    def test_involution(self):
        rng = random.Random(13)
        m = rand_matrix(rng, 3, 4)
        assert mp.negate_transpose(mp.negate_transpose(m)).data == m.data


class TestJson:
    def test_documented_encoding(self):
        m = mat([[0, EPS], [EPS, 1]])
        obj = mp.matrix_to_json(m)
        assert obj == {"rows": 2, "cols": 2, "data": [[0, None], [None, 1]]}

    def test_round_trip_is_bit_exact(self):
        rng = random.Random(14)
        for _ in range(50):
            m = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), -9, 9)
            back = mp.matrix_from_json(json.loads(json.dumps(mp.matrix_to_json(m))))
            assert back.data == m.data

    def test_round_trip_with_top(self):
        m = mp.left_residual(mat([[EPS], [EPS]]), mat([[0], [0]]))
        back = mp.matrix_from_json(mp.matrix_to_json(m))
        assert back.data == m.data

    def test_zero_row_matrix(self):
        m = Matrix.of([], cols=4)
        back = mp.matrix_from_json(mp.matrix_to_json(m))
        assert back.rows == 0 and back.cols == 4

    def test_ordinary_load_rejects_top(self):
        with pytest.raises(DomainError):
            mp.matrix_from_json({"rows": 1, "cols": 1, "data": [["+inf"]]},
                                allow_top=False)
