"""Exact integer matrices, Smith normal form with certified transforms,
cokernels, and the canonical class space coordinates."""

import random

import pytest

from braidfloer.snf import (AbelianGroup, ClassSpace, IntMatrix, cokernel,
                            smith_normal_form)

from _samplers import random_matrix


def M(*rows):
    return IntMatrix.from_rows(rows)


class TestIntMatrix:
    def test_construction_and_shape(self):
        m = M((1, 2), (3, 4), (5, 6))
        assert (m.rows, m.cols) == (3, 2)
        assert m[2, 1] == 6
        assert IntMatrix.zero(2, 3).rows == 2
        assert IntMatrix.from_rows(()).rows == 0

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            M((1, 2), (3,))

    def test_non_integer_rejected(self):
        with pytest.raises(TypeError):
            M((1.5, 2))

    def test_mul(self):
        a = M((1, 2), (3, 4))
        b = M((0, 1), (1, 0))
        assert a.mul(b) == M((2, 1), (4, 3))
        assert a.mul_vec((1, 1)) == (3, 7)
        with pytest.raises(ValueError):
            a.mul(M((1, 2),))

    def test_trace_and_transpose(self):
        a = M((1, 2), (3, 4))
        assert a.trace() == 5
        assert a.transpose() == M((1, 3), (2, 4))
        with pytest.raises(ValueError):
            M((1, 2),).trace()

    def test_det(self):
        assert M((1, 1), (-1, 2)).det() == 3
        assert IntMatrix.identity(4).det() == 1
        assert M((2, 4), (1, 2)).det() == 0
        assert M((0, 1, 2), (1, 0, 3), (4, -3, 8)).det() == -2
        assert IntMatrix.from_rows(()).det() == 1

    def test_unimodular_inverse(self):
        u = M((2, 1), (1, 1))
        assert u.is_unimodular()
        assert u.mul(u.inverse_unimodular()) == IntMatrix.identity(2)
        with pytest.raises(ValueError):
            M((2, 0), (0, 2)).inverse_unimodular()


class TestSmithNormalForm:
    def test_frozen_examples(self):
        assert smith_normal_form(M((1, 1), (-1, 2))).diagonal() == (1, 3)
        assert smith_normal_form(M((2, 0), (0, 3))).diagonal() == (1, 6)
        assert smith_normal_form(M((4, 6), (2, 4))).diagonal() == (2, 2)
        assert smith_normal_form(IntMatrix.zero(2, 3)).diagonal() == (0, 0)
        assert smith_normal_form(M((6,),)).diagonal() == (6,)
        assert smith_normal_form(M((-6,),)).diagonal() == (6,)

    def test_certificates(self):
        rng = random.Random(71)
        for _ in range(300):
            m = random_matrix(rng)
            res = smith_normal_form(m)
            assert res.u.mul(m).mul(res.v) == res.s
            assert res.u.is_unimodular()
            assert res.v.is_unimodular()
            diag = res.diagonal()
            for i in range(res.s.rows):
                for j in range(res.s.cols):
                    if i != j:
                        assert res.s[i, j] == 0
            assert all(x >= 0 for x in diag)
            for prev, cur in zip(diag, diag[1:]):
                if cur != 0:
                    assert prev != 0 and cur % prev == 0
                # zeros only at the end
                if prev == 0:
                    assert cur == 0

    def test_empty_shapes(self):
        for m in (IntMatrix.from_rows(()), IntMatrix.zero(0, 3),
                  IntMatrix.zero(3, 0)):
            res = smith_normal_form(m)
            assert res.u.mul(m).mul(res.v) == res.s


class TestCokernel:
    def test_cases(self):
        assert cokernel(M((2,),)) == AbelianGroup(0, (2,))
        assert cokernel(IntMatrix.zero(2, 2)) == AbelianGroup(2, ())
        assert cokernel(M((1, 1), (-1, 2))) == AbelianGroup(0, (3,))
        assert cokernel(M((2, 3),)) == AbelianGroup(0, ())
        assert cokernel(IntMatrix.identity(3)) == AbelianGroup(0, ())
        assert cokernel(M((2, 0), (0, 3))) == AbelianGroup(0, (6,))

    def test_group_api(self):
        g = AbelianGroup(1, (2, 4))
        assert g.order() is None
        assert g.pretty() == "Z x Z/2 x Z/4"
        assert AbelianGroup(0, (5,)).order() == 5
        assert AbelianGroup(0, ()).pretty() == "0"
        with pytest.raises(ValueError):
            AbelianGroup(0, (3, 4))  # no divisibility
        with pytest.raises(ValueError):
            AbelianGroup(0, (1,))


class TestClassSpace:
    def test_finite_space(self):
        cs = ClassSpace.from_matrix(M((1, 1), (-1, 2)))
        assert cs.invariant_factors() == (3,)
        assert cs.group() == AbelianGroup(0, (3,))
        assert cs.order() == 3
        assert cs.enumerate_labels() == ((0,), (1,), (2,))
        assert cs.project((0, 0)) == (0,)

    def test_projection_kills_the_column_span(self):
        rng = random.Random(73)
        for _ in range(200):
            m = random_matrix(rng, max_dim=3, max_entry=5)
            if m.rows == 0:
                continue
            cs = ClassSpace.from_matrix(m)
            v = [rng.randint(-9, 9) for _ in range(m.rows)]
            shift = list(v)
            for j in range(m.cols):
                k = rng.randint(-3, 3)
                for i in range(m.rows):
                    shift[i] += k * m[i, j]
            assert cs.project(v) == cs.project(shift)

    def test_representatives_round_trip(self):
        rng = random.Random(79)
        seen_nontrivial = 0
        for _ in range(200):
            m = random_matrix(rng, max_dim=3, max_entry=5)
            cs = ClassSpace.from_matrix(m)
            if cs.order() is None or cs.order() > 60:
                continue
            for label in cs.enumerate_labels():
                rep = cs.representative_vector(label)
                assert cs.project(rep) == label
            if cs.order() > 1:
                seen_nontrivial += 1
        assert seen_nontrivial > 10

    def test_element_orders(self):
        cs = ClassSpace.from_matrix(M((4, 0), (0, 6)))
        assert cs.invariant_factors() == (2, 12)
        orders = {cs.element_order(label) for label in cs.enumerate_labels()}
        assert orders == {1, 2, 3, 4, 6, 12}
        assert cs.element_order((0, 0)) == 1

    def test_infinite_space(self):
        cs = ClassSpace.from_matrix(IntMatrix.zero(2, 2))
        assert cs.order() is None
        assert cs.element_order((1, 0)) == 0
        with pytest.raises(ValueError):
            cs.enumerate_labels()
