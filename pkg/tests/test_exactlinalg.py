"""
精确线性代数测试
"""

from fractions import Fraction

import pytest

from lyat.exactlinalg import (
    RATIONAL,
    FieldSpec,
    Matrix,
    SubspaceBasis,
    invert,
    kernel_basis,
    rank,
    rref,
    solve_affine,
)
from lyat.exceptions import DimensionMismatchError, FieldMismatchError, ScalarParseError


class TestFieldSpec:

    def test_parse_rational(self):
        assert RATIONAL.parse("-7/2") == Fraction(-7, 2)
        assert RATIONAL.parse(" 3 ") == Fraction(3)
        assert RATIONAL.format(Fraction(6, 4)) == "3/2"

    def test_parse_prime_reduces(self, F5):
        assert F5.parse("7") == 2
        assert F5.parse("1/2") == 3
        assert F5.parse("-1") == 4

    def test_zero_denominator_is_parse_error(self, F3):
        with pytest.raises(ScalarParseError):
            RATIONAL.parse("1/0")
        with pytest.raises(ScalarParseError):
            F3.parse("1/3")

    def test_garbage_is_parse_error(self):
        with pytest.raises(ScalarParseError):
            RATIONAL.parse("x")

    def test_prime_field_requires_prime(self):
        with pytest.raises(FieldMismatchError):
            FieldSpec.prime(4)
        with pytest.raises(FieldMismatchError):
            FieldSpec.prime(65537)

    def test_inverse_agrees_with_fermat(self):
        f = FieldSpec.prime(101)
        for a in range(1, 101):
            assert f.inv(a) == f.fermat_inv(a)
            assert f.normalize(a * f.inv(a)) == 1

    def test_elements_only_for_prime(self, F3):
        assert list(F3.elements()) == [0, 1, 2]
        with pytest.raises(FieldMismatchError):
            RATIONAL.elements()

    def test_random_nonzero(self, F2, rng):
        assert all(F2.random_nonzero(rng) == 1 for _ in range(20))
        assert all(RATIONAL.random_nonzero(rng, 2) != 0 for _ in range(20))


class TestMatrix:

    def test_arithmetic(self):
        a = Matrix.from_rows(RATIONAL, [[1, 2], [3, 4]])
        b = Matrix.from_rows(RATIONAL, [[0, 1], [1, 0]])
        assert (a @ b).entries == ((2, 1), (4, 3))
        assert (a + b - b) == a
        assert a.T.entries == ((1, 3), (2, 4))
        assert a.scale(Fraction(1, 2))[1, 1] == 2

    def test_shape_errors(self):
        a = Matrix.from_rows(RATIONAL, [[1, 2, 3]])
        with pytest.raises(DimensionMismatchError):
            a @ a
        with pytest.raises(DimensionMismatchError):
            a.apply([1, 2])

    def test_mixed_fields_rejected(self, F3):
        a = Matrix.identity(RATIONAL, 2)
        b = Matrix.identity(F3, 2)
        with pytest.raises(FieldMismatchError):
            a @ b

    def test_invert(self, F3):
        a = Matrix.from_rows(RATIONAL, [[2, 1], [1, 1]])
        assert (a @ invert(a)).is_identity()
        assert invert(Matrix.from_rows(RATIONAL, [[1, 2], [2, 4]])) is None
        m = Matrix.from_rows(F3, [[1, 1], [1, 2]])
        assert (invert(m) @ m).is_identity()
        assert invert(Matrix.from_rows(F3, [[1, 2], [2, 1]])) is None

    def test_rref_and_rank(self):
        m = Matrix.from_rows(RATIONAL, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        reduced, r, pivots = rref(m)
        assert r == 2 == rank(m)
        assert pivots == [0, 1]
        assert reduced.entries[0] == (1, 0, 1)
        assert reduced.entries[1] == (0, 1, 1)

    def test_kernel(self):
        m = Matrix.from_rows(RATIONAL, [[1, 1, 0], [0, 0, 1]])
        ker = kernel_basis(m)
        assert ker.dim == 1
        assert m.apply(ker.vectors[0]) == (0, 0)

    def test_solve_affine(self, F3):
        a = Matrix.from_rows(F3, [[1, 1], [0, 1]])
        sol = solve_affine(a, [2, 1])
        assert a.apply(sol.particular) == (2, 1)
        assert sol.homogeneous.dim == 0
        assert solve_affine(Matrix.from_rows(F3, [[1, 1], [1, 1]]), [0, 1]) is None


class TestSubspace:

    def test_span_is_canonical(self):
        u = SubspaceBasis.span(RATIONAL, 3, [[1, 1, 0], [0, 1, 1]])
        v = SubspaceBasis.span(RATIONAL, 3, [[1, 2, 1], [2, 2, 0]])
        assert u == v
        assert u.pivots == (0, 1)
        assert u.complement() == (2,)

    def test_membership_and_coordinates(self):
        u = SubspaceBasis.span(RATIONAL, 3, [[1, 0, 1], [0, 1, 1]])
        assert u.contains([2, 3, 5])
        assert not u.contains([0, 0, 1])
        assert u.coordinates([2, 3, 5]) == (2, 3)
        with pytest.raises(DimensionMismatchError):
            u.coordinates([0, 0, 1])

    def test_inclusion_matrix(self):
        u = SubspaceBasis.span(RATIONAL, 3, [[0, 0, 2]])
        assert u.inclusion_matrix().entries == ((0,), (0,), (1,))
        assert SubspaceBasis.zero(RATIONAL, 2).inclusion_matrix().shape == (2, 0)


def _random_matrix(field, rng, rows, cols):
    return Matrix.from_rows(
        field, [[field.random_scalar(rng) for _ in range(cols)] for _ in range(rows)], cols
    )


FIELDS = [RATIONAL, FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(5)]


class TestRandomMatrices:

    @pytest.mark.parametrize("field", FIELDS, ids=str)
    def test_rref_is_idempotent(self, field, rng):
        for _ in range(100):
            rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
            reduced, r, pivots = rref(_random_matrix(field, rng, rows, cols))
            again, r2, pivots2 = rref(reduced)
            assert again == reduced
            assert (r2, pivots2) == (r, pivots)

    @pytest.mark.parametrize("field", FIELDS, ids=str)
    def test_rank_of_transpose(self, field, rng):
        for _ in range(100):
            rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
            m = _random_matrix(field, rng, rows, cols)
            assert rank(m) == rank(m.T)

    @pytest.mark.parametrize("field", FIELDS, ids=str)
    def test_kernel_vectors_are_annihilated(self, field, rng):
        for _ in range(100):
            rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
            m = _random_matrix(field, rng, rows, cols)
            ker = kernel_basis(m)
            assert ker.dim == cols - rank(m)
            for k in ker.vectors:
                assert m.apply(k) == field.zero_vector(rows)

    @pytest.mark.parametrize("field", FIELDS, ids=str)
    def test_solve_affine_substitutes_back(self, field, rng):
        for _ in range(100):
            rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
            m = _random_matrix(field, rng, rows, cols)

            # 右端在像空间内时必有解
            b = m.apply([field.random_scalar(rng) for _ in range(cols)])
            sol = solve_affine(m, b)
            assert sol is not None
            assert m.apply(sol.particular) == b
            assert sol.homogeneous == kernel_basis(m)

            b = field.vector(field.random_scalar(rng) for _ in range(rows))
            sol = solve_affine(m, b)
            if sol is None:
                assert rank(m.hstack(Matrix.from_columns(field, [b], rows))) == rank(m) + 1
            else:
                assert m.apply(sol.particular) == b
