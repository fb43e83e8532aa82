"""
上同调模块测试
"""

import pytest

from lyat.algebra import LYAlgebra, generalized_heisenberg, heisenberg
from lyat.cohomology import (
    CochainPair,
    cochain_space,
    delta_pair,
    delta_star,
    delta_zero,
    h1_cochains,
    h23,
    h45,
    is_cocycle23,
    solve_coboundary,
)
from lyat.exactlinalg import Matrix
from lyat.exceptions import BudgetExceededError, DimensionMismatchError
from lyat.representation import adjoint, representation_axioms_pass, trivial_rep
from lyat.utils.config import config_manager


def _random_cochain1(field, n, m, rng):
    return Matrix.from_rows(field, [[field.random_scalar(rng) for _ in range(n)] for _ in range(m)], n)


def _random_pair(r, rng):
    f = r.field
    size = cochain_space(2, r.dim, r.vdim).dim + cochain_space(3, r.dim, r.vdim).dim
    return CochainPair.from_coords(f, r.dim, r.vdim, 1, [f.random_scalar(rng) for _ in range(size)])


class TestCochains:

    def test_space_tuples_are_pairwise_increasing(self):
        space = cochain_space(3, 3, 1)
        assert all(i < j for i, j, _ in space.tuples)
        assert space.dim == 3 * 3
        assert cochain_space(4, 3, 2).dim == 3 * 3 * 2

    def test_from_entries_canonicalizes(self, QQ):
        c = CochainPair.from_entries(QQ, 2, 1, {(1, 0): [1]}, {(1, 0, 1): [2]})
        assert c.f(0, 1) == (-1,)
        assert c.f(1, 0) == (1,)
        assert c.g(0, 1, 1) == (-2,)
        assert c.f(0, 0) == (0,)

    def test_from_entries_rejects_diagonal(self, QQ):
        with pytest.raises(DimensionMismatchError):
            CochainPair.from_entries(QQ, 2, 1, {(0, 0): [1]}, {})

    def test_multilinear_extension(self, QQ):
        c = CochainPair.from_entries(QQ, 2, 1, {(0, 1): [1]}, {})
        # α(x, y) = x1 y2 - x2 y1
        assert c.f_at((1, 2), (3, 4)) == (-2,)

    def test_linear_operations(self, QQ):
        c = CochainPair.from_entries(QQ, 2, 1, {(0, 1): [1]}, {(0, 1, 0): [1]})
        assert (c - c).is_zero()
        assert (c + c) == c.scale(2)


class TestCoboundary:

    def test_delta_squares_to_zero(self, h1, QQ, rng):
        r = adjoint(h1)
        for _ in range(3):
            lam = _random_cochain1(QQ, 3, 3, rng)
            c = delta_zero(r, lam)
            assert is_cocycle23(r, c)
            assert delta_pair(r, c).is_zero()

    def test_solve_coboundary(self, h1, QQ, rng):
        r = adjoint(h1)
        lam = _random_cochain1(QQ, 3, 3, rng)
        c = delta_zero(r, lam)
        mu = solve_coboundary(r, c)
        assert mu is not None
        assert delta_zero(r, mu) == c

    def test_non_coboundary(self, h1, QQ):
        # 平凡表示下 δ_0 λ(e1, e2) = -λ(e)，取 g 分量使方程无解
        r = trivial_rep(h1, 1)
        c = CochainPair.from_entries(QQ, 3, 1, {}, {(0, 1, 0): [1]})
        assert solve_coboundary(r, c) is None

    def test_shape_mismatch(self, h1, QQ):
        with pytest.raises(DimensionMismatchError):
            delta_zero(adjoint(h1), Matrix.zeros(QQ, 2, 3))


class TestGroups:

    def test_abelian_trivial(self, QQ):
        r = trivial_rep(LYAlgebra.abelian(QQ, 2), 1)
        assert len(h1_cochains(r)) == 2
        groups = h23(r)
        assert groups.summary() == {"z_dim": 3, "b_dim": 0, "h_dim": 3}
        assert len(groups.representatives()) == 3
        assert h45(r).summary() == {"z_dim": 3, "b_dim": 0, "h_dim": 3}

    def test_class_equal_modulo_coboundaries(self, h1, QQ, rng):
        r = adjoint(h1)
        groups = h23(r)
        assert groups.b_dim <= groups.z_dim
        c = delta_zero(r, _random_cochain1(QQ, 3, 3, rng))
        zero = CochainPair.zero(QQ, 3, 3)
        assert groups.class_equal(c, zero)
        assert groups.representative_lift(c).is_zero()

    def test_h45_respects_dimension_limit(self, QQ):
        config_manager.update_config({"compute": {"h45_max_dim": 1}})
        r = trivial_rep(LYAlgebra.abelian(QQ, 2), 1)
        with pytest.raises(BudgetExceededError):
            h45(r)


class TestComplexProperty:

    def test_coboundaries_are_cocycles(self, rep_sampler, rng, F3):
        reps = [rep_sampler.sample(max_n=4, max_m=2) for _ in range(20)]
        reps += [adjoint(heisenberg(1, F3)), trivial_rep(generalized_heisenberg(1, F3), 2)]
        checked = 0
        for r in reps:
            assert representation_axioms_pass(r)
            for _ in range(25):
                c = delta_zero(r, _random_cochain1(F3, r.dim, r.vdim, rng))
                assert delta_pair(r, c).is_zero()
                first, second = delta_star(r, c)
                assert first.is_zero() and second.is_zero()
                assert is_cocycle23(r, c)
                checked += 1
        assert checked >= 500

    def test_delta_squares_to_zero_on_pairs(self, rep_sampler, rng, F3):
        reps = [rep_sampler.sample(max_n=3, max_m=2) for _ in range(8)]
        reps.append(trivial_rep(heisenberg(1, F3), 1))
        for r in reps:
            for _ in range(5):
                c = _random_pair(r, rng)
                once = delta_pair(r, c)
                assert once.level == 2
                assert delta_pair(r, once).is_zero()

    def test_linearity(self, rep_sampler, rng, F3):
        for _ in range(10):
            r = rep_sampler.sample()
            s, t = F3.random_scalar(rng), F3.random_scalar(rng)
            lam1 = _random_cochain1(F3, r.dim, r.vdim, rng)
            lam2 = _random_cochain1(F3, r.dim, r.vdim, rng)
            assert delta_zero(r, lam1.scale(s) + lam2.scale(t)) == (
                delta_zero(r, lam1).scale(s) + delta_zero(r, lam2).scale(t)
            )

            c1, c2 = _random_pair(r, rng), _random_pair(r, rng)
            combined = c1.scale(s) + c2.scale(t)
            assert delta_pair(r, combined) == delta_pair(r, c1).scale(s) + delta_pair(r, c2).scale(t)
            for whole, part1, part2 in zip(delta_star(r, combined), delta_star(r, c1), delta_star(r, c2)):
                assert whole.values == F3.vector(s * x + t * y for x, y in zip(part1.values, part2.values))
