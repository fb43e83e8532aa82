"""
阿贝尔扩张测试
"""

import pytest

from lyat.algebra import LYAlgebra, check_axioms, generalized_heisenberg, heisenberg, is_morphism
from lyat.cohomology import CochainPair, cochain_space, delta_zero, h23, is_cocycle23
from lyat.exactlinalg import Matrix, SubspaceBasis
from lyat.exceptions import NotACocycleError, NotAnIdealError, NotASectionError, TrivialCenterError
from lyat.extension import (
    are_equivalent,
    build_extension,
    build_extension_raw,
    central_extension,
    from_total,
    same_representation,
    same_structure,
    section_shift_witness,
)
from lyat.representation import adjoint, semidirect, trivial_rep


def _random_pair(r, rng):
    f = r.field
    size = cochain_space(2, r.dim, r.vdim).dim + cochain_space(3, r.dim, r.vdim).dim
    return CochainPair.from_coords(f, r.dim, r.vdim, 1, [f.random_scalar(rng) for _ in range(size)])


def _random_cocycle(r, rng):
    """Z^(2,3) 基的随机线性组合"""
    f = r.field
    z = h23(r).z_basis
    coords = [f.zero] * z.ambient_dim
    for v in z.vectors:
        c = f.random_scalar(rng)
        coords = [x + c * y for x, y in zip(coords, v)]
    return CochainPair.from_coords(f, r.dim, r.vdim, 1, coords)


def _random_section(e, rng):
    f = e.field
    shift = Matrix.from_rows(f, [[f.random_scalar(rng) for _ in range(e.n)] for _ in range(e.vdim)], e.n)
    return e.section + e.inclusion @ shift


@pytest.fixture
def corpus(h1_ext, h1_ext_f3, F3, rep_sampler, rng):
    """测试用扩张：中心扩张、分裂扩张、由总代数反推的扩张与随机上闭链构造的扩张"""
    h1 = heisenberg(1)
    split = build_extension(h1, adjoint(h1), CochainPair.zero(h1.field, 3, 3))
    V = SubspaceBasis.span(h1.field, 6, [h1.field.unit_vector(6, t) for t in range(3, 6)])
    extensions = [
        h1_ext,
        h1_ext_f3,
        central_extension(generalized_heisenberg(1)),
        central_extension(heisenberg(2, F3)),
        split,
        from_total(split.total, V),
    ]
    for _ in range(4):
        r = rep_sampler.sample(max_n=3, max_m=2)
        extensions.append(build_extension(r.algebra, r, _random_cocycle(r, rng)))
    return extensions


class TestCentralExtension:

    def test_heisenberg_data(self, h1_ext):
        e = h1_ext
        assert (e.n, e.vdim) == (2, 1)
        assert e.base.is_abelian()
        assert e.rep.is_trivial()
        assert e.cocycle.f(0, 1) == (1,)
        assert e.cocycle.g(0, 1, 0) == (1,)
        assert e.cocycle.g(0, 1, 1) == (0,)

    def test_structure_matrices(self, h1_ext):
        e = h1_ext
        assert (e.projection @ e.inclusion).is_zero()
        assert (e.projection @ e.section).is_identity()
        assert e.splitting() @ e.inclusion == Matrix.identity(e.field, 1)

    def test_trivial_center(self, QQ):
        # sl(2) 式的非幂零代数中心为零
        L = LYAlgebra.from_products(
            QQ, 2, {}, {(0, 1, 0): (2, 0), (0, 1, 1): (0, -2)}
        )
        with pytest.raises(TrivialCenterError):
            central_extension(L)


class TestBuildAndRecover:

    def test_build_reproduces_total(self, h1_ext, h1):
        e = h1_ext
        rebuilt = build_extension(e.base, e.rep, e.cocycle)
        assert same_structure(rebuilt.total, h1)

    def test_semidirect_round_trip(self, h1, QQ):
        r = adjoint(h1)
        e = build_extension(h1, r, CochainPair.zero(QQ, 3, 3))
        assert same_structure(e.total, semidirect(r))

        V = SubspaceBasis.span(QQ, 6, [QQ.unit_vector(6, t) for t in range(3, 6)])
        recovered = from_total(e.total, V)
        assert same_structure(recovered.base, h1)
        assert same_representation(recovered.rep, r)
        assert recovered.cocycle.is_zero()

    def test_not_a_cocycle(self, h1, QQ):
        # 平凡表示下 LY3 要求 β 的轮换和为零
        c = CochainPair.from_entries(QQ, 3, 1, {}, {(0, 1, 2): [1]})
        with pytest.raises(NotACocycleError):
            build_extension(h1, trivial_rep(h1, 1), c)

    def test_from_total_requires_abelian_ideal(self, h1, QQ):
        with pytest.raises(NotAnIdealError):
            from_total(h1, SubspaceBasis.span(QQ, 3, [[1, 0, 0]]))


class TestSections:

    def _shifted(self, e):
        shift = Matrix.from_rows(e.field, [[1, 2]], 2)
        return e.section + e.inclusion @ shift

    def test_section_shift_witness(self, h1_ext):
        e = h1_ext
        t = self._shifted(e)
        lam = section_shift_witness(e, t)
        assert lam == Matrix.from_rows(e.field, [[-1, -2]], 2)
        assert delta_zero(e.rep, lam) == e.cocycle - e.with_section(t).cocycle

    def test_with_section_rejects_non_section(self, h1_ext):
        e = h1_ext
        with pytest.raises(NotASectionError):
            e.with_section(e.section.scale(2))


class TestEquivalence:

    def test_extension_equivalent_to_itself(self, h1_ext):
        e = h1_ext
        phi = are_equivalent(e, e)
        assert phi is not None
        assert phi @ e.inclusion == e.inclusion
        assert e.projection @ phi == e.projection
        assert is_morphism(e.total, e.total, phi)

    def test_scaled_cocycle_is_not_equivalent(self, h1_ext):
        e = h1_ext
        other = build_extension(e.base, e.rep, e.cocycle.scale(2))
        assert are_equivalent(e, other) is None

    def test_split_extension_differs(self):
        e = central_extension(heisenberg(1))
        zero = CochainPair.zero(e.field, 2, 1)
        split = build_extension(e.base, e.rep, zero)
        assert are_equivalent(split, e) is None


class TestRawConstruction:

    def test_cocycle_iff_axioms(self, rep_sampler, rng):
        verdicts = []
        for k in range(60):
            r = rep_sampler.sample(max_n=3, max_m=2)
            c = _random_cocycle(r, rng) if k % 2 == 0 else _random_pair(r, rng)
            cocycle = is_cocycle23(r, c)
            assert check_axioms(build_extension_raw(r.algebra, r, c)).passed == cocycle
            verdicts.append(cocycle)
        assert any(verdicts)
        assert not all(verdicts)


class TestSectionChange:

    def test_induced_cocycles(self, corpus):
        for e in corpus:
            assert is_cocycle23(e.rep, e.cocycle)

    def test_random_sections(self, corpus, rng):
        for e in corpus:
            for _ in range(50):
                t = _random_section(e, rng)
                lam = section_shift_witness(e, t)
                shifted = e.with_section(t)
                assert is_cocycle23(e.rep, shifted.cocycle)
                assert delta_zero(e.rep, lam) == e.cocycle - shifted.cocycle
