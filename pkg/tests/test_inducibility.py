"""
可诱导性测试
"""

import pytest

from lyat.algebra import is_automorphism
from lyat.cohomology import CochainPair
from lyat.enumeration import enumerate_compatible_pairs
from lyat.exactlinalg import Matrix
from lyat.exceptions import IncompatiblePairError, NotAnAutomorphismError
from lyat.extension import build_extension
from lyat.inducibility import (
    REASON_INCOMPATIBLE,
    REASON_NONTRIVIAL_CLASS,
    AutPair,
    chi,
    check_pair,
    classify_automorphism,
    decide_inducible,
    h1_aut_iso,
    is_compatible,
    lambda1,
    lambda2,
    tau,
    wells_class,
    wells_cocycle,
)
from lyat.representation import adjoint


def _pair(field, kappa, psi_rows):
    return AutPair(Matrix.from_rows(field, [[kappa]], 1), Matrix.from_rows(field, psi_rows, 2))


def _random_section(e, rng):
    f = e.field
    shift = Matrix.from_rows(f, [[f.random_scalar(rng) for _ in range(e.n)] for _ in range(e.vdim)], e.n)
    return e.section + e.inclusion @ shift


class TestDecision:

    def test_identity_pair_lifts_to_identity(self, h1_ext):
        decision = decide_inducible(h1_ext, AutPair.identity(h1_ext))
        assert decision.inducible
        assert decision.reason is None
        assert decision.certificate.gamma.is_identity()

    def test_diagonal_two_is_nontrivial(self, h1_ext, QQ):
        # κ = 1，ψ = diag(2, 2)：α 被缩放 4 倍
        decision = decide_inducible(h1_ext, _pair(QQ, 1, [[2, 0], [0, 2]]))
        assert not decision.inducible
        assert decision.reason == REASON_NONTRIVIAL_CLASS
        assert decision.certificate is None

    def test_lower_triangular_lifts(self, h1_ext, QQ):
        pr = _pair(QQ, 2, [[1, 0], [1, 2]])
        decision = decide_inducible(h1_ext, pr)
        assert decision.inducible
        gamma = decision.certificate.gamma
        assert is_automorphism(h1_ext.total, gamma)
        assert tau(h1_ext, gamma) == pr

    def test_upper_triangular_does_not_lift(self, h1_ext, QQ):
        assert not decide_inducible(h1_ext, _pair(QQ, 1, [[1, 1], [0, 1]])).inducible

    def test_incompatible_pair(self, h1, QQ):
        # 伴随表示下 φ = diag(2, 1, 1) 与 ρ(e2) 不交换
        e = build_extension(h1, adjoint(h1), CochainPair.zero(QQ, 3, 3))
        phi = Matrix.from_rows(QQ, [[2, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
        pr = AutPair(phi, Matrix.identity(QQ, 3))
        assert not is_compatible(e, pr)
        decision = decide_inducible(e, pr)
        assert decision.reason == REASON_INCOMPATIBLE
        with pytest.raises(IncompatiblePairError):
            wells_cocycle(e, pr)


class TestWells:

    def test_wells_cocycle_of_identity_is_zero(self, h1_ext):
        assert wells_cocycle(h1_ext, AutPair.identity(h1_ext)).is_zero()

    def test_wells_class_witness(self, h1_ext, QQ):
        cls = wells_class(h1_ext, _pair(QQ, 1, [[2, 0], [0, 2]]))
        assert not cls.trivial
        assert cls.witness is None

    def test_lambda_maps(self, h1_ext, QQ):
        assert not lambda1(h1_ext, Matrix.from_rows(QQ, [[2]], 1)).trivial
        assert lambda1(h1_ext, Matrix.identity(QQ, 1)).trivial
        assert not lambda2(h1_ext, Matrix.from_rows(QQ, [[1, 0], [0, 2]], 2)).trivial

    def test_verdicts_do_not_depend_on_section(self, h1_ext, QQ, rng):
        pairs = [
            AutPair.identity(h1_ext),
            _pair(QQ, 1, [[2, 0], [0, 2]]),
            _pair(QQ, 2, [[1, 0], [1, 2]]),
            _pair(QQ, 1, [[1, 1], [0, 1]]),
        ]
        for _ in range(20):
            other = h1_ext.with_section(_random_section(h1_ext, rng))
            assert [wells_class(other, pr).trivial for pr in pairs] == [True, False, True, False]

    def test_verdicts_over_f3_do_not_depend_on_section(self, h1_ext_f3, rng):
        e = h1_ext_f3
        pairs = enumerate_compatible_pairs(e).pairs
        baseline = [wells_class(e, pr).trivial for pr in pairs]
        assert sum(baseline) == 6
        for _ in range(3):
            other = e.with_section(_random_section(e, rng))
            assert [wells_class(other, pr).trivial for pr in pairs] == baseline


class TestPairs:

    def test_check_pair_rejects_singular_psi(self, h1_ext, QQ):
        with pytest.raises(NotAnAutomorphismError):
            check_pair(h1_ext, _pair(QQ, 1, [[1, 1], [1, 1]]))

    def test_inverse_and_compose(self, QQ):
        pr = _pair(QQ, 2, [[1, 0], [1, 2]])
        assert pr.compose(pr.inverse()) == _pair(QQ, 1, [[1, 0], [0, 1]])


class TestH1Isomorphism:

    def test_chi_inverts_h1_aut_iso(self, h1_ext, QQ):
        lam = Matrix.from_rows(QQ, [[1, 3]], 2)
        gamma = h1_aut_iso(h1_ext, lam)
        cls = classify_automorphism(h1_ext, gamma)
        assert cls.in_aut_vl
        assert chi(h1_ext, gamma) == lam

    def test_chi_rejects_non_trivial_pair(self, h1_ext, QQ):
        gamma = decide_inducible(h1_ext, _pair(QQ, 2, [[1, 0], [1, 2]])).certificate.gamma
        with pytest.raises(NotAnAutomorphismError):
            chi(h1_ext, gamma)
