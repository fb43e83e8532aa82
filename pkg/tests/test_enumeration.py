"""
有限域穷举测试
"""

from dataclasses import replace

import pytest

from lyat.algebra import generalized_heisenberg, heisenberg
from lyat.cohomology import CochainPair
from lyat.enumeration import (
    EnumBudget,
    brute_force_inducible,
    compare_inducibility,
    enumerate_automorphisms,
    enumerate_compatible_pairs,
    enumerate_lift_subgroups,
    general_linear,
    is_group,
    split_cap,
    split_sections,
    verify_exact_sequences,
    wells_homomorphism_probe,
)
from lyat.exactlinalg import RATIONAL
from lyat.exceptions import BudgetExceededError, FieldMismatchError, PreconditionError
from lyat.extension import build_extension, central_extension
from lyat.inducibility import AutPair, decide_inducible
from lyat.representation import adjoint
from lyat.utils.config import config_manager


class TestAutomorphisms:

    def test_gl2_over_f2(self, F2):
        gl = general_linear(F2, 2)
        assert len(gl) == 6
        assert is_group(gl, F2)

    def test_gl2_over_f3(self, F3):
        assert len(general_linear(F3, 2)) == 48

    def test_heisenberg_automorphisms_form_group(self, F3):
        auts = enumerate_automorphisms(heisenberg(1, F3))
        assert is_group(auts, F3)
        assert auts == sorted(auts, key=lambda m: m.sort_key())

    def test_rational_field_rejected(self, h1):
        with pytest.raises(FieldMismatchError):
            enumerate_automorphisms(h1)

    def test_budget_is_hard_cap(self, F3):
        with pytest.raises(BudgetExceededError):
            enumerate_automorphisms(heisenberg(1, F3), EnumBudget(7, 6, 10))

    def test_dimension_budget(self, F3):
        config_manager.update_config({"enumeration": {"max_total_dim": 2}})
        with pytest.raises(BudgetExceededError):
            enumerate_automorphisms(heisenberg(1, F3))

    def test_cap_is_split_across_branches(self):
        assert split_cap(10, 4) == [3, 3, 2, 2]
        assert split_cap(3, 5) == [1, 1, 1, 0, 0]
        assert sum(split_cap(2_000_000, 26)) == 2_000_000

    def test_parallel_search_matches_serial(self, F3):
        L = heisenberg(1, F3)
        assert enumerate_automorphisms(L, workers=2) == enumerate_automorphisms(L, workers=1)

    def test_parallel_budget_is_hard_cap(self, F3):
        # 26 个分支共享 30 个节点，任何一支都不能单独用满全部上限
        with pytest.raises(BudgetExceededError):
            enumerate_automorphisms(heisenberg(1, F3), EnumBudget(7, 6, 30), workers=2)


class TestLifts:

    def test_aut_vl_matches_h1(self, h1_ext_f3):
        subgroups = enumerate_lift_subgroups(h1_ext_f3)
        assert len(subgroups.aut_vl) == 9
        assert subgroups.summary()["aut_vl"] == 9

    def test_compatible_pairs(self, h1_ext_f3):
        compatible = enumerate_compatible_pairs(h1_ext_f3)
        # 平凡表示：GL(1, 3) × GL(2, 3) 中每一对都相容
        assert len(compatible.pairs) == 2 * 48
        assert len(compatible.c1) == 2
        assert len(compatible.c2) == 48

    def test_brute_force_matches_decision(self, h1_ext_f3):
        e = h1_ext_f3
        one = AutPair.identity(e)
        assert brute_force_inducible(e, one) is not None
        # 𝔽₃ 上 det(2I) = 1 = κ，但 β 的条件仍不满足
        pr = AutPair(one.phi, one.psi.scale(2))
        assert brute_force_inducible(e, pr) is None

    def test_compare_inducibility(self, h1_ext_f3):
        comparison = compare_inducibility(h1_ext_f3)
        assert comparison.agree
        assert comparison.to_dict()["counts"] == {"pairs": 96, "compatible": 96, "inducible": 6}

    def test_split_sections_need_zero_cocycle(self, h1_ext_f3):
        with pytest.raises(PreconditionError):
            split_sections(h1_ext_f3)


class TestExactSequences:

    def test_central_extension_over_f3(self, h1_ext_f3):
        report = verify_exact_sequences(h1_ext_f3)
        assert report.passed, report.checks
        assert report.counts["h1_dim"] == 2
        assert report.counts["aut_vl"] == 9
        assert report.counts["fixing_v_and_l"] == 9
        assert report.notes

    def test_fixing_subgroup_is_independent_of_tau(self, h1_ext_f3, monkeypatch):
        subgroups = enumerate_lift_subgroups(h1_ext_f3)
        broken = replace(subgroups, aut_vl=subgroups.aut_vl[1:])
        monkeypatch.setattr("lyat.enumeration.sequences.enumerate_lift_subgroups", lambda e, b: broken)
        report = verify_exact_sequences(h1_ext_f3)
        assert report.checks["ker_tau_is_aut_vl"]
        assert not report.checks["aut_vl_fixes_v_and_l"]
        assert not report.passed

    def test_split_extension_over_f2(self, F2):
        e = central_extension(heisenberg(1, F2))
        split = build_extension(e.base, e.rep, CochainPair.zero(F2, 2, 1))
        report = verify_exact_sequences(split)
        assert report.passed, report.checks
        assert "aut_v_l_factorization" in report.checks

    def test_wells_probe_runs(self, F2):
        probe = wells_homomorphism_probe(central_extension(heisenberg(1, F2)))
        assert 0 < probe.checked <= 36
        assert probe.checked >= len(probe.witnesses)
        assert probe.homomorphic == (not probe.witnesses)

    def test_rational_extension_rejected(self, h1_ext):
        assert h1_ext.field == RATIONAL
        with pytest.raises(FieldMismatchError):
            verify_exact_sequences(h1_ext)


@pytest.mark.slow
class TestExhaustiveAgreement:

    @pytest.mark.parametrize("build", [heisenberg, generalized_heisenberg])
    def test_decision_matches_lift_search_over_f2(self, build, F2):
        comparison = compare_inducibility(central_extension(build(1, F2)))
        assert comparison.agree
        assert 0 < comparison.inducible <= comparison.compatible <= comparison.total

    def test_split_adjoint_every_compatible_pair_lifts(self, F2):
        L = heisenberg(1, F2)
        e = build_extension(L, adjoint(L), CochainPair.zero(F2, 3, 3))
        compatible = enumerate_compatible_pairs(e)
        assert compatible.pairs
        assert all(decide_inducible(e, pr).inducible for pr in compatible.pairs)
