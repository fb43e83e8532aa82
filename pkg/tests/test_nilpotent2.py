"""
指数为 2 的幂零代数：直接判定、分块条件与符号关系
"""

import numpy as np
import pytest

from lyat.algebra import LYAlgebra, generalized_heisenberg, heisenberg, heisenberg_lie
from lyat.cohomology import CochainPair
from lyat.exactlinalg import RATIONAL, FieldSpec, Matrix, invert
from lyat.exceptions import NotNilpotentIndexTwoError
from lyat.extension import build_extension, central_extension
from lyat.inducibility import AutPair, decide_inducible
from lyat.nilpotent2 import (
    BINARY,
    TERNARY,
    SAMPLE_KINDS,
    crosscheck,
    direct_check,
    evaluate_relations,
    generate_relations,
    heisenberg_conditions,
    m_sigma,
    sample_pair,
    split_blocks,
)
from lyat.representation import adjoint
from lyat.utils.config import config_manager


def _lower(f, n, cs, kappa):
    rows = [[1 if r == c else 0 for c in range(n)] + [0] * n for r in range(n)]
    rows += [[cs[r] if r == c else 0 for c in range(n)] + [kappa if r == c else 0 for c in range(n)] for r in range(n)]
    return AutPair(Matrix.from_rows(f, [[kappa]], 1), Matrix.from_rows(f, rows, 2 * n))


def _upper(f, n, bs):
    rows = [[1 if r == c else 0 for c in range(n)] + [bs[r] if r == c else 0 for c in range(n)] for r in range(n)]
    rows += [[0] * n + [1 if r == c else 0 for c in range(n)] for r in range(n)]
    return AutPair(Matrix.identity(f, 1), Matrix.from_rows(f, rows, 2 * n))


def _generalized_pair(f, n, rng, diagonal):
    """G_n 商代数上的 (κ, ψ)：diagonal 时取 diag(1..1, ±1, κ..κ)，它总是可诱导；否则取随机可逆矩阵"""
    dim = 2 * n + 1
    kappa = f.random_nonzero(rng, 3)
    if diagonal:
        sign = 1 if rng.integers(0, 2) else -1
        values = [1] * n + [sign] + [kappa] * n
        psi = Matrix.from_rows(f, [[values[r] if r == c else 0 for c in range(dim)] for r in range(dim)], dim)
    else:
        while True:
            psi = Matrix.from_rows(f, [[f.random_scalar(rng, 3) for _ in range(dim)] for _ in range(dim)], dim)
            if invert(psi) is not None:
                break
    return AutPair(Matrix.from_rows(f, [[kappa]], 1), psi)


class TestDirectCheck:

    def test_agrees_with_decide_inducible(self, h1_ext, QQ):
        for pr in (
            _lower(QQ, 1, [3], 2),
            _upper(QQ, 1, [1]),
            AutPair(Matrix.identity(QQ, 1), Matrix.from_rows(QQ, [[2, 0], [0, 2]], 2)),
        ):
            assert direct_check(h1_ext, pr) == decide_inducible(h1_ext, pr).inducible

    def test_requires_trivial_rep_on_abelian_base(self, h1, QQ):
        e = build_extension(h1, adjoint(h1), CochainPair.zero(QQ, 3, 3))
        pr = AutPair(Matrix.identity(QQ, 3), Matrix.identity(QQ, 3))
        with pytest.raises(NotNilpotentIndexTwoError):
            direct_check(e, pr)


class TestHeisenbergConditions:

    @pytest.mark.parametrize("n", [1, 2])
    def test_lower_family_is_inducible(self, n, QQ):
        e = central_extension(heisenberg(n))
        pr = _lower(QQ, n, list(range(1, n + 1)), 3)
        assert direct_check(e, pr)
        assert heisenberg_conditions(n, pr, "corrected").passed
        # C 块非零时 CᵗM^σ ≠ 0
        as_stated = heisenberg_conditions(n, pr, "as_stated")
        assert [c.name for c in as_stated.conditions if not c.passed] == ["4c"]

    @pytest.mark.parametrize("n", [1, 2])
    def test_upper_family_separates_modes(self, n, QQ):
        e = central_extension(heisenberg(n))
        pr = _upper(QQ, n, [1] * n)
        assert not direct_check(e, pr)
        assert heisenberg_conditions(n, pr, "as_stated").passed
        corrected = heisenberg_conditions(n, pr, "corrected")
        assert not corrected.passed
        assert [c.name for c in corrected.conditions if not c.passed] == ["4c"]

    def test_lie_mode_checks_two_conditions(self, QQ):
        pr = _upper(QQ, 1, [1])
        report = heisenberg_conditions(1, pr, "lie")
        assert [c.name for c in report.conditions] == ["1", "2"]
        assert report.passed
        assert direct_check(central_extension(heisenberg_lie(1)), pr)

    def test_condition_one_fails_for_wrong_kappa(self, QQ):
        pr = AutPair(Matrix.identity(QQ, 1), Matrix.from_rows(QQ, [[2, 0], [0, 2]], 2))
        report = heisenberg_conditions(1, pr, "corrected")
        assert not report["1"].passed
        assert report.to_dict()["conditions"][0]["residuals"] == [[["3"]]]

    def test_blocks_and_m_sigma(self, QQ):
        psi = Matrix.from_rows(QQ, [[1, 2], [3, 4]], 2)
        A, B, C, D = split_blocks(psi, 1)
        assert (A[0, 0], B[0, 0], C[0, 0], D[0, 0]) == (1, 2, 3, 4)
        # | a c ; b d | = 1·4 - 3·2
        assert m_sigma(A, C, B, D, 0)[0, 0] == -2

    @pytest.mark.parametrize("kind", SAMPLE_KINDS)
    def test_corrected_mode_matches_direct_check(self, kind, F5):
        rng = np.random.default_rng(11)
        e = central_extension(heisenberg(2, F5))
        for _ in range(10):
            pr = sample_pair(kind, 2, F5, rng, 3)
            assert heisenberg_conditions(2, pr, "corrected").passed == direct_check(e, pr)


class TestRelations:

    def test_heisenberg_relations(self, h1):
        rs = generate_relations(h1)
        x11, x12, x21, x22, k = (rs.gen(s) for s in ("x11", "x12", "x21", "x22", "k"))
        assert len(rs) == 3
        assert rs.find(BINARY, (0, 1)) == x11 * x22 - x21 * x12 - k
        assert rs.find(TERNARY, (0, 1, 0)) == x11 * (x11 * x22 - x21 * x12) - k
        assert rs.find(TERNARY, (0, 1, 1)) == x12 * (x11 * x22 - x21 * x12)

    def test_json_and_text(self, h1):
        rs = generate_relations(h1)
        data = rs.to_json()
        assert data["vars"] == ["x[1][1]", "x[1][2]", "x[2][1]", "x[2][2]", "k"]
        assert [r["kind"] for r in data["relations"]] == [BINARY, TERNARY, TERNARY]
        assert data["relations"][0]["source"] == [1, 2]
        assert all(line.endswith(" = 0") for line in rs.to_text())

    def test_lie_relations_have_no_ternary_part(self):
        rs = generate_relations(heisenberg_lie(1))
        assert len(rs) == 1

    def test_evaluation(self, h1, QQ):
        rs = generate_relations(h1)
        assert evaluate_relations(rs, _lower(QQ, 1, [5], 2))
        assert not evaluate_relations(rs, _upper(QQ, 1, [1]))

    def test_generalized_heisenberg_one(self):
        # i = k = n+1, j = 2n+1（从 1 起计）
        rs = generate_relations(generalized_heisenberg(1))
        x12, x13, x22, x23, x32, x33, k = (
            rs.gen(s) for s in ("x12", "x13", "x22", "x23", "x32", "x33", "k")
        )
        expected = x12**2 * x33 - x12 * x13 * x32 + x22**2 * x33 - x22 * x23 * x32 - k
        assert rs.find(TERNARY, (1, 2, 1)) == expected

    def test_generalized_heisenberg_two(self):
        rs = generate_relations(generalized_heisenberg(2))
        x = {s: rs.gen(s) for s in ("x13", "x15", "x23", "x25", "x33", "x35", "x43", "x45", "x53", "x55")}
        k = rs.gen("k")
        # Σ_r m_{r,3}(m_{r,3} d_{r,2} - m_{3+r,3} b_{r,2}) + m_{3,3}(m_{3,3} m_{5,5} - m_{3,5} m_{5,3})
        expected = (
            x["x13"] * (x["x13"] * x["x45"] - x["x43"] * x["x15"])
            + x["x23"] * (x["x23"] * x["x55"] - x["x53"] * x["x25"])
            + x["x33"] * (x["x33"] * x["x55"] - x["x35"] * x["x53"])
            - k
        )
        assert rs.find(TERNARY, (2, 4, 2)) == expected

    @pytest.mark.parametrize("n", [1, 2])
    def test_evaluation_matches_direct_check_on_heisenberg(self, n, QQ, F5):
        rng = np.random.default_rng(100 + n)
        verdicts = []
        for f in (QQ, F5):
            L = heisenberg(n, f)
            rs = generate_relations(L)
            e = central_extension(L)
            for index in range(160):
                pr = sample_pair(SAMPLE_KINDS[index % len(SAMPLE_KINDS)], n, f, rng, 3)
                verdict = direct_check(e, pr)
                assert evaluate_relations(rs, pr) == verdict
                verdicts.append(verdict)
        assert any(verdicts)
        assert not all(verdicts)

    @pytest.mark.parametrize("n", [1, 2])
    def test_evaluation_matches_direct_check_on_generalized(self, n, QQ, F5):
        rng = np.random.default_rng(200 + n)
        verdicts = []
        for f in (QQ, F5):
            L = generalized_heisenberg(n, f)
            rs = generate_relations(L)
            e = central_extension(L)
            for index in range(100):
                pr = _generalized_pair(f, n, rng, diagonal=index % 2 == 0)
                verdict = direct_check(e, pr)
                assert evaluate_relations(rs, pr) == verdict
                verdicts.append(verdict)
        assert any(verdicts)
        assert not all(verdicts)

    def test_requires_index_two(self, QQ):
        with pytest.raises(NotNilpotentIndexTwoError):
            generate_relations(LYAlgebra.abelian(QQ, 2))


class TestCrosscheck:

    def test_small_run(self):
        report = crosscheck(1, samples=8, seed=7, prime=5)
        assert report.agreement_of("QQ", "corrected") == 100.0
        assert report.agreement_of("GF(5)", "corrected") == 100.0
        assert report.agreement_of("QQ", "lie") == 100.0
        assert all(d["mode"] == "as_stated" for d in report.disagreements)
        assert len(report.records) == 16

    def test_to_dict(self):
        data = crosscheck(1, samples=4, seed=3, prime=3).to_dict()
        assert data["n"] == 1 and data["samples"] == 4 and data["seed"] == 3
        assert {row["field"] for row in data["agreement"]} == {"QQ", "GF(3)"}

    @pytest.mark.slow
    def test_larger_run(self):
        report = crosscheck(2, samples=60, seed=20240601)
        for field_name in ("QQ", "GF(5)"):
            assert report.agreement_of(field_name, "corrected") == 100.0
            assert report.agreement_of(field_name, "lie") == 100.0

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_as_stated_differs_only_in_4c(self, n):
        # 不一致样本改用 Wells 类复核，避免大维数的提升搜索
        config_manager.update_config({"enumeration": {"max_total_dim": 3}})
        report = crosscheck(n, samples=500, seed=20240601 + n, prime=5)
        fields = {"QQ": RATIONAL, "GF(5)": FieldSpec.prime(5)}
        for field_name in fields:
            assert report.agreement_of(field_name, "corrected") == 100.0
            assert report.agreement_of(field_name, "lie") == 100.0
        assert len(report.records) == 1000
        for witness in report.disagreements:
            assert witness["mode"] == "as_stated"
            f = fields[witness["field"]]
            pr = AutPair(
                Matrix.from_rows(f, [[f.parse(x) for x in row] for row in witness["phi"]], 1),
                Matrix.from_rows(f, [[f.parse(x) for x in row] for row in witness["psi"]], 2 * n),
            )
            as_stated = heisenberg_conditions(n, pr, "as_stated")
            corrected = heisenberg_conditions(n, pr, "corrected")
            differing = {
                c.name for c in as_stated.conditions if c.passed != corrected[c.name].passed
            }
            assert differing == {"4c"}
            assert witness["failing_conditions"] in ([], ["4c"])
