"""
Heisenberg Lie-Yamaguti 代数 h_n 中心扩张的分块可诱导条件

[ψ] = [[A, B], [C, D]]（n×n 分块，按列约定 ψ(ē_i) = Σ a_{r,i} ē_r + Σ c_{r,i} ē_{n+r}），φ = κ。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from ..exactlinalg import FieldSpec, Matrix
from ..exceptions import DimensionMismatchError, InputError
from ..inducibility import AutPair

MODES = ("as_stated", "corrected", "lie")


def m_sigma(left: Matrix, right: Matrix, left2: Matrix, right2: Matrix, sigma: int) -> Matrix:
    """
    M^σ 矩阵：第 (r, i) 元为行列式 | left[r,i]  right[r,i] ; left2[r,σ]  right2[r,σ] |

    例如 M^σ_{(ac,bd)} = m_sigma(A, C, B, D, σ)。
    """
    n = left.rows
    return Matrix.from_rows(
        left.field,
        [
            [left[r, i] * right2[r, sigma] - right[r, i] * left2[r, sigma] for i in range(n)]
            for r in range(n)
        ],
        n,
    )


def _elementary(f: FieldSpec, n: int, sigma: int) -> Matrix:
    return Matrix.from_rows(
        f, [[1 if r == c == sigma else 0 for c in range(n)] for r in range(n)], n
    )


@dataclass
class ConditionResult:
    name: str
    passed: bool
    residuals: List[Matrix] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "residuals": [r.to_strings() for r in self.residuals if not r.is_zero()],
        }


@dataclass
class HeisenbergReport:
    """分块条件的逐条结果"""

    n: int
    mode: str
    conditions: List[ConditionResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def __getitem__(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "mode": self.mode,
            "passed": self.passed,
            "conditions": [c.to_dict() for c in self.conditions],
        }


def _result(name: str, residuals: List[Matrix]) -> ConditionResult:
    return ConditionResult(name, all(r.is_zero() for r in residuals), residuals)


def split_blocks(psi: Matrix, n: int):
    """[ψ] → (A, B, C, D)"""
    return (
        psi.submatrix(0, n, 0, n),
        psi.submatrix(0, n, n, 2 * n),
        psi.submatrix(n, 2 * n, 0, n),
        psi.submatrix(n, 2 * n, n, 2 * n),
    )


def heisenberg_conditions(n: int, pr: AutPair, mode: str = "corrected") -> HeisenbergReport:
    """
    逐条检验分块条件

    (1) AᵗD - CᵗB = κI；(2) AᵗC 与 BᵗD 对称；(3) AᵗM^σ_{(ac,bd)} = κE_{σσ}；
    (4a) AᵗM^σ_{(ac,ac)} = 0 = BᵗM^σ_{(ac,ac)}；(4b) AᵗM^σ_{(bd,bd)} = 0 = BᵗM^σ_{(bd,bd)}；
    (4c) as_stated 模式为 CᵗM^σ_{(ac,bd)} = 0，corrected 模式为 BᵗM^σ_{(ac,bd)} = 0。
    lie 模式只检验 (1)、(2)，对应三元运算为零的 Heisenberg Lie 代数。

    Args:
        n: h_n 的参数
        pr: φ 为 1×1 矩阵 (κ)，ψ 为 2n×2n 矩阵
        mode: as_stated | corrected | lie

    Returns:
        HeisenbergReport: 每条条件的通过情况与非零残差
    """
    if mode not in MODES:
        raise InputError(f"未知模式 {mode}，可选 {MODES}")
    if pr.phi.shape != (1, 1) or pr.psi.shape != (2 * n, 2 * n):
        raise DimensionMismatchError(
            f"h_{n} 的自同构对要求 φ 为 1x1、ψ 为 {2 * n}x{2 * n}，实际为 {pr.phi.shape}, {pr.psi.shape}"
        )
    f = pr.psi.field
    kappa = pr.phi[0, 0]
    A, B, C, D = split_blocks(pr.psi, n)
    At, Bt, Ct = A.T, B.T, C.T
    identity = Matrix.identity(f, n)

    conditions = [
        _result("1", [At @ D - Ct @ B - identity.scale(kappa)]),
        _result("2", [At @ C - (At @ C).T, Bt @ D - (Bt @ D).T]),
    ]
    if mode == "lie":
        return HeisenbergReport(n, mode, conditions)

    m_acbd = [m_sigma(A, C, B, D, s) for s in range(n)]
    m_acac = [m_sigma(A, C, A, C, s) for s in range(n)]
    m_bdbd = [m_sigma(B, D, B, D, s) for s in range(n)]
    fourth = Ct if mode == "as_stated" else Bt

    conditions.extend([
        _result("3", [At @ m_acbd[s] - _elementary(f, n, s).scale(kappa) for s in range(n)]),
        _result("4a", [At @ m for m in m_acac] + [Bt @ m for m in m_acac]),
        _result("4b", [At @ m for m in m_bdbd] + [Bt @ m for m in m_bdbd]),
        _result("4c", [fourth @ m for m in m_acbd]),
    ])
    return HeisenbergReport(n, mode, conditions)
