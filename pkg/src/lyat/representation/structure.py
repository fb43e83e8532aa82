"""
表示 (ρ, D, θ; V) 及其公理检验
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Callable, Dict, List, Sequence, Tuple

from ..algebra.structure import AxiomReport, AxiomStatus, LYAlgebra, Sparse
from ..exactlinalg import FieldSpec, Matrix, Scalar
from ..exceptions import DimensionMismatchError
from ..utils.logger import get_logger

logger = get_logger(__name__)

REP_AXIOMS = ("R1", "R2", "R3", "R4", "R5", "R6", "R7")

# (行, 列, 值) 形式的稀疏矩阵
SparseMatrix = List[Tuple[int, int, Scalar]]


@dataclass(frozen=True)
class Representation:
    """
    Lie-Yamaguti 代数 L 在 m 维空间 V 上的表示

    rho[i] = ρ(e_i)，dmap[i][j] = D(e_i, e_j)，theta[i][j] = θ(e_i, e_j)，均为 m×m 矩阵。
    D 与 θ 对所有有序对存储，不预设对称性。
    """

    algebra: LYAlgebra
    vdim: int
    rho: Tuple[Matrix, ...]
    dmap: Tuple[Tuple[Matrix, ...], ...]
    theta: Tuple[Tuple[Matrix, ...], ...]

    def __post_init__(self) -> None:
        n, m = self.algebra.dim, self.vdim
        shape = (m, m)
        if len(self.rho) != n or any(r.shape != shape for r in self.rho):
            raise DimensionMismatchError(f"ρ 必须是 {n} 个 {m}x{m} 矩阵")
        for label, family in (("D", self.dmap), ("θ", self.theta)):
            if len(family) != n or any(
                len(row) != n or any(x.shape != shape for x in row) for row in family
            ):
                raise DimensionMismatchError(f"{label} 必须是 {n}x{n} 个 {m}x{m} 矩阵")
        for mat in self._all_matrices():
            self.algebra.field.check_same(mat.field)

    def _all_matrices(self):
        yield from self.rho
        for row in self.dmap:
            yield from row
        for row in self.theta:
            yield from row

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def from_functions(
        cls,
        algebra: LYAlgebra,
        vdim: int,
        rho: Callable[[int], Sequence[Sequence]],
        dmap: Callable[[int, int], Sequence[Sequence]],
        theta: Callable[[int, int], Sequence[Sequence]],
    ) -> "Representation":
        """
        由基元上的矩阵函数构造表示

        Args:
            algebra: 代数
            vdim: V 的维数
            rho: i -> ρ(e_i) 的行列表
            dmap: (i, j) -> D(e_i, e_j) 的行列表
            theta: (i, j) -> θ(e_i, e_j) 的行列表

        Returns:
            Representation: 未经公理检验的表示
        """
        f = algebra.field
        r = range(algebra.dim)

        def mat(rows: Sequence[Sequence]) -> Matrix:
            return Matrix.from_rows(f, rows, vdim)

        return cls(
            algebra, vdim,
            tuple(mat(rho(i)) for i in r),
            tuple(tuple(mat(dmap(i, j)) for j in r) for i in r),
            tuple(tuple(mat(theta(i, j)) for j in r) for i in r),
        )

    # ------------------------------------------------------------------
    # 稀疏缓存与线性组合
    # ------------------------------------------------------------------

    @staticmethod
    def _sparse(mat: Matrix) -> SparseMatrix:
        f = mat.field
        return [
            (i, j, x) for i, row in enumerate(mat.entries) for j, x in enumerate(row) if not f.is_zero(x)
        ]

    @cached_property
    def rho_sparse(self) -> List[SparseMatrix]:
        return [self._sparse(x) for x in self.rho]

    @cached_property
    def dmap_sparse(self) -> List[List[SparseMatrix]]:
        return [[self._sparse(x) for x in row] for row in self.dmap]

    @cached_property
    def theta_sparse(self) -> List[List[SparseMatrix]]:
        return [[self._sparse(x) for x in row] for row in self.theta]

    @cached_property
    def operator_cache(self) -> Dict[Any, Any]:
        """上边缘算子等派生量的缓存，由 cohomology 模块填充"""
        return {}

    def _combine(self, terms: Sequence[Tuple[Scalar, Matrix]]) -> Matrix:
        m = self.vdim
        acc: List[List[Scalar]] = [[0] * m for _ in range(m)]
        for coeff, mat in terms:
            if self.field.is_zero(coeff):
                continue
            for i, j, x in self._sparse(mat):
                acc[i][j] += coeff * x
        return Matrix.from_rows(self.field, acc, m)

    def rho_of(self, a: Sequence[Scalar]) -> Matrix:
        """ρ(a)，a 为坐标向量"""
        return self._combine([(c, self.rho[i]) for i, c in enumerate(a)])

    def dmap_of(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Matrix:
        """D(a, b)"""
        return self._combine([
            (x * y, self.dmap[i][j]) for i, x in enumerate(a) for j, y in enumerate(b)
        ])

    def theta_of(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Matrix:
        """θ(a, b)"""
        return self._combine([
            (x * y, self.theta[i][j]) for i, x in enumerate(a) for j, y in enumerate(b)
        ])

    def is_trivial(self) -> bool:
        return all(x.is_zero() for x in self._all_matrices())


# ----------------------------------------------------------------------
# 公理 R1-R7
# ----------------------------------------------------------------------

def _lin(family: Callable[[int], Matrix], sparse: Sparse, zero: Matrix) -> Matrix:
    """Σ c_t family(t)"""
    out = zero
    for t, c in sparse:
        out = out + family(t).scale(c)
    return out


def _residual(r: Representation, name: str, idx: Tuple[int, ...]) -> Matrix:
    L = r.algebra
    bs, ts = L.bsparse, L.tsparse
    rho, dm, th = r.rho, r.dmap, r.theta
    zero = Matrix.zeros(r.field, r.vdim, r.vdim)

    if name == "R1":
        a, b = idx
        return (
            dm[a][b] + th[a][b] - th[b][a]
            - (rho[a] @ rho[b] - rho[b] @ rho[a])
            + _lin(lambda t: rho[t], bs[a][b], zero)
        )
    if name == "R2":
        a, b, c = idx
        return (
            _lin(lambda t: th[a][t], bs[b][c], zero)
            - rho[b] @ th[a][c] + rho[c] @ th[a][b]
        )
    if name == "R3":
        a, b, c = idx
        return (
            _lin(lambda t: th[t][c], bs[a][b], zero)
            - th[a][c] @ rho[b] + th[b][c] @ rho[a]
        )
    if name == "R4":
        a, b, c, d = idx
        return (
            th[c][d] @ th[a][b] - th[b][d] @ th[a][c]
            - _lin(lambda t: th[a][t], ts[b][c][d], zero)
            + dm[b][c] @ th[a][d]
        )
    if name == "R5":
        a, b, c = idx
        return (
            dm[a][b] @ rho[c] - rho[c] @ dm[a][b]
            - _lin(lambda t: rho[t], ts[a][b][c], zero)
        )
    if name == "R6":
        a, b, c, d = idx
        return (
            dm[a][b] @ th[c][d] - th[c][d] @ dm[a][b]
            - _lin(lambda t: th[t][d], ts[a][b][c], zero)
            - _lin(lambda t: th[c][t], ts[a][b][d], zero)
        )
    if name == "R7":
        a, b, c = idx
        return (
            _lin(lambda t: dm[t][c], bs[a][b], zero)
            + _lin(lambda t: dm[t][a], bs[b][c], zero)
            + _lin(lambda t: dm[t][b], bs[c][a], zero)
        )
    raise KeyError(f"未知的表示公理: {name}")


_ARITY = {"R1": 2, "R2": 3, "R3": 3, "R4": 4, "R5": 3, "R6": 4, "R7": 3}


def evaluate_rep_axiom(r: Representation, name: str, idx: Tuple[int, ...]) -> Matrix:
    """在基元组上计算表示公理的残差矩阵"""
    if len(idx) != _ARITY.get(name, -1):
        raise KeyError(f"{name} 的下标个数错误: {idx}")
    return _residual(r, name, idx)


def check_representation(r: Representation) -> AxiomReport:
    """
    在全部基元组上检验 R1-R6，并单独报告导出恒等式 R7

    Args:
        r: 表示

    Returns:
        AxiomReport: 每条公理的结果，失败时残差为按行展开的矩阵
    """
    n = r.dim
    statuses: List[AxiomStatus] = []
    for name in REP_AXIOMS:
        status = AxiomStatus(name, True)
        for idx in product(range(n), repeat=_ARITY[name]):
            residual = _residual(r, name, idx)
            if not residual.is_zero():
                flat = tuple(x for row in residual.entries for x in row)
                status = AxiomStatus(name, False, tuple(idx), flat)
                break
        statuses.append(status)
    report = AxiomReport(tuple(statuses))
    if not report.passed:
        logger.debug(f"表示公理失败: {[s.name for s in report.failures()]}")
    return report


def representation_axioms_pass(r: Representation) -> bool:
    """R1-R6 全部成立（R7 是推论，不参与判定）"""
    report = check_representation(r)
    return all(report[name].passed for name in REP_AXIOMS[:-1])
