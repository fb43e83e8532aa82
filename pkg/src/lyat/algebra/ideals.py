"""
中心、理想、商代数与下中心列
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..exactlinalg import Matrix, SubspaceBasis, Vector, kernel_basis
from ..exceptions import DimensionMismatchError, NotAnIdealError
from ..utils.logger import get_logger
from .structure import LYAlgebra

logger = get_logger(__name__)


def center(L: LYAlgebra) -> SubspaceBasis:
    """
    中心 Z(L) = {a : [a,x] = 0, {a,x,y} = 0 = {x,y,a}}

    作为线性映射 a ↦ ([a,e_j], {a,e_j,e_k}, {e_j,e_k,a}) 的核计算；
    {x,a,y} = 0 由 LY2 推出。
    """
    n = L.dim
    rows: List[List] = []
    for j in range(n):
        for t in range(n):
            rows.append([L.binary[i][j][t] for i in range(n)])
    for j in range(n):
        for k in range(n):
            for t in range(n):
                rows.append([L.ternary[i][j][k][t] for i in range(n)])
                rows.append([L.ternary[j][k][i][t] for i in range(n)])
    if not rows:
        return SubspaceBasis.zero(L.field, n)
    return kernel_basis(Matrix.from_rows(L.field, rows, n))


def _generators(L: LYAlgebra, W: SubspaceBasis) -> List[Vector]:
    """[w, e_j]、{w, e_j, e_k}、{e_j, e_k, w}"""
    n = L.dim
    basis = [L.basis_vector(j) for j in range(n)]
    out: List[Vector] = []
    for w in W.vectors:
        for j in range(n):
            out.append(L.bracket(w, basis[j]))
            for k in range(n):
                out.append(L.triple(w, basis[j], basis[k]))
                out.append(L.triple(basis[j], basis[k], w))
    return out


@dataclass(frozen=True)
class IdealReport:
    """理想检验结果"""

    is_ideal: bool
    is_abelian_ideal: bool


def ideal_tests(L: LYAlgebra, W: SubspaceBasis) -> IdealReport:
    """
    检验 W 是否为理想 ([W,L] ⊆ W, {W,L,L} ⊆ W, {L,L,W} ⊆ W) 以及是否为阿贝尔理想

    Args:
        L: 代数
        W: 子空间

    Returns:
        IdealReport: 检验结果
    """
    if W.ambient_dim != L.dim:
        raise DimensionMismatchError(f"子空间外围维数 {W.ambient_dim} 与代数维数 {L.dim} 不符")
    L.field.check_same(W.field)
    is_ideal = all(W.contains(v) for v in _generators(L, W))

    is_abelian = is_ideal
    if is_ideal:
        f = L.field
        basis = [L.basis_vector(k) for k in range(L.dim)]
        for w in W.vectors:
            for u in W.vectors:
                if not f.is_zero_vector(L.bracket(w, u)):
                    is_abelian = False
                    break
                for x in basis:
                    if not (
                        f.is_zero_vector(L.triple(w, u, x))
                        and f.is_zero_vector(L.triple(w, x, u))
                        and f.is_zero_vector(L.triple(x, w, u))
                    ):
                        is_abelian = False
                        break
                if not is_abelian:
                    break
            if not is_abelian:
                break
    return IdealReport(is_ideal, is_abelian)


def quotient_projection(W: SubspaceBasis) -> Matrix:
    """
    投影 K^n → K^n / W，商空间坐标取 W 的非主元坐标

    主元列 c 对应的 e_c ≡ e_c - w 被映为 -(w 在非主元坐标上的分量)。
    """
    f = W.field
    comp = W.complement()
    position = {c: r for r, c in enumerate(comp)}
    columns: List[Vector] = []
    pivot_row = {c: w for w, c in zip(W.vectors, W.pivots)}
    for i in range(W.ambient_dim):
        if i in position:
            columns.append(f.unit_vector(len(comp), position[i]))
        else:
            w = pivot_row[i]
            columns.append(f.vector(-w[c] for c in comp))
    if not comp:
        return Matrix.zeros(f, 0, W.ambient_dim)
    return Matrix.from_columns(f, columns, len(comp))


def quotient(L: LYAlgebra, W: SubspaceBasis) -> Tuple[LYAlgebra, Matrix]:
    """
    商代数 L / W

    Args:
        L: 代数
        W: 理想

    Returns:
        (商代数, 投影矩阵)
    """
    if not ideal_tests(L, W).is_ideal:
        raise NotAnIdealError("子空间不是理想，不能作商")
    projection = quotient_projection(W)
    comp = W.complement()
    basis = [L.basis_vector(c) for c in comp]
    names = [L.basis_names[c] for c in comp]
    algebra = LYAlgebra.from_functions(
        L.field, len(comp),
        lambda a, b: projection.apply(L.bracket(basis[a], basis[b])),
        lambda a, b, c: projection.apply(L.triple(basis[a], basis[b], basis[c])),
        names,
    )
    logger.debug(f"商代数维数 {algebra.dim} = {L.dim} - {W.dim}")
    return algebra, projection


def lower_central_series(L: LYAlgebra) -> Tuple[List[SubspaceBasis], Optional[int]]:
    """
    下中心列 L^(k+1) = [L^(k), L] + {L^(k), L, L} + {L, L, L^(k)}

    Args:
        L: 代数

    Returns:
        (序列, 幂零指数)；序列稳定在非零子空间时指数为 None
    """
    current = SubspaceBasis.full(L.field, L.dim)
    series = [current]
    if current.dim == 0:
        return series, 0
    for k in range(1, L.dim + 2):
        nxt = SubspaceBasis.span(L.field, L.dim, _generators(L, current))
        if nxt == current:
            return series, None
        series.append(nxt)
        if nxt.dim == 0:
            return series, k
        current = nxt
    return series, None
