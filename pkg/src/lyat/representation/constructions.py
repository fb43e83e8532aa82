"""
伴随表示、平凡表示、半直积、扭曲表示与表示态射
"""

from typing import List

from ..algebra.morphisms import is_automorphism
from ..algebra.structure import LYAlgebra
from ..exactlinalg import Matrix, Scalar
from ..exceptions import DimensionMismatchError, NotAnAutomorphismError
from ..utils.logger import get_logger
from .structure import Representation

logger = get_logger(__name__)


def adjoint(L: LYAlgebra) -> Representation:
    """
    伴随表示 V = L：ρ(a)b = [a,b]，D(a,b)c = {a,b,c}，θ(a,b)c = {c,a,b}

    Args:
        L: 代数

    Returns:
        Representation: 伴随表示
    """
    n = L.dim
    B, T = L.binary, L.ternary
    r = range(n)
    return Representation.from_functions(
        L, n,
        lambda i: [[B[i][k][t] for k in r] for t in r],
        lambda i, j: [[T[i][j][k][t] for k in r] for t in r],
        lambda i, j: [[T[k][i][j][t] for k in r] for t in r],
    )


def trivial_rep(L: LYAlgebra, m: int) -> Representation:
    """全部表示映射为零"""
    if m < 0:
        raise DimensionMismatchError(f"表示空间维数不能为负: {m}")
    zero = Matrix.zeros(L.field, m, m)
    n = L.dim
    return Representation(
        L, m,
        tuple(zero for _ in range(n)),
        tuple(tuple(zero for _ in range(n)) for _ in range(n)),
        tuple(tuple(zero for _ in range(n)) for _ in range(n)),
    )


def semidirect(r: Representation) -> LYAlgebra:
    """
    半直积 L ⋉ V，前 n 个坐标为 L，后 m 个为 V

    [a+u, b+v] = [a,b] + ρ(a)v - ρ(b)u
    {a+u, b+v, c+w} = {a,b,c} + D(a,b)w + θ(b,c)u - θ(a,c)v

    不要求 r 满足表示公理；结果是否为 Lie-Yamaguti 代数由 check_axioms 判定。
    """
    L = r.algebra
    n, m = L.dim, r.vdim
    f = L.field
    total = n + m

    def zero() -> List[Scalar]:
        return [f.zero] * total

    def bracket(i: int, j: int) -> List[Scalar]:
        out = zero()
        if i < n and j < n:
            out[:n] = L.binary[i][j]
        elif i < n <= j:
            for t in range(m):
                out[n + t] = r.rho[i][t, j - n]
        elif j < n <= i:
            for t in range(m):
                out[n + t] = -r.rho[j][t, i - n]
        return out

    def triple(i: int, j: int, k: int) -> List[Scalar]:
        out = zero()
        in_v = [x >= n for x in (i, j, k)]
        if sum(in_v) > 1:
            return out
        if not any(in_v):
            out[:n] = L.ternary[i][j][k]
        elif in_v[2]:
            for t in range(m):
                out[n + t] = r.dmap[i][j][t, k - n]
        elif in_v[0]:
            for t in range(m):
                out[n + t] = r.theta[j][k][t, i - n]
        else:
            for t in range(m):
                out[n + t] = -r.theta[i][k][t, j - n]
        return out

    names = tuple(L.basis_names) + tuple(f"v{t + 1}" for t in range(m))
    return LYAlgebra.from_functions(f, total, bracket, triple, names)


def twist(r: Representation, psi: Matrix) -> Representation:
    """
    扭曲表示：ρ'(a) = ρ(ψa)，D'(a,b) = D(ψa,ψb)，θ'(a,b) = θ(ψa,ψb)

    Args:
        r: 表示
        psi: r.algebra 的自同构

    Returns:
        Representation: 扭曲后的表示
    """
    if not is_automorphism(r.algebra, psi):
        raise NotAnAutomorphismError("扭曲表示要求 ψ 是代数自同构")
    cols = psi.columns()
    n = r.dim
    return Representation(
        r.algebra, r.vdim,
        tuple(r.rho_of(cols[i]) for i in range(n)),
        tuple(tuple(r.dmap_of(cols[i], cols[j]) for j in range(n)) for i in range(n)),
        tuple(tuple(r.theta_of(cols[i], cols[j]) for j in range(n)) for i in range(n)),
    )


def is_rep_morphism(r: Representation, r2: Representation, phi: Matrix) -> bool:
    """
    表示态射：φρ(e_i) = ρ'(e_i)φ，φD(e_i,e_j) = D'(e_i,e_j)φ，φθ(e_i,e_j) = θ'(e_i,e_j)φ

    Args:
        r: 源表示
        r2: 目标表示（同一代数）
        phi: V → V' 的矩阵

    Returns:
        bool: 是否为表示态射
    """
    if r.algebra != r2.algebra:
        raise DimensionMismatchError("两个表示必须定义在同一个代数上")
    if phi.shape != (r2.vdim, r.vdim):
        raise DimensionMismatchError(f"φ 的形状 {phi.shape} 应为 {(r2.vdim, r.vdim)}")
    n = r.dim
    for i in range(n):
        if phi @ r.rho[i] != r2.rho[i] @ phi:
            return False
        for j in range(n):
            if phi @ r.dmap[i][j] != r2.dmap[i][j] @ phi:
                return False
            if phi @ r.theta[i][j] != r2.theta[i][j] @ phi:
                return False
    return True
