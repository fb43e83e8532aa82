"""
截面变换、扩张等价与中心扩张
"""

from typing import Optional

from ..algebra import LYAlgebra, center, is_morphism, lower_central_series
from ..cohomology import delta_zero, solve_coboundary
from ..exactlinalg import Matrix
from ..exceptions import (
    InvariantViolation,
    RepresentationMismatchError,
    TrivialCenterError,
)
from ..representation import Representation
from ..utils.logger import get_logger
from .structure import AbelianExtension, from_total

logger = get_logger(__name__)


def section_shift_witness(e: AbelianExtension, t: Matrix) -> Matrix:
    """
    换截面时上闭链的差：λ = s - t 满足 (α_s, β_s) - (α_t, β_t) = δλ

    Args:
        e: 以截面 s 给出的扩张
        t: 另一个截面

    Returns:
        Matrix: λ 的 m×n 矩阵
    """
    shifted = e.with_section(t)
    lam = e.vcoord_matrix() @ (e.section - t)
    if delta_zero(e.rep, lam) != e.cocycle - shifted.cocycle:
        raise InvariantViolation("换截面后上闭链之差不等于 δλ")
    return lam


def same_structure(L1: LYAlgebra, L2: LYAlgebra) -> bool:
    """结构常数相同（忽略基名）"""
    return (
        L1.field == L2.field
        and L1.dim == L2.dim
        and L1.binary == L2.binary
        and L1.ternary == L2.ternary
    )


def same_representation(r1: Representation, r2: Representation) -> bool:
    """同一代数上矩阵完全相同的表示"""
    return (
        same_structure(r1.algebra, r2.algebra)
        and r1.vdim == r2.vdim
        and r1.rho == r2.rho
        and r1.dmap == r2.dmap
        and r1.theta == r2.theta
    )


def are_equivalent(e1: AbelianExtension, e2: AbelianExtension) -> Optional[Matrix]:
    """
    判定两个扩张是否等价，等价时给出 φ: L̃_1 → L̃_2

    φ 满足 φ∘i_1 = i_2 且 p_2∘φ = p_1。

    Args:
        e1: 扩张
        e2: 同一基代数、同一表示上的扩张

    Returns:
        Optional[Matrix]: 等价映射，不等价时返回 None
    """
    if not same_representation(e1.rep, e2.rep):
        raise RepresentationMismatchError("两个扩张的基代数或表示不同")

    mu = solve_coboundary(e1.rep, e1.cocycle - e2.cocycle)
    if mu is None:
        logger.debug("上闭链之差不是上边缘，扩张不等价")
        return None

    phi = e2.inclusion @ (e1.splitting() + mu @ e1.projection) + e2.section @ e1.projection
    if not is_morphism(e1.total, e2.total, phi):
        raise InvariantViolation("由上边缘构造的映射不是代数同态")
    if phi @ e1.inclusion != e2.inclusion or e2.projection @ phi != e1.projection:
        raise InvariantViolation("等价映射不与扩张交换")
    return phi


def central_extension(L: LYAlgebra) -> AbelianExtension:
    """
    以中心 C(L) 为核的扩张 0 → C(L) → L → L/C(L) → 0

    Args:
        L: 代数

    Returns:
        AbelianExtension: 中心扩张；当 L 为二阶幂零时表示平凡
    """
    z = center(L)
    if z.dim == 0:
        raise TrivialCenterError("中心为零，无法构造中心扩张")
    e = from_total(L, z)
    _, index = lower_central_series(L)
    if index is not None and index <= 2 and not e.rep.is_trivial():
        raise InvariantViolation("二阶幂零代数的中心扩张表示应当平凡")
    logger.info(f"中心扩张: dim L = {L.dim}, dim C(L) = {z.dim}")
    return e

