"""
Aut^{V,L}(L̃) ≅ H^1(L, V)
"""

from ..algebra import is_automorphism
from ..cohomology import delta_zero
from ..exactlinalg import Matrix
from ..exceptions import DimensionMismatchError, InvariantViolation, NotACocycleError, NotAnAutomorphismError
from ..extension import AbelianExtension
from ..utils.config import get_config
from .pairs import classify_automorphism


def h1_aut_iso(e: AbelianExtension, lam: Matrix) -> Matrix:
    """
    λ ↦ γ，γ(v + s(a)) = v + λ(a) + s(a)

    Args:
        e: 扩张
        lam: δ_0 闭的 1-上链 (m×n)

    Returns:
        Matrix: Aut^{V,L}(L̃) 中的元素
    """
    if lam.shape != (e.vdim, e.n):
        raise DimensionMismatchError(f"λ 的形状 {lam.shape} 应为 {(e.vdim, e.n)}")
    if not delta_zero(e.rep, lam).is_zero():
        raise NotACocycleError("λ 不是 δ 闭的")
    gamma = e.inclusion @ (e.splitting() + lam @ e.projection) + e.section @ e.projection
    if get_config().compute.verify_constructions and not is_automorphism(e.total, gamma):
        raise InvariantViolation("H^1 元素对应的 γ 不是自同构")
    return gamma


def chi(e: AbelianExtension, gamma: Matrix) -> Matrix:
    """
    γ ↦ λ_γ = γs - s

    Args:
        e: 扩张
        gamma: Aut^{V,L}(L̃) 中的元素

    Returns:
        Matrix: λ_γ (m×n)
    """
    if not classify_automorphism(e, gamma).in_aut_vl:
        raise NotAnAutomorphismError("γ 不在 Aut^{V,L}(L̃) 中")
    return e.vcoord_matrix() @ (gamma @ e.section - e.section)
