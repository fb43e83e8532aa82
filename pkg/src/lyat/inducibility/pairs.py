"""
自同构对 (φ, ψ)、提升证书与总代数自同构的分类 (τ)
"""

from dataclasses import dataclass
from typing import Optional

from ..algebra import is_automorphism
from ..exactlinalg import Matrix, invert
from ..exceptions import DimensionMismatchError, NotAnAutomorphismError
from ..extension import AbelianExtension
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class AutPair:
    """
    (φ, ψ) ∈ Aut(V) × Aut(L)

    V 是阿贝尔的，Aut(V) 即 GL(V)，φ 只需可逆。
    """

    phi: Matrix
    psi: Matrix

    @classmethod
    def identity(cls, e: AbelianExtension) -> "AutPair":
        return cls(Matrix.identity(e.field, e.vdim), Matrix.identity(e.field, e.n))

    def compose(self, other: "AutPair") -> "AutPair":
        """(φ, ψ)∘(φ', ψ') = (φφ', ψψ')"""
        return AutPair(self.phi @ other.phi, self.psi @ other.psi)

    def inverse(self) -> "AutPair":
        phi_inv, psi_inv = invert(self.phi), invert(self.psi)
        if phi_inv is None or psi_inv is None:
            raise NotAnAutomorphismError("自同构对不可逆")
        return AutPair(phi_inv, psi_inv)

    def sort_key(self):
        return (self.phi.sort_key(), self.psi.sort_key())


def check_pair(e: AbelianExtension, pr: AutPair) -> None:
    """
    校验 (φ, ψ) 的形状、可逆性以及 ψ 是基代数自同构

    Args:
        e: 扩张
        pr: 自同构对
    """
    m, n = e.vdim, e.n
    if pr.phi.shape != (m, m):
        raise DimensionMismatchError(f"φ 的形状 {pr.phi.shape} 应为 {(m, m)}")
    if pr.psi.shape != (n, n):
        raise DimensionMismatchError(f"ψ 的形状 {pr.psi.shape} 应为 {(n, n)}")
    e.field.check_same(pr.phi.field)
    e.field.check_same(pr.psi.field)
    if invert(pr.phi) is None:
        raise NotAnAutomorphismError("φ 不可逆")
    if not is_automorphism(e.base, pr.psi):
        raise NotAnAutomorphismError("ψ 不是基代数的自同构")


@dataclass(frozen=True)
class LiftCertificate:
    """
    提升证书：γ(v + s(a)) = φ(v) + λψ(a) + sψ(a)

    lam 满足 φα(ψ⁻¹·, ψ⁻¹·) - α = δ_I λ（同样对 β）。
    """

    gamma: Matrix
    lam: Matrix

    def mu(self, pr: AutPair) -> Matrix:
        """γ 在 s(L) 上的 V 分量 λ∘ψ"""
        return self.lam @ pr.psi


@dataclass(frozen=True)
class AutomorphismClass:
    """
    γ ∈ Aut(L̃) 所属的子群

    in_aut_v: γ(V) = V；pair: τ(γ) = (γ|_V, γ̄)；
    in_aut_v_l: γ̄ = id；in_aut_upper_v: γ|_V = id；in_aut_vl: 两者同时成立。
    """

    in_aut_v: bool
    pair: Optional[AutPair]
    in_aut_v_l: bool
    in_aut_upper_v: bool
    in_aut_vl: bool


def classify_automorphism(e: AbelianExtension, gamma: Matrix) -> AutomorphismClass:
    """
    判定 γ 是否保持 V，并计算 τ(γ) = (γ|_V, pγs)

    Args:
        e: 扩张
        gamma: 总代数的自同构

    Returns:
        AutomorphismClass: 分类结果
    """
    if not is_automorphism(e.total, gamma):
        raise NotAnAutomorphismError("γ 不是总代数的自同构")
    image = gamma @ e.inclusion
    if not all(e.ideal.contains(col) for col in image.columns()):
        return AutomorphismClass(False, None, False, False, False)

    phi = e.vcoord_matrix() @ image
    psi = e.projection @ gamma @ e.section
    fixes_base = psi.is_identity()
    fixes_v = phi.is_identity()
    return AutomorphismClass(
        in_aut_v=True,
        pair=AutPair(phi, psi),
        in_aut_v_l=fixes_base,
        in_aut_upper_v=fixes_v,
        in_aut_vl=fixes_base and fixes_v,
    )


def tau(e: AbelianExtension, gamma: Matrix) -> AutPair:
    """τ(γ)，要求 γ 保持 V"""
    cls = classify_automorphism(e, gamma)
    if cls.pair is None:
        raise NotAnAutomorphismError("γ 不保持 V")
    return cls.pair
