"""
相容对、Wells 上闭链与可诱导性判定
"""

from dataclasses import dataclass
from typing import Optional

from ..algebra import is_automorphism
from ..cohomology import CochainPair, is_cocycle23, solve_coboundary
from ..exactlinalg import Matrix, invert
from ..exceptions import IncompatiblePairError, InvariantViolation
from ..extension import AbelianExtension
from ..representation import is_rep_morphism, twist
from ..utils.logger import get_logger
from .pairs import AutPair, LiftCertificate, check_pair, classify_automorphism

logger = get_logger(__name__)

REASON_INCOMPATIBLE = "incompatible"
REASON_NONTRIVIAL_CLASS = "nontrivial_class"


def is_compatible(e: AbelianExtension, pr: AutPair) -> bool:
    """
    φ 是诱导表示到扭曲表示的表示态射：
    φρ(a)φ⁻¹ = ρ(ψa)，φD(a,b)φ⁻¹ = D(ψa,ψb)，φθ(a,b)φ⁻¹ = θ(ψa,ψb)
    """
    check_pair(e, pr)
    return is_rep_morphism(e.rep, twist(e.rep, pr.psi), pr.phi)


def wells_cocycle(e: AbelianExtension, pr: AutPair) -> CochainPair:
    """
    (φα(ψ⁻¹a, ψ⁻¹b) - α(a,b), φβ(ψ⁻¹a, ψ⁻¹b, ψ⁻¹c) - β(a,b,c))

    Args:
        e: 扩张
        pr: 相容对

    Returns:
        CochainPair: (2,3) 上闭链
    """
    if not is_compatible(e, pr):
        raise IncompatiblePairError("(φ, ψ) 不是相容对")
    c = e.cocycle
    phi = pr.phi
    cols = invert(pr.psi).columns()

    def f(i: int, j: int):
        moved = phi.apply(c.f_at(cols[i], cols[j]))
        return [x - y for x, y in zip(moved, c.f(i, j))]

    def g(i: int, j: int, k: int):
        moved = phi.apply(c.g_at(cols[i], cols[j], cols[k]))
        return [x - y for x, y in zip(moved, c.g(i, j, k))]

    result = CochainPair.from_functions(e.field, e.n, e.vdim, f, g)
    if not is_cocycle23(e.rep, result):
        raise InvariantViolation("Wells 上链不是 (2,3) 上闭链")
    return result


@dataclass(frozen=True)
class WellsClass:
    """Wells 类：trivial 时 witness 满足 δ_0 witness = Wells 上闭链"""

    trivial: bool
    witness: Optional[Matrix]


def wells_class(e: AbelianExtension, pr: AutPair) -> WellsClass:
    """𝒲(φ, ψ) 是否为零类"""
    witness = solve_coboundary(e.rep, wells_cocycle(e, pr))
    return WellsClass(witness is not None, witness)


@dataclass(frozen=True)
class InducibilityDecision:
    """inducible 为假时 reason ∈ {incompatible, nontrivial_class}"""

    inducible: bool
    reason: Optional[str]
    certificate: Optional[LiftCertificate]


def lift_matrix(e: AbelianExtension, pr: AutPair, lam: Matrix) -> Matrix:
    """γ(v + s(a)) = φ(v) + λψ(a) + sψ(a) 的矩阵"""
    head = e.inclusion @ (pr.phi @ e.splitting() + lam @ pr.psi @ e.projection)
    return head + e.section @ pr.psi @ e.projection


def decide_inducible(e: AbelianExtension, pr: AutPair) -> InducibilityDecision:
    """
    构造性地判定 (φ, ψ) 是否可诱导

    Args:
        e: 扩张
        pr: 自同构对

    Returns:
        InducibilityDecision: 可诱导时附带证书 (γ, λ)
    """
    if not is_compatible(e, pr):
        return InducibilityDecision(False, REASON_INCOMPATIBLE, None)
    cls = wells_class(e, pr)
    if not cls.trivial:
        return InducibilityDecision(False, REASON_NONTRIVIAL_CLASS, None)

    gamma = lift_matrix(e, pr, cls.witness)
    if not is_automorphism(e.total, gamma):
        raise InvariantViolation("由 Wells 类见证构造的 γ 不是自同构")
    lifted = classify_automorphism(e, gamma)
    if lifted.pair != pr:
        raise InvariantViolation("提升 γ 的 τ(γ) 与 (φ, ψ) 不一致")
    if not is_compatible(e, lifted.pair):
        raise InvariantViolation("τ(γ) 不是相容对")
    logger.debug("找到提升 γ")
    return InducibilityDecision(True, None, LiftCertificate(gamma, cls.witness))


def lambda1(e: AbelianExtension, phi: Matrix) -> WellsClass:
    """λ₁(φ) = [(φα - α, φβ - β)]，要求 (φ, 1) ∈ 𝒞"""
    pr = AutPair(phi, Matrix.identity(e.field, e.n))
    if not is_compatible(e, pr):
        raise IncompatiblePairError("(φ, 1) 不是相容对")
    return wells_class(e, pr)


def lambda2(e: AbelianExtension, psi: Matrix) -> WellsClass:
    """λ₂(ψ) = [(α(ψ⁻¹·, ψ⁻¹·) - α, β(ψ⁻¹·, ψ⁻¹·, ψ⁻¹·) - β)]，要求 (1, ψ) ∈ 𝒞"""
    pr = AutPair(Matrix.identity(e.field, e.vdim), psi)
    if not is_compatible(e, pr):
        raise IncompatiblePairError("(1, ψ) 不是相容对")
    return wells_class(e, pr)
