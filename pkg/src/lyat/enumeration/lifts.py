"""
扩张上的穷举：提升子群、相容对与逐个 μ 的提升搜索
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from ..algebra import LYAlgebra, is_automorphism
from ..exactlinalg import Matrix
from ..exceptions import PreconditionError
from ..extension import AbelianExtension
from ..inducibility import (
    REASON_INCOMPATIBLE,
    AutPair,
    check_pair,
    classify_automorphism,
    decide_inducible,
    is_compatible,
)
from ..utils.logger import get_logger
from .automorphisms import enumerate_automorphisms
from .budget import EnumBudget, resolve_budget

logger = get_logger(__name__)

PairKey = Tuple


def pair_key(pr: AutPair) -> PairKey:
    return (pr.phi.entries, pr.psi.entries)


@dataclass
class LiftSubgroups:
    """
    Aut(L̃) 中与扩张相关的子群

    aut_v: γ(V) = V；aut_v_l: 另有 γ̄ = id；aut_upper_v: 另有 γ|_V = id；
    aut_vl: 两者同时成立；image_of_tau: τ(Aut_V) 中的不同对；automorphisms: 全部 Aut(L̃)。
    """

    total_count: int
    automorphisms: List[Matrix] = field(default_factory=list)
    aut_v: List[Matrix] = field(default_factory=list)
    aut_v_l: List[Matrix] = field(default_factory=list)
    aut_upper_v: List[Matrix] = field(default_factory=list)
    aut_vl: List[Matrix] = field(default_factory=list)
    tau: Dict[Tuple, AutPair] = field(default_factory=dict)
    image_of_tau: List[AutPair] = field(default_factory=list)

    def summary(self) -> Dict[str, int]:
        return {
            "aut_total": self.total_count,
            "aut_v": len(self.aut_v),
            "aut_v_l": len(self.aut_v_l),
            "aut_upper_v": len(self.aut_upper_v),
            "aut_vl": len(self.aut_vl),
            "image_of_tau": len(self.image_of_tau),
        }


def enumerate_lift_subgroups(e: AbelianExtension, budget: Optional[EnumBudget] = None) -> LiftSubgroups:
    """
    用 classify_automorphism 过滤 Aut(L̃)

    Args:
        e: 素域上的扩张
        budget: 枚举预算

    Returns:
        LiftSubgroups: 各子群及 τ 的像
    """
    auts = enumerate_automorphisms(e.total, budget)
    out = LiftSubgroups(total_count=len(auts), automorphisms=auts)
    image: Dict[PairKey, AutPair] = {}
    for gamma in auts:
        cls = classify_automorphism(e, gamma)
        if not cls.in_aut_v:
            continue
        out.aut_v.append(gamma)
        out.tau[gamma.entries] = cls.pair
        image.setdefault(pair_key(cls.pair), cls.pair)
        if cls.in_aut_v_l:
            out.aut_v_l.append(gamma)
        if cls.in_aut_upper_v:
            out.aut_upper_v.append(gamma)
        if cls.in_aut_vl:
            out.aut_vl.append(gamma)
    out.image_of_tau = sorted(image.values(), key=AutPair.sort_key)
    logger.info(f"提升子群: {out.summary()}")
    return out


@dataclass
class CompatiblePairs:
    """𝒞 以及 𝒞₁ = {φ : (φ,1) ∈ 𝒞}、𝒞₂ = {ψ : (1,ψ) ∈ 𝒞}"""

    pairs: List[AutPair]
    c1: List[Matrix]
    c2: List[Matrix]

    def keys(self) -> set:
        return {pair_key(pr) for pr in self.pairs}


def general_linear(f, m: int, budget: Optional[EnumBudget] = None) -> List[Matrix]:
    """GL(V)，即 m 维阿贝尔代数的自同构群"""
    return enumerate_automorphisms(LYAlgebra.abelian(f, m), budget)


def enumerate_compatible_pairs(e: AbelianExtension, budget: Optional[EnumBudget] = None) -> CompatiblePairs:
    """
    GL(V) × Aut(L̄) 中的全部相容对

    Args:
        e: 素域上的扩张
        budget: 枚举预算

    Returns:
        CompatiblePairs: 相容对及其两个坐标子群
    """
    b = resolve_budget(budget)
    gl = general_linear(e.field, e.vdim, b)
    auts = enumerate_automorphisms(e.base, b)
    b.check_count(len(gl) * len(auts), "相容对")
    one_v = Matrix.identity(e.field, e.vdim)
    one_l = Matrix.identity(e.field, e.n)

    pairs = [AutPair(phi, psi) for phi in gl for psi in auts if is_compatible(e, AutPair(phi, psi))]
    c1 = [pr.phi for pr in pairs if pr.psi == one_l]
    c2 = [pr.psi for pr in pairs if pr.phi == one_v]
    logger.info(f"|𝒞| = {len(pairs)}, |𝒞₁| = {len(c1)}, |𝒞₂| = {len(c2)}")
    return CompatiblePairs(pairs, c1, c2)


def brute_force_inducible(
    e: AbelianExtension, pr: AutPair, budget: Optional[EnumBudget] = None
) -> Optional[Matrix]:
    """
    逐个尝试 μ ∈ Hom(L, V)，候选 γ(v + s(a)) = φ(v) + μ(a) + sψ(a)

    保持 V 且 γ̄ = ψ、γ|_V = φ 的 γ 必为此形式。

    Args:
        e: 素域上的扩张
        pr: 自同构对
        budget: 枚举预算

    Returns:
        Optional[Matrix]: 字典序最小的可行 γ，不存在时返回 None
    """
    b = resolve_budget(budget)
    p = b.check_field(e.field)
    b.check_dim(e.total.dim)
    check_pair(e, pr)
    n, m = e.n, e.vdim
    b.check_count(p ** (n * m), "提升搜索")

    fixed = e.inclusion @ pr.phi @ e.splitting() + e.section @ pr.psi @ e.projection
    for entries in product(range(p), repeat=n * m):
        mu = Matrix.from_rows(e.field, [entries[r * n:(r + 1) * n] for r in range(m)], n)
        gamma = fixed + e.inclusion @ mu @ e.projection
        if is_automorphism(e.total, gamma):
            return gamma
    return None


@dataclass(frozen=True)
class SplitSections:
    """
    分裂扩张的两个截面：
    η(φ): γ(a + v) = a + φ(v)，η'(ψ): γ(a + v) = ψ(a) + v
    """

    extension: AbelianExtension

    def eta(self, phi: Matrix) -> Matrix:
        e = self.extension
        return e.section @ e.projection + e.inclusion @ phi @ e.splitting()

    def eta_prime(self, psi: Matrix) -> Matrix:
        e = self.extension
        return e.section @ psi @ e.projection + e.inclusion @ e.splitting()


def split_sections(e: AbelianExtension) -> SplitSections:
    """只对上闭链恰为零的扩张给出"""
    if not e.cocycle.is_zero():
        raise PreconditionError("η、η' 只对上闭链为零的分裂扩张定义")
    return SplitSections(e)


@dataclass
class InducibilityComparison:
    """decide_inducible 与提升搜索在 GL(V) × Aut(L̄) 上的逐对比较"""

    total: int
    compatible: int
    inducible: int
    disagreements: List[AutPair] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def to_dict(self) -> Dict[str, object]:
        return {
            "agree": self.agree,
            "counts": {"pairs": self.total, "compatible": self.compatible, "inducible": self.inducible},
            "disagreements": [
                {"phi": pr.phi.to_strings(), "psi": pr.psi.to_strings()} for pr in self.disagreements
            ],
        }


def compare_inducibility(e: AbelianExtension, budget: Optional[EnumBudget] = None) -> InducibilityComparison:
    """
    对每个 (φ, ψ) ∈ GL(V) × Aut(L̄) 比较构造性判定与逐个 μ 的提升搜索

    Args:
        e: 素域上的扩张
        budget: 枚举预算

    Returns:
        InducibilityComparison: 计数与不一致的对
    """
    b = resolve_budget(budget)
    p = b.check_field(e.field)
    gl = general_linear(e.field, e.vdim, b)
    auts = enumerate_automorphisms(e.base, b)
    b.check_count(len(gl) * len(auts) * p ** (e.n * e.vdim), "可诱导性比较")

    out = InducibilityComparison(total=len(gl) * len(auts), compatible=0, inducible=0)
    for phi in gl:
        for psi in auts:
            pr = AutPair(phi, psi)
            decision = decide_inducible(e, pr)
            if decision.reason != REASON_INCOMPATIBLE:
                out.compatible += 1
            if decision.inducible:
                out.inducible += 1
            if decision.inducible != (brute_force_inducible(e, pr, b) is not None):
                logger.error(f"判定不一致: φ = {phi.to_strings()}, ψ = {psi.to_strings()}")
                out.disagreements.append(pr)
    logger.info(f"可诱导性比较: {out.total} 对，相容 {out.compatible}，可诱导 {out.inducible}")
    return out
