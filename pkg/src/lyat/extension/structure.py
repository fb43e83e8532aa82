"""
阿贝尔扩张：由 (L, V, 表示, 上闭链) 构造总代数，或由总代数与阿贝尔理想反推
"""

from dataclasses import dataclass
from typing import List, Optional

from ..algebra import LYAlgebra, check_axioms, ideal_tests, quotient
from ..cohomology import CochainPair, is_cocycle23
from ..exactlinalg import Matrix, Scalar, SubspaceBasis, Vector
from ..exceptions import (
    DimensionMismatchError,
    InvariantViolation,
    NotACocycleError,
    NotAnIdealError,
    NotASectionError,
)
from ..representation import Representation, representation_axioms_pass, semidirect
from ..utils.config import get_config
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class AbelianExtension:
    """
    阿贝尔扩张 0 → V → L̃ → L → 0

    inclusion: (n+m)×m，projection: n×(n+m)，section: (n+m)×n；
    ideal 是 V 在 L̃ 中的 RREF 基，inclusion 的列即这组基向量。
    """

    base: LYAlgebra
    rep: Representation
    cocycle: CochainPair
    total: LYAlgebra
    inclusion: Matrix
    projection: Matrix
    section: Matrix
    ideal: SubspaceBasis

    @property
    def n(self) -> int:
        return self.base.dim

    @property
    def vdim(self) -> int:
        return self.rep.vdim

    @property
    def field(self):
        return self.base.field

    def vcoord_matrix(self) -> Matrix:
        """m×(n+m) 矩阵：取 V 的主元坐标"""
        N = self.total.dim
        return Matrix.from_rows(
            self.field,
            [[1 if c == pivot else 0 for c in range(N)] for pivot in self.ideal.pivots],
            N,
        )

    def splitting(self) -> Matrix:
        """x ↦ V 坐标 (x - sPx)，m×(n+m)"""
        N = self.total.dim
        return self.vcoord_matrix() @ (Matrix.identity(self.field, N) - self.section @ self.projection)

    def with_section(self, section: Matrix) -> "AbelianExtension":
        """同一扩张换用另一个截面，诱导上闭链随之改变"""
        _check_section(self.projection, section, self.n, self.total.dim)
        cocycle = induced_cocycle(self.total, self.ideal, section, self.projection, self.base)
        return AbelianExtension(
            self.base, self.rep, cocycle, self.total,
            self.inclusion, self.projection, section, self.ideal,
        )


# ----------------------------------------------------------------------
# 由 (L, V, 表示, 上闭链) 构造
# ----------------------------------------------------------------------

def build_extension_raw(L: LYAlgebra, r: Representation, c: CochainPair) -> LYAlgebra:
    """
    不检查前置条件地构造 L ⊕ V 上的运算

    [a+u, b+v] = [a,b] + ρ(a)v - ρ(b)u + α(a,b)
    {a+u, b+v, c+w} = {a,b,c} + D(a,b)w + θ(b,c)u - θ(a,c)v + β(a,b,c)
    """
    if r.algebra.dim != L.dim or (c.n, c.m, c.level) != (L.dim, r.vdim, 1):
        raise DimensionMismatchError("代数、表示与上链的维数不一致")
    n = L.dim
    split = semidirect(r)

    def bracket(i: int, j: int) -> List[Scalar]:
        out = list(split.binary[i][j])
        if i < n and j < n:
            for t, x in enumerate(c.f(i, j)):
                out[n + t] += x
        return out

    def triple(i: int, j: int, k: int) -> List[Scalar]:
        out = list(split.ternary[i][j][k])
        if i < n and j < n and k < n:
            for t, x in enumerate(c.g(i, j, k)):
                out[n + t] += x
        return out

    return LYAlgebra.from_functions(L.field, split.dim, bracket, triple, split.basis_names)


def build_extension(L: LYAlgebra, r: Representation, c: CochainPair) -> AbelianExtension:
    """
    由上闭链构造阿贝尔扩张，典范截面 s(a) = (a, 0)

    Args:
        L: 基代数
        r: L 在 V 上的表示
        c: (2,3) 上闭链 (α, β)

    Returns:
        AbelianExtension: 扩张
    """
    if not is_cocycle23(r, c):
        raise NotACocycleError("(α, β) 不是 (2,3) 上闭链")
    total = build_extension_raw(L, r, c)
    if get_config().compute.verify_constructions:
        report = check_axioms(total)
        if not report.passed:
            raise InvariantViolation(f"上闭链构造的总代数不满足 {report.failures()[0].name}")

    f = L.field
    n, m = L.dim, r.vdim
    N = n + m
    ideal = SubspaceBasis.span(f, N, [f.unit_vector(N, n + t) for t in range(m)])
    extension = AbelianExtension(
        base=L,
        rep=r,
        cocycle=c,
        total=total,
        inclusion=Matrix.from_columns(f, [f.unit_vector(N, n + t) for t in range(m)], N),
        projection=Matrix.from_rows(f, [f.unit_vector(N, i) for i in range(n)], N),
        section=Matrix.from_columns(f, [f.unit_vector(N, i) for i in range(n)], N),
        ideal=ideal,
    )
    logger.debug(f"构造扩张: dim L = {n}, dim V = {m}")
    return extension


# ----------------------------------------------------------------------
# 由总代数反推
# ----------------------------------------------------------------------

def _check_section(projection: Matrix, section: Matrix, n: int, total_dim: int) -> None:
    if section.shape != (total_dim, n):
        raise DimensionMismatchError(f"截面形状 {section.shape} 应为 {(total_dim, n)}")
    if not (projection @ section).is_identity():
        raise NotASectionError("p∘t 不是恒等映射")


def canonical_section(V: SubspaceBasis) -> Matrix:
    """ē_c ↦ e_{comp[c]}，comp 为 V 的非主元坐标"""
    f = V.field
    N = V.ambient_dim
    comp = V.complement()
    if not comp:
        return Matrix.zeros(f, N, 0)
    return Matrix.from_columns(f, [f.unit_vector(N, c) for c in comp], N)


def _lifts(section: Matrix) -> List[Vector]:
    return section.columns()


def induced_representation(
    total: LYAlgebra,
    V: SubspaceBasis,
    section: Matrix,
    base: Optional[LYAlgebra] = None,
) -> Representation:
    """
    诱导表示：ρ(a)v = [s(a), v]，D(a,b)v = {s(a), s(b), v}，θ(a,b)v = {v, s(a), s(b)}

    Args:
        total: 总代数
        V: 阿贝尔理想
        section: 截面
        base: 商代数，缺省时现算

    Returns:
        Representation: 基代数在 V 上的表示（与截面无关）
    """
    if base is None:
        base, _ = quotient(total, V)
    lifts = _lifts(section)
    ws = V.vectors
    m = V.dim

    def as_rows(columns: List[Vector]) -> List[List[Scalar]]:
        return [[columns[k][t] for k in range(m)] for t in range(m)]

    def rho(i: int) -> List[List[Scalar]]:
        return as_rows([V.coordinates(total.bracket(lifts[i], w)) for w in ws])

    def dmap(i: int, j: int) -> List[List[Scalar]]:
        return as_rows([V.coordinates(total.triple(lifts[i], lifts[j], w)) for w in ws])

    def theta(i: int, j: int) -> List[List[Scalar]]:
        return as_rows([V.coordinates(total.triple(w, lifts[i], lifts[j])) for w in ws])

    return Representation.from_functions(base, m, rho, dmap, theta)


def induced_cocycle(
    total: LYAlgebra,
    V: SubspaceBasis,
    section: Matrix,
    projection: Matrix,
    base: LYAlgebra,
) -> CochainPair:
    """
    诱导上闭链：α(a,b) = [s(a), s(b)] - s([a,b])，β(a,b,c) = {s(a), s(b), s(c)} - s({a,b,c})

    Returns:
        CochainPair: V 坐标下的 (α, β)
    """
    lifts = _lifts(section)

    def defect(x: Vector) -> Vector:
        back = section.apply(projection.apply(x))
        return V.coordinates(tuple(a - b for a, b in zip(x, back)))

    return CochainPair.from_functions(
        total.field, base.dim, V.dim,
        lambda a, b: defect(total.bracket(lifts[a], lifts[b])),
        lambda a, b, c: defect(total.triple(lifts[a], lifts[b], lifts[c])),
    )


def from_total(
    total: LYAlgebra, V: SubspaceBasis, section: Optional[Matrix] = None
) -> AbelianExtension:
    """
    由总代数与阿贝尔理想反推扩张数据

    Args:
        total: 总代数 L̃
        V: L̃ 的阿贝尔理想
        section: 截面，缺省取典范截面

    Returns:
        AbelianExtension: base = L̃/V，表示与上闭链按诱导公式给出
    """
    if V.ambient_dim != total.dim:
        raise DimensionMismatchError(f"子空间外围维数 {V.ambient_dim} 与总代数维数 {total.dim} 不符")
    if not ideal_tests(total, V).is_abelian_ideal:
        raise NotAnIdealError("V 不是阿贝尔理想")
    base, projection = quotient(total, V)
    if section is None:
        section = canonical_section(V)
    else:
        _check_section(projection, section, base.dim, total.dim)

    rep = induced_representation(total, V, section, base)
    cocycle = induced_cocycle(total, V, section, projection, base)
    if get_config().compute.verify_constructions:
        if not representation_axioms_pass(rep):
            raise InvariantViolation("诱导表示不满足表示公理")
        if not is_cocycle23(rep, cocycle):
            raise InvariantViolation("诱导上链不是上闭链")

    logger.debug(f"反推扩张: dim L̃ = {total.dim}, dim V = {V.dim}")
    return AbelianExtension(
        base=base,
        rep=rep,
        cocycle=cocycle,
        total=total,
        inclusion=V.inclusion_matrix(),
        projection=projection,
        section=section,
        ideal=V,
    )
