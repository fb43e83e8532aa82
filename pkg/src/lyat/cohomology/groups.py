"""
上闭链判定与上同调群 H^1、H^(2,3)、H^(4,5)
"""

from dataclasses import dataclass
from typing import List, Optional

from ..exactlinalg import Matrix, SubspaceBasis, Vector, solve_affine
from ..exceptions import BudgetExceededError, DimensionMismatchError, InvariantViolation
from ..representation import Representation
from ..utils.config import get_config
from ..utils.logger import get_logger
from .coboundary import (
    check_cochain_shape,
    cocycle_operator,
    delta_operator,
    delta_zero_operator,
)
from .cochains import CochainPair, cochain1_from_coords

logger = get_logger(__name__)


def is_cocycle23(r: Representation, c: CochainPair) -> bool:
    """δ(f,g) = 0 且 δ*(f,g) = 0"""
    check_cochain_shape(r, c.n, c.m, c.field)
    if c.level != 1:
        raise DimensionMismatchError("只判定 (2,3) 上链")
    return r.field.is_zero_vector(cocycle_operator(r).apply(c.coords))


def h1_basis(r: Representation) -> SubspaceBasis:
    """
    H^1(L,V) = {λ : δ_I λ = 0 = δ_II λ}，即导子空间

    Args:
        r: 表示

    Returns:
        SubspaceBasis: K^{mn} 中的子空间，坐标顺序 (i, r) -> i*m + r
    """
    basis = delta_zero_operator(r).kernel()
    logger.debug(f"dim H^1 = {basis.dim}")
    return basis


def h1_cochains(r: Representation) -> List[Matrix]:
    """H^1 的基，以 m×n 矩阵给出"""
    return [
        cochain1_from_coords(r.field, r.dim, r.vdim, v) for v in h1_basis(r).vectors
    ]


@dataclass(frozen=True)
class H23Result:
    """Z^(2,3)、B^(2,3) 及商空间的代表元"""

    representation: Representation
    z_basis: SubspaceBasis
    b_basis: SubspaceBasis

    @property
    def z_dim(self) -> int:
        return self.z_basis.dim

    @property
    def b_dim(self) -> int:
        return self.b_basis.dim

    @property
    def h_dim(self) -> int:
        return self.z_dim - self.b_dim

    def _pair(self, coords: Vector) -> CochainPair:
        r = self.representation
        return CochainPair.from_coords(r.field, r.dim, r.vdim, 1, coords)

    def representative_lift(self, c: CochainPair) -> CochainPair:
        """
        上闭链模 B^(2,3) 的规范代表元（在 B 的主元坐标上为零）

        Args:
            c: (2,3) 上闭链

        Returns:
            CochainPair: 同一上同调类中的规范代表元
        """
        if not self.z_basis.contains(c.coords):
            raise DimensionMismatchError("输入不是上闭链")
        return self._pair(self.b_basis.reduce(c.coords))

    def class_equal(self, c1: CochainPair, c2: CochainPair) -> bool:
        """两个上闭链是否上同调"""
        return self.b_basis.contains((c1 - c2).coords)

    def representatives(self) -> List[CochainPair]:
        """H^(2,3) 一组基的代表元"""
        reduced = [self.b_basis.reduce(z) for z in self.z_basis.vectors]
        complement = SubspaceBasis.span(self.z_basis.field, self.z_basis.ambient_dim, reduced)
        return [self._pair(v) for v in complement.vectors]

    def summary(self) -> dict:
        return {"z_dim": self.z_dim, "b_dim": self.b_dim, "h_dim": self.h_dim}


def h23(r: Representation) -> H23Result:
    """
    H^(2,3) = Z^(2,3) / B^(2,3)，其中 B^(2,3) 取 δ_0 在 C^1 上的像

    Args:
        r: 表示

    Returns:
        H23Result: 维数、基与代表元
    """
    z_basis = cocycle_operator(r).kernel()
    b_basis = delta_zero_operator(r).image()
    if not b_basis.issubset(z_basis):
        raise InvariantViolation("B^(2,3) 不包含于 Z^(2,3)，表示可能不满足公理")
    result = H23Result(r, z_basis, b_basis)
    logger.info(f"H^(2,3): z_dim={result.z_dim}, b_dim={result.b_dim}, h_dim={result.h_dim}")
    return result


def solve_coboundary(r: Representation, c: CochainPair) -> Optional[Matrix]:
    """
    求 λ 使 δ_0 λ = c

    Args:
        r: 表示
        c: (2,3) 上链

    Returns:
        Optional[Matrix]: m×n 矩阵；c 不是上边缘时返回 None
    """
    check_cochain_shape(r, c.n, c.m, c.field)
    if c.level != 1:
        raise DimensionMismatchError("只求解 (2,3) 上边缘")
    solution = solve_affine(delta_zero_operator(r).to_matrix(), c.coords)
    if solution is None:
        return None
    return cochain1_from_coords(r.field, r.dim, r.vdim, solution.particular)


@dataclass(frozen=True)
class H45Result:
    z_dim: int
    b_dim: int

    @property
    def h_dim(self) -> int:
        return self.z_dim - self.b_dim

    def summary(self) -> dict:
        return {"z_dim": self.z_dim, "b_dim": self.b_dim, "h_dim": self.h_dim}


def h45(r: Representation) -> H45Result:
    """
    H^(4,5)：Z 为第 2 层 δ 的核，B 为第 1 层 δ 的像

    Args:
        r: 表示，dim L 不超过 compute.h45_max_dim

    Returns:
        H45Result: 维数
    """
    limit = get_config().compute.h45_max_dim
    if r.dim > limit:
        raise BudgetExceededError(f"H^(4,5) 只对 dim L ≤ {limit} 计算，当前 {r.dim}")
    z_basis = delta_operator(r, 2).kernel()
    b_basis = delta_operator(r, 1).image()
    if not b_basis.issubset(z_basis):
        raise InvariantViolation("B^(4,5) 不包含于 Z^(4,5)")
    result = H45Result(z_basis.dim, b_basis.dim)
    logger.info(f"H^(4,5): {result.summary()}")
    return result
