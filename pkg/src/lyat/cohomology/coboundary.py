"""
上边缘算子
所有算子都在规范坐标上组装为稀疏矩阵，按表示缓存；作用、核与像都由同一矩阵给出。
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.structure import Sparse
from ..exactlinalg import FieldSpec, Matrix, Scalar, SubspaceBasis, Vector, kernel_basis, reduce_rows
from ..exceptions import DimensionMismatchError
from ..representation import Representation
from ..representation.structure import SparseMatrix
from ..utils.logger import get_logger
from .cochains import (
    CochainPair,
    CochainSpace,
    FullCochain,
    cochain1_coords,
    cochain_space,
    full_space,
)

logger = get_logger(__name__)

SparseRow = Tuple[Tuple[int, Scalar], ...]
Slot = Union[int, Sparse]

_BATCH = 256


@dataclass(frozen=True)
class LinearOperator:
    """按行稀疏存储的线性映射 K^ncols → K^nrows"""

    field: FieldSpec
    nrows: int
    ncols: int
    rows: Tuple[SparseRow, ...]

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        if len(vector) != self.ncols:
            raise DimensionMismatchError(f"向量长度 {len(vector)} 与算子列数 {self.ncols} 不符")
        f = self.field
        return tuple(f.normalize(sum(c * vector[j] for j, c in row)) for row in self.rows)

    def _dense(self, row: SparseRow) -> List[Scalar]:
        out = [self.field.zero] * self.ncols
        for j, c in row:
            out[j] = c
        return out

    def row_space(self) -> SubspaceBasis:
        """分批消元得到行空间，去掉零行与重复行"""
        f = self.field
        seen = set()
        basis: List[Vector] = []
        batch: List[List[Scalar]] = []
        for row in self.rows:
            if not row or row in seen:
                continue
            seen.add(row)
            batch.append(self._dense(row))
            if len(batch) >= _BATCH:
                basis, _ = reduce_rows(f, list(basis) + batch, self.ncols)
                batch = []
        return SubspaceBasis.span(f, self.ncols, list(basis) + batch)

    def kernel(self) -> SubspaceBasis:
        space = self.row_space()
        return kernel_basis(Matrix(self.field, space.dim, self.ncols, space.vectors))

    def rank(self) -> int:
        return self.row_space().dim

    def image(self) -> SubspaceBasis:
        """列空间"""
        columns: List[List[Scalar]] = [[self.field.zero] * self.nrows for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, c in row:
                columns[j][i] = c
        return SubspaceBasis.span(self.field, self.nrows, columns)

    def to_matrix(self) -> Matrix:
        return Matrix(self.field, self.nrows, self.ncols, tuple(tuple(self._dense(r)) for r in self.rows))

    def vstack(self, other: "LinearOperator") -> "LinearOperator":
        if self.ncols != other.ncols:
            raise DimensionMismatchError("纵向拼接要求列数相同")
        return LinearOperator(self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows)


class _RowBuilder:
    """
    逐个输出坐标组装算子的行

    输入上链空间按顺序拼接；每一项形如 coef · M · h(x_1, ..., x_k)，
    其中 M 是表示矩阵（或恒等），参数槽可以是基元下标或稀疏向量。
    """

    def __init__(self, field: FieldSpec, m: int, inputs: Sequence[CochainSpace]):
        self.field = field
        self.m = m
        self.inputs: List[Tuple[CochainSpace, int]] = []
        offset = 0
        for space in inputs:
            self.inputs.append((space, offset))
            offset += space.dim
        self.ncols = offset
        self.rows: List[SparseRow] = []
        self._block: List[Dict[int, Scalar]] = []

    def start(self) -> None:
        self._block = [defaultdict(int) for _ in range(self.m)]

    def add(self, coef: Scalar, op: Optional[SparseMatrix], which: int, args: Sequence[Slot]) -> None:
        space, offset = self.inputs[which]
        m = self.m
        choices = [[(a, 1)] if isinstance(a, int) else a for a in args]
        for combo in product(*choices):
            c = coef
            for _, x in combo:
                c = c * x
            canon = space.canonical(tuple(i for i, _ in combo))
            if canon is None:
                continue
            sign, pos = canon
            base = offset + pos * m
            factor = c * sign
            if op is None:
                for r in range(m):
                    self._block[r][base + r] += factor
            else:
                for r, s, x in op:
                    self._block[r][base + s] += factor * x

    def finish(self) -> None:
        f = self.field
        for entries in self._block:
            row = []
            for j in sorted(entries):
                value = f.normalize(entries[j])
                if not f.is_zero(value):
                    row.append((j, value))
            self.rows.append(tuple(row))

    def operator(self) -> LinearOperator:
        return LinearOperator(self.field, len(self.rows), self.ncols, tuple(self.rows))


# ----------------------------------------------------------------------
# 算子组装
# ----------------------------------------------------------------------

def _replace(seq: Tuple[Slot, ...], pos: int, value: Slot) -> Tuple[Slot, ...]:
    return seq[:pos] + (value,) + seq[pos + 1:]


def delta_zero_operator(r: Representation) -> LinearOperator:
    """
    δ: C^1 → C^(2,3)

    δ_I λ(a,b) = ρ(a)λ(b) - ρ(b)λ(a) - λ([a,b])
    δ_II λ(a,b,c) = θ(b,c)λ(a) - θ(a,c)λ(b) + D(a,b)λ(c) - λ({a,b,c})
    """
    key = ("delta", 0)
    cache = r.operator_cache
    if key in cache:
        return cache[key]
    L = r.algebra
    n, m = L.dim, r.vdim
    bs, ts = L.bsparse, L.tsparse
    rho, dm, th = r.rho_sparse, r.dmap_sparse, r.theta_sparse
    builder = _RowBuilder(r.field, m, [cochain_space(1, n, m)])
    for a, b in cochain_space(2, n, m).tuples:
        builder.start()
        builder.add(1, rho[a], 0, (b,))
        builder.add(-1, rho[b], 0, (a,))
        builder.add(-1, None, 0, (bs[a][b],))
        builder.finish()
    for a, b, c in cochain_space(3, n, m).tuples:
        builder.start()
        builder.add(1, th[b][c], 0, (a,))
        builder.add(-1, th[a][c], 0, (b,))
        builder.add(1, dm[a][b], 0, (c,))
        builder.add(-1, None, 0, (ts[a][b][c],))
        builder.finish()
    op = builder.operator()
    cache[key] = op
    logger.debug(f"δ_0 算子 {op.nrows}x{op.ncols}")
    return op


def delta_operator(r: Representation, level: int) -> LinearOperator:
    """
    δ: C^(2p,2p+1) → C^(2p+2,2p+3)，p = level ≥ 1，按一般公式逐项组装

    Args:
        r: 表示
        level: 输入上链的层数 p

    Returns:
        LinearOperator: 行为输出规范坐标、列为输入规范坐标的算子
    """
    if level < 1:
        raise DimensionMismatchError(f"层数必须 ≥ 1: {level}")
    key = ("delta", level)
    cache = r.operator_cache
    if key in cache:
        return cache[key]

    L = r.algebra
    n, m, p = L.dim, r.vdim, level
    bs, ts = L.bsparse, L.tsparse
    rho, dm, th = r.rho_sparse, r.dmap_sparse, r.theta_sparse
    sign = -1 if p % 2 else 1
    builder = _RowBuilder(
        r.field, m, [cochain_space(2 * p, n, m), cochain_space(2 * p + 1, n, m)]
    )
    f_in, g_in = 0, 1

    # δ_I
    for X in cochain_space(2 * p + 2, n, m).tuples:
        builder.start()
        head = X[:2 * p]
        builder.add(sign, rho[X[2 * p]], g_in, head + (X[2 * p + 1],))
        builder.add(-sign, rho[X[2 * p + 1]], g_in, X[:2 * p + 1])
        builder.add(-sign, None, g_in, head + (bs[X[2 * p]][X[2 * p + 1]],))
        for k in range(1, p + 1):
            a, b = X[2 * k - 2], X[2 * k - 1]
            rest = X[:2 * k - 2] + X[2 * k:]
            builder.add(1 if k % 2 else -1, dm[a][b], f_in, rest)
            for j in range(2 * k, 2 * p + 2):
                args = _replace(rest, j - 2, ts[a][b][X[j]])
                builder.add(-1 if k % 2 else 1, None, f_in, args)
        builder.finish()

    # δ_II
    for X in cochain_space(2 * p + 3, n, m).tuples:
        builder.start()
        builder.add(sign, th[X[2 * p + 1]][X[2 * p + 2]], g_in, X[:2 * p + 1])
        builder.add(-sign, th[X[2 * p]][X[2 * p + 2]], g_in, X[:2 * p] + (X[2 * p + 1],))
        for k in range(1, p + 2):
            a, b = X[2 * k - 2], X[2 * k - 1]
            rest = X[:2 * k - 2] + X[2 * k:]
            builder.add(1 if k % 2 else -1, dm[a][b], g_in, rest)
            for j in range(2 * k, 2 * p + 3):
                args = _replace(rest, j - 2, ts[a][b][X[j]])
                builder.add(-1 if k % 2 else 1, None, g_in, args)
        builder.finish()

    op = builder.operator()
    cache[key] = op
    logger.debug(f"δ 第 {level} 层算子 {op.nrows}x{op.ncols}")
    return op


def delta_star_operator(r: Representation) -> LinearOperator:
    """
    δ*: C^(2,3) → C^(3,4)，输出为不带对称约定的完整张量

    δ*_I f(a,b,c) = -Σ_cyc ρ(a)f(b,c) + Σ_cyc f([a,b],c) + Σ_cyc g(a,b,c)
    δ*_II g(a,b,c,d) = Σ_cyc θ(a,d)f(b,c) + Σ_cyc g([a,b],c,d)
    """
    key = ("star",)
    cache = r.operator_cache
    if key in cache:
        return cache[key]
    L = r.algebra
    n, m = L.dim, r.vdim
    bs = L.bsparse
    rho, th = r.rho_sparse, r.theta_sparse
    builder = _RowBuilder(r.field, m, [cochain_space(2, n, m), cochain_space(3, n, m)])
    for a, b, c in full_space(3, n, m).tuples:
        builder.start()
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            builder.add(-1, rho[x], 0, (y, z))
            builder.add(1, None, 0, (bs[x][y], z))
            builder.add(1, None, 1, (x, y, z))
        builder.finish()
    for a, b, c, d in full_space(4, n, m).tuples:
        builder.start()
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            builder.add(1, th[x][d], 0, (y, z))
            builder.add(1, None, 1, (bs[x][y], z, d))
        builder.finish()
    op = builder.operator()
    cache[key] = op
    logger.debug(f"δ* 算子 {op.nrows}x{op.ncols}")
    return op


def cocycle_operator(r: Representation) -> LinearOperator:
    """(δ, δ*) 叠放，核即 Z^(2,3)"""
    key = ("cocycle",)
    cache = r.operator_cache
    if key not in cache:
        cache[key] = delta_operator(r, 1).vstack(delta_star_operator(r))
    return cache[key]


# ----------------------------------------------------------------------
# 作用于上链
# ----------------------------------------------------------------------

def check_cochain_shape(r: Representation, n: int, m: int, field: FieldSpec) -> None:
    r.field.check_same(field)
    if (r.dim, r.vdim) != (n, m):
        raise DimensionMismatchError(
            f"上链维数 (n={n}, m={m}) 与表示 (n={r.dim}, m={r.vdim}) 不符"
        )


def delta_zero(r: Representation, lam: Matrix) -> CochainPair:
    """
    δ_0 λ = (δ_I λ, δ_II λ)

    Args:
        r: 表示
        lam: m×n 矩阵表示的 λ ∈ Hom(L, V)

    Returns:
        CochainPair: (2,3) 上链
    """
    check_cochain_shape(r, lam.cols, lam.rows, lam.field)
    values = delta_zero_operator(r).apply(cochain1_coords(lam))
    return CochainPair.from_coords(r.field, r.dim, r.vdim, 1, values)


def delta_pair(r: Representation, c: CochainPair) -> CochainPair:
    """δ(f, g)，结果比输入高一层"""
    check_cochain_shape(r, c.n, c.m, c.field)
    values = delta_operator(r, c.level).apply(c.coords)
    return CochainPair.from_coords(r.field, r.dim, r.vdim, c.level + 1, values)


def delta_star(r: Representation, c: CochainPair) -> Tuple[FullCochain, FullCochain]:
    """(δ*_I f, δ*_II g)，只对 (2,3) 上链定义"""
    check_cochain_shape(r, c.n, c.m, c.field)
    if c.level != 1:
        raise DimensionMismatchError("δ* 只作用于 (2,3) 上链")
    values = delta_star_operator(r).apply(c.coords)
    split = full_space(3, r.dim, r.vdim).dim
    return (
        FullCochain(r.field, r.dim, r.vdim, 3, values[:split]),
        FullCochain(r.field, r.dim, r.vdim, 4, values[split:]),
    )
