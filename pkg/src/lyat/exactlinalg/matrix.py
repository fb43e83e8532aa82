"""
稠密精确矩阵与消元
有理数域上先做无分数前向消元再统一归一化，素域上直接 Gauss-Jordan。
主元选择固定为：列从左到右、行从上到下的第一个非零元。
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from ..exceptions import DimensionMismatchError
from .field import FieldSpec, Scalar, Vector


@dataclass(frozen=True)
class Matrix:
    """不可变的稠密矩阵，按行存储"""

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError(
                f"矩阵条目形状与声明的 {self.rows}x{self.cols} 不符"
            )

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence], cols: Optional[int] = None
    ) -> "Matrix":
        """
        由行列表构造矩阵，条目会被归约到规范形式

        Args:
            field: 标量域
            rows: 行列表
            cols: 列数（行列表为空时需要给出）

        Returns:
            Matrix: 新矩阵
        """
        entries = tuple(field.vector(r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(field, len(entries), cols, entries)

    @classmethod
    def from_columns(
        cls, field: FieldSpec, columns: Sequence[Sequence], rows: Optional[int] = None
    ) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        entries = tuple(
            tuple(field.normalize(col[i]) for col in columns) for i in range(rows)
        )
        return cls(field, rows, len(columns), entries)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, tuple(field.zero_vector(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, n, n, tuple(field.unit_vector(n, i) for i in range(n)))

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(
            self.field, r1 - r0, c1 - c0,
            tuple(tuple(r[c0:c1]) for r in self.entries[r0:r1]),
        )

    def to_strings(self) -> List[List[str]]:
        return [[self.field.format(x) for x in r] for r in self.entries]

    # ------------------------------------------------------------------
    # 运算
    # ------------------------------------------------------------------

    def _check_compatible(self, other: "Matrix") -> None:
        self.field.check_same(other.field)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.cols, self.rows,
            tuple(tuple(r[j] for r in self.entries) for j in range(self.cols)),
        )

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"矩阵加法形状不符: {self.shape} 与 {other.shape}")
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(
            tuple(f.normalize(x + y) for x, y in zip(r, s))
            for r, s in zip(self.entries, other.entries)
        ))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "Matrix":
        f = self.field
        c = f.normalize(c)
        return Matrix(f, self.rows, self.cols, tuple(
            tuple(f.normalize(c * x) for x in r) for r in self.entries
        ))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"矩阵乘法形状不符: {self.shape} @ {other.shape}")
        f = self.field
        other_cols = other.columns()
        return Matrix(f, self.rows, other.cols, tuple(
            tuple(f.normalize(sum(a * b for a, b in zip(r, col))) for col in other_cols)
            for r in self.entries
        ))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """矩阵作用于列向量"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"向量长度 {len(vector)} 与矩阵列数 {self.cols} 不符")
        f = self.field
        return tuple(f.normalize(sum(a * b for a, b in zip(r, vector))) for r in self.entries)

    def is_zero(self) -> bool:
        return all(self.field.is_zero_vector(r) for r in self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.field, self.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.rows != other.rows:
            raise DimensionMismatchError("横向拼接要求行数相同")
        return Matrix(self.field, self.rows, self.cols + other.cols, tuple(
            r + s for r, s in zip(self.entries, other.entries)
        ))

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.cols != other.cols:
            raise DimensionMismatchError("纵向拼接要求列数相同")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def sort_key(self) -> Tuple:
        """规范排序键，用于确定性输出"""
        if self.field.is_prime:
            return self.entries
        return tuple(tuple((x.numerator, x.denominator) for x in r) for r in self.entries)


# ----------------------------------------------------------------------
# 消元内核
# ----------------------------------------------------------------------

def _rref_prime(rows: List[List[int]], ncols: int, p: int) -> Tuple[List[List[int]], List[int]]:
    """素域上的 Gauss-Jordan 消元"""
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c] % p, -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                factor = rows[i][c]
                rows[i] = [(x - factor * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _primitive(row: List[int]) -> List[int]:
    content = reduce(gcd, row, 0)
    if content > 1:
        return [x // content for x in row]
    return row


def _rref_rational(rows: List[List[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """有理数域：整数化后无分数前向消元，最后回代并归一化"""
    work: List[List[int]] = []
    for row in rows:
        denom = reduce(lcm, (x.denominator for x in row), 1)
        work.append(_primitive([int(x * denom) for x in row]))

    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        a = work[r][c]
        for i in range(r + 1, len(work)):
            b = work[i][c]
            if b:
                work[i] = _primitive([a * x - b * y for x, y in zip(work[i], work[r])])
        pivots.append(c)
        r += 1
        if r == len(work):
            break

    # 回代与归一化
    reduced = [[Fraction(x, work[i][pivots[i]]) for x in work[i]] for i in range(r)]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            factor = reduced[k][c]
            if factor:
                reduced[k] = [x - factor * y for x, y in zip(reduced[k], reduced[i])]
    return reduced, pivots


def reduce_rows(
    field: FieldSpec, rows: Iterable[Sequence[Scalar]], ncols: int
) -> Tuple[List[Vector], List[int]]:
    """
    行化简为 RREF，只返回非零行

    Args:
        field: 标量域
        rows: 行
        ncols: 列数

    Returns:
        (非零 RREF 行, 主元列)
    """
    if field.is_prime:
        work = [[int(x) % field.p for x in r] for r in rows]
        work = [r for r in work if any(r)]
        reduced, pivots = _rref_prime(work, ncols, field.p)
    else:
        work = [[Fraction(x) for x in r] for r in rows]
        work = [r for r in work if any(r)]
        reduced, pivots = _rref_rational(work, ncols)
    return [tuple(r) for r in reduced], pivots


def rref(m: Matrix) -> Tuple[Matrix, int, List[int]]:
    """
    计算简化行阶梯形

    Args:
        m: 矩阵

    Returns:
        (RREF 矩阵, 秩, 主元列)
    """
    reduced, pivots = reduce_rows(m.field, m.entries, m.cols)
    rank = len(reduced)
    padding = [m.field.zero_vector(m.cols)] * (m.rows - rank)
    return Matrix(m.field, m.rows, m.cols, tuple(reduced) + tuple(padding)), rank, pivots


def rank(m: Matrix) -> int:
    return len(reduce_rows(m.field, m.entries, m.cols)[0])


def kernel_basis(m: Matrix) -> "SubspaceBasis":
    """
    零空间 {x : m·x = 0} 的 RREF 基

    Args:
        m: 矩阵

    Returns:
        SubspaceBasis: 零空间
    """
    from .subspace import SubspaceBasis

    f = m.field
    reduced, pivots = reduce_rows(f, m.entries, m.cols)
    return SubspaceBasis.span(f, m.cols, _kernel_vectors(f, reduced, pivots, m.cols))


def _kernel_vectors(
    field: FieldSpec, reduced: List[Vector], pivots: List[int], ncols: int
) -> List[Vector]:
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [field.zero] * ncols
        x[free] = field.one
        for row, c in zip(reduced, pivots):
            x[c] = field.normalize(-row[free])
        vectors.append(tuple(x))
    return vectors


@dataclass(frozen=True)
class AffineSolution:
    """仿射方程组 a·x = b 的解集：特解 + 齐次解空间"""

    particular: Vector
    homogeneous: "SubspaceBasis"


def solve_affine(a: Matrix, b: Sequence[Scalar]) -> Optional[AffineSolution]:
    """
    解 a·x = b

    Args:
        a: 系数矩阵
        b: 右端向量，长度等于 a 的行数

    Returns:
        Optional[AffineSolution]: 无解时返回 None
    """
    from .subspace import SubspaceBasis

    if len(b) != a.rows:
        raise DimensionMismatchError(f"右端长度 {len(b)} 与行数 {a.rows} 不符")
    f = a.field
    rhs = f.vector(b)
    augmented = [row + (value,) for row, value in zip(a.entries, rhs)]
    reduced, pivots = reduce_rows(f, augmented, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    particular = [f.zero] * a.cols
    for row, c in zip(reduced, pivots):
        particular[c] = row[a.cols]
    left = [row[:a.cols] for row in reduced]
    homogeneous = SubspaceBasis.span(f, a.cols, _kernel_vectors(f, left, pivots, a.cols))
    return AffineSolution(tuple(particular), homogeneous)


def invert(m: Matrix) -> Optional[Matrix]:
    """
    求逆矩阵

    Args:
        m: 方阵

    Returns:
        Optional[Matrix]: 奇异时返回 None
    """
    if not m.is_square:
        raise DimensionMismatchError(f"只有方阵可以求逆: {m.shape}")
    n = m.rows
    if n == 0:
        return m
    augmented = m.hstack(Matrix.identity(m.field, n))
    reduced, pivots = reduce_rows(m.field, augmented.entries, 2 * n)
    if len(reduced) < n or pivots[n - 1] != n - 1:
        return None
    return Matrix(m.field, n, n, tuple(row[n:] for row in reduced))
