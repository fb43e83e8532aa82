"""
子空间
以 RREF 行向量表示，主元列严格递增、主元为 1、主元列其余位置为零，因此表示唯一。
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from ..exceptions import DimensionMismatchError
from .field import FieldSpec, Scalar, Vector
from .matrix import Matrix, reduce_rows


@dataclass(frozen=True)
class SubspaceBasis:
    """K^n 的子空间"""

    field: FieldSpec
    ambient_dim: int
    vectors: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence[Scalar]]) -> "SubspaceBasis":
        """
        由任意向量组张成子空间

        Args:
            field: 标量域
            ambient_dim: 外围空间维数
            vectors: 生成元

        Returns:
            SubspaceBasis: RREF 形式的子空间
        """
        rows = [field.vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"向量长度 {len(v)} 与外围维数 {ambient_dim} 不符")
        reduced, pivots = reduce_rows(field, rows, ambient_dim)
        return cls(field, ambient_dim, tuple(reduced), tuple(pivots))

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "SubspaceBasis":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "SubspaceBasis":
        return cls(
            field, ambient_dim,
            tuple(field.unit_vector(ambient_dim, i) for i in range(ambient_dim)),
            tuple(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def complement(self) -> Tuple[int, ...]:
        """非主元坐标，即商空间与典范截面使用的坐标"""
        pivot_set = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in pivot_set)

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """模子空间约化：结果在所有主元列上为零"""
        f = self.field
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"向量长度 {len(v)} 与外围维数 {self.ambient_dim} 不符")
        work = list(v)
        for w, c in zip(self.vectors, self.pivots):
            coeff = work[c]
            if not f.is_zero(coeff):
                work = [x - coeff * y for x, y in zip(work, w)]
        return f.vector(work)

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.field.is_zero_vector(self.reduce(v))

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        """
        子空间中向量在 RREF 基下的坐标（即主元列上的取值）

        Args:
            v: 子空间中的向量

        Returns:
            Vector: 坐标
        """
        if not self.contains(v):
            raise DimensionMismatchError("向量不在子空间内")
        return self.field.vector(v[c] for c in self.pivots)

    def issubset(self, other: "SubspaceBasis") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def as_matrix(self) -> Matrix:
        """行为基向量的矩阵"""
        return Matrix(self.field, self.dim, self.ambient_dim, self.vectors)

    def inclusion_matrix(self) -> Matrix:
        """列为基向量的矩阵，即包含映射 K^dim → K^n"""
        return self.as_matrix().transpose() if self.dim else Matrix.zeros(self.field, self.ambient_dim, 0)
