"""
上链空间与上链
C^k 中成对位置 (x_{2i-1}, x_{2i}) 相等时取零，因此在每一对上交错；
坐标取字典序的规范元组 (每对严格递增) × V 的基。
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..exactlinalg import FieldSpec, Matrix, Scalar, Vector
from ..exceptions import DimensionMismatchError


@dataclass(frozen=True)
class CochainSpace:
    """C^degree(L, V) 的坐标系，dim L = n，dim V = m"""

    degree: int
    n: int
    m: int

    @cached_property
    def tuples(self) -> Tuple[Tuple[int, ...], ...]:
        pairs = self.degree // 2
        return tuple(
            idx for idx in product(range(self.n), repeat=self.degree)
            if all(idx[2 * i] < idx[2 * i + 1] for i in range(pairs))
        )

    @cached_property
    def index(self) -> Dict[Tuple[int, ...], int]:
        return {idx: pos for pos, idx in enumerate(self.tuples)}

    @property
    def dim(self) -> int:
        return len(self.tuples) * self.m

    def canonical(self, idx: Sequence[int]) -> Optional[Tuple[int, int]]:
        """
        把任意基元组化为规范元组

        Returns:
            (符号, 规范元组序号)；某一对相等时返回 None
        """
        work = list(idx)
        sign = 1
        for i in range(self.degree // 2):
            a, b = work[2 * i], work[2 * i + 1]
            if a == b:
                return None
            if a > b:
                work[2 * i], work[2 * i + 1] = b, a
                sign = -sign
        return sign, self.index[tuple(work)]


@dataclass(frozen=True)
class FullSpace:
    """不带成对条件的 n^degree × m 坐标系，用于 δ* 的输出"""

    degree: int
    n: int
    m: int

    @cached_property
    def tuples(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(product(range(self.n), repeat=self.degree))

    @property
    def dim(self) -> int:
        return len(self.tuples) * self.m

    def position(self, idx: Sequence[int]) -> int:
        pos = 0
        for i in idx:
            pos = pos * self.n + i
        return pos


@lru_cache(maxsize=None)
def cochain_space(degree: int, n: int, m: int) -> CochainSpace:
    return CochainSpace(degree, n, m)


@lru_cache(maxsize=None)
def full_space(degree: int, n: int, m: int) -> FullSpace:
    return FullSpace(degree, n, m)


@dataclass(frozen=True)
class CochainPair:
    """
    (2p, 2p+1) 上链 (f, g)，以规范坐标存储

    level = p，even 为 f 的坐标，odd 为 g 的坐标。
    """

    field: FieldSpec
    n: int
    m: int
    level: int
    even: Vector
    odd: Vector

    def __post_init__(self) -> None:
        if self.level < 1:
            raise DimensionMismatchError(f"上链层数必须 ≥ 1: {self.level}")
        if len(self.even) != self.even_space.dim or len(self.odd) != self.odd_space.dim:
            raise DimensionMismatchError(
                f"({2 * self.level},{2 * self.level + 1}) 上链坐标长度错误"
            )

    @property
    def even_space(self) -> CochainSpace:
        return cochain_space(2 * self.level, self.n, self.m)

    @property
    def odd_space(self) -> CochainSpace:
        return cochain_space(2 * self.level + 1, self.n, self.m)

    @property
    def coords(self) -> Vector:
        return self.even + self.odd

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec, n: int, m: int, level: int = 1) -> "CochainPair":
        even = cochain_space(2 * level, n, m)
        odd = cochain_space(2 * level + 1, n, m)
        return cls(field, n, m, level, field.zero_vector(even.dim), field.zero_vector(odd.dim))

    @classmethod
    def from_coords(
        cls, field: FieldSpec, n: int, m: int, level: int, coords: Sequence[Scalar]
    ) -> "CochainPair":
        split = cochain_space(2 * level, n, m).dim
        values = field.vector(coords)
        return cls(field, n, m, level, values[:split], values[split:])

    @classmethod
    def from_functions(
        cls,
        field: FieldSpec,
        n: int,
        m: int,
        f: Callable[..., Sequence],
        g: Callable[..., Sequence],
        level: int = 1,
    ) -> "CochainPair":
        """
        由规范元组上的取值构造

        Args:
            f: (x_1, ..., x_2p) -> K^m，只在规范元组上调用
            g: (x_1, ..., x_2p+1) -> K^m
        """
        even_space = cochain_space(2 * level, n, m)
        odd_space = cochain_space(2 * level + 1, n, m)
        even: List[Scalar] = []
        for idx in even_space.tuples:
            even.extend(_checked(field, f(*idx), m))
        odd: List[Scalar] = []
        for idx in odd_space.tuples:
            odd.extend(_checked(field, g(*idx), m))
        return cls(field, n, m, level, tuple(even), tuple(odd))

    @classmethod
    def from_entries(
        cls,
        field: FieldSpec,
        n: int,
        m: int,
        f: Dict[Tuple[int, ...], Sequence],
        g: Dict[Tuple[int, ...], Sequence],
        level: int = 1,
    ) -> "CochainPair":
        """由稀疏条目构造，条目可以是非规范元组（按成对交错换号）"""
        even_space = cochain_space(2 * level, n, m)
        odd_space = cochain_space(2 * level + 1, n, m)
        even = [field.zero] * even_space.dim
        odd = [field.zero] * odd_space.dim
        for space, target, entries in ((even_space, even, f), (odd_space, odd, g)):
            for idx, value in entries.items():
                if len(idx) != space.degree or any(not (0 <= i < n) for i in idx):
                    raise DimensionMismatchError(f"上链下标 {idx} 不合法")
                vec = _checked(field, value, m)
                canon = space.canonical(idx)
                if canon is None:
                    if not field.is_zero_vector(vec):
                        raise DimensionMismatchError(f"上链在 {idx} 处违反成对交错条件")
                    continue
                sign, pos = canon
                for r, x in enumerate(vec):
                    target[pos * m + r] = field.normalize(sign * x)
        return cls(field, n, m, level, tuple(even), tuple(odd))

    # ------------------------------------------------------------------
    # 求值
    # ------------------------------------------------------------------

    def _value(self, space: CochainSpace, coords: Vector, idx: Sequence[int]) -> Vector:
        canon = space.canonical(idx)
        if canon is None:
            return self.field.zero_vector(self.m)
        sign, pos = canon
        block = coords[pos * self.m:(pos + 1) * self.m]
        return block if sign > 0 else self.field.vector(-x for x in block)

    def f(self, *idx: int) -> Vector:
        """偶数次部分在基元组上的值"""
        return self._value(self.even_space, self.even, idx)

    def g(self, *idx: int) -> Vector:
        """奇数次部分在基元组上的值"""
        return self._value(self.odd_space, self.odd, idx)

    def _multilinear(self, part: Callable[..., Vector], vectors: Sequence[Sequence[Scalar]]) -> Vector:
        fld = self.field
        sparse = [[(i, c) for i, c in enumerate(v) if not fld.is_zero(c)] for v in vectors]
        acc: List[Scalar] = [0] * self.m
        for combo in product(*sparse):
            coeff = 1
            for _, c in combo:
                coeff *= c
            value = part(*(i for i, _ in combo))
            for r, x in enumerate(value):
                acc[r] += coeff * x
        return fld.vector(acc)

    def f_at(self, *vectors: Sequence[Scalar]) -> Vector:
        """偶数次部分的多线性扩张"""
        return self._multilinear(self.f, vectors)

    def g_at(self, *vectors: Sequence[Scalar]) -> Vector:
        """奇数次部分的多线性扩张"""
        return self._multilinear(self.g, vectors)

    # ------------------------------------------------------------------
    # 线性运算
    # ------------------------------------------------------------------

    def _check_compatible(self, other: "CochainPair") -> None:
        self.field.check_same(other.field)
        if (self.n, self.m, self.level) != (other.n, other.m, other.level):
            raise DimensionMismatchError("上链的维数或层数不一致")

    def __add__(self, other: "CochainPair") -> "CochainPair":
        self._check_compatible(other)
        return CochainPair.from_coords(
            self.field, self.n, self.m, self.level,
            [x + y for x, y in zip(self.coords, other.coords)],
        )

    def __neg__(self) -> "CochainPair":
        return self.scale(-1)

    def __sub__(self, other: "CochainPair") -> "CochainPair":
        return self + (-other)

    def scale(self, c: Scalar) -> "CochainPair":
        return CochainPair.from_coords(
            self.field, self.n, self.m, self.level, [c * x for x in self.coords]
        )

    def is_zero(self) -> bool:
        return self.field.is_zero_vector(self.coords)


@dataclass(frozen=True)
class FullCochain:
    """不带对称性约定的 degree 次多线性映射，坐标按 n^degree × m 展开"""

    field: FieldSpec
    n: int
    m: int
    degree: int
    values: Vector

    def value(self, *idx: int) -> Vector:
        pos = full_space(self.degree, self.n, self.m).position(idx)
        return self.values[pos * self.m:(pos + 1) * self.m]

    def is_zero(self) -> bool:
        return self.field.is_zero_vector(self.values)


def _checked(field: FieldSpec, value: Sequence, m: int) -> Vector:
    vec = field.vector(value)
    if len(vec) != m:
        raise DimensionMismatchError(f"上链取值长度 {len(vec)} 与 dim V = {m} 不符")
    return vec


# ----------------------------------------------------------------------
# C^1 = Hom(L, V)，以 m×n 矩阵表示，坐标顺序为 (i, r) -> i*m + r
# ----------------------------------------------------------------------

Cochain1 = Matrix


def cochain1_coords(lam: Matrix) -> Vector:
    return tuple(lam[r, i] for i in range(lam.cols) for r in range(lam.rows))


def cochain1_from_coords(field: FieldSpec, n: int, m: int, coords: Sequence[Scalar]) -> Matrix:
    if len(coords) != n * m:
        raise DimensionMismatchError(f"C^1 坐标长度 {len(coords)} 应为 {n * m}")
    return Matrix.from_rows(field, [[coords[i * m + r] for i in range(n)] for r in range(m)], n)
