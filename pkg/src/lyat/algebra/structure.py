"""
Lie-Yamaguti 代数的结构常数表示与公理检验
"""

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations, product
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..exactlinalg import FieldSpec, Scalar, Vector
from ..exceptions import DimensionMismatchError, FieldMismatchError, SkewConflictError
from ..utils.logger import get_logger

logger = get_logger(__name__)

Sparse = List[Tuple[int, Scalar]]
AXIOMS = ("LY1", "LY2", "LY3", "LY4", "LY5", "LY6")


def default_basis_names(n: int) -> Tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(n))


@dataclass(frozen=True)
class LYAlgebra:
    """
    有限维 Lie-Yamaguti 代数

    binary[i][j] 是 [e_i, e_j] 的坐标，ternary[i][j][k] 是 {e_i, e_j, e_k} 的坐标。
    构造时不强制斜对称，公理由 check_axioms 认证。
    """

    field: FieldSpec
    dim: int
    basis_names: Tuple[str, ...]
    binary: Tuple[Tuple[Vector, ...], ...]
    ternary: Tuple[Tuple[Tuple[Vector, ...], ...], ...]

    def __post_init__(self) -> None:
        n = self.dim
        if len(self.basis_names) != n:
            raise DimensionMismatchError(f"基名称个数 {len(self.basis_names)} 与维数 {n} 不符")
        if len(self.binary) != n or any(len(row) != n for row in self.binary):
            raise DimensionMismatchError("二元结构常数张量形状错误")
        if len(self.ternary) != n or any(
            len(row) != n or any(len(col) != n for col in row) for row in self.ternary
        ):
            raise DimensionMismatchError("三元结构常数张量形状错误")

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def from_functions(
        cls,
        field: FieldSpec,
        dim: int,
        bracket: Callable[[int, int], Sequence],
        triple: Callable[[int, int, int], Sequence],
        basis_names: Optional[Sequence[str]] = None,
    ) -> "LYAlgebra":
        """
        由基元上的乘法函数构造稠密张量（不做斜对称补全）

        Args:
            field: 标量域
            dim: 维数
            bracket: (i, j) -> [e_i, e_j] 的坐标
            triple: (i, j, k) -> {e_i, e_j, e_k} 的坐标

        Returns:
            LYAlgebra: 新代数
        """
        r = range(dim)
        binary = tuple(tuple(field.vector(bracket(i, j)) for j in r) for i in r)
        ternary = tuple(
            tuple(tuple(field.vector(triple(i, j, k)) for k in r) for j in r) for i in r
        )
        names = tuple(basis_names) if basis_names is not None else default_basis_names(dim)
        return cls(field, dim, names, binary, ternary)

    @classmethod
    def from_products(
        cls,
        field: FieldSpec,
        dim: int,
        binary: Mapping[Tuple[int, int], Sequence],
        ternary: Mapping[Tuple[int, int, int], Sequence],
        basis_names: Optional[Sequence[str]] = None,
    ) -> "LYAlgebra":
        """
        由非零乘积表构造，并按 LY1/LY2 补全斜对称像

        Args:
            field: 标量域
            dim: 维数
            binary: {(i, j): [e_i, e_j]}，只需给出一侧
            ternary: {(i, j, k): {e_i, e_j, e_k}}，前两个位置只需给出一侧

        Returns:
            LYAlgebra: 新代数
        """
        zero = field.zero_vector(dim)
        b_table: Dict[Tuple[int, int], Vector] = {}
        t_table: Dict[Tuple[int, int, int], Vector] = {}

        def _check_index(key: Tuple[int, ...]) -> None:
            if any(not (0 <= i < dim) for i in key):
                raise DimensionMismatchError(f"下标 {key} 超出维数 {dim}")

        def _put(table: Dict, key: Tuple, value: Vector, label: str) -> None:
            existing = table.get(key)
            if existing is not None and existing != value:
                raise SkewConflictError(
                    f"{label}{key} = {[field.format(x) for x in existing]}",
                    f"{label}{key} = {[field.format(x) for x in value]}",
                )
            table[key] = value

        for (i, j), value in binary.items():
            _check_index((i, j))
            vec = field.vector(value)
            if len(vec) != dim:
                raise DimensionMismatchError(f"[e{i + 1}, e{j + 1}] 的坐标长度错误")
            if i == j:
                if not field.is_zero_vector(vec):
                    raise SkewConflictError(f"binary({i}, {i}) 非零", "LY1 要求 [x, x] = 0")
                continue
            _put(b_table, (i, j), vec, "binary")
            _put(b_table, (j, i), field.vector(-x for x in vec), "binary")

        for (i, j, k), value in ternary.items():
            _check_index((i, j, k))
            vec = field.vector(value)
            if len(vec) != dim:
                raise DimensionMismatchError(f"{{e{i + 1}, e{j + 1}, e{k + 1}}} 的坐标长度错误")
            if i == j:
                if not field.is_zero_vector(vec):
                    raise SkewConflictError(f"ternary({i}, {i}, {k}) 非零", "LY2 要求 {x, x, y} = 0")
                continue
            _put(t_table, (i, j, k), vec, "ternary")
            _put(t_table, (j, i, k), field.vector(-x for x in vec), "ternary")

        return cls.from_functions(
            field, dim,
            lambda i, j: b_table.get((i, j), zero),
            lambda i, j, k: t_table.get((i, j, k), zero),
            basis_names,
        )

    @classmethod
    def abelian(cls, field: FieldSpec, dim: int, basis_names: Optional[Sequence[str]] = None) -> "LYAlgebra":
        zero = field.zero_vector(dim)
        return cls.from_functions(field, dim, lambda i, j: zero, lambda i, j, k: zero, basis_names)

    # ------------------------------------------------------------------
    # 稀疏缓存
    # ------------------------------------------------------------------

    @cached_property
    def bsparse(self) -> List[List[Sparse]]:
        f = self.field
        return [
            [[(t, c) for t, c in enumerate(vec) if not f.is_zero(c)] for vec in row]
            for row in self.binary
        ]

    @cached_property
    def tsparse(self) -> List[List[List[Sparse]]]:
        f = self.field
        return [
            [[[(t, c) for t, c in enumerate(vec) if not f.is_zero(c)] for vec in col] for col in row]
            for row in self.ternary
        ]

    def is_abelian(self) -> bool:
        return not any(
            entry for row in self.bsparse for entry in row
        ) and not any(entry for row in self.tsparse for col in row for entry in col)

    # ------------------------------------------------------------------
    # 多线性求值
    # ------------------------------------------------------------------

    def _sparse(self, x: Sequence[Scalar]) -> Sparse:
        if len(x) != self.dim:
            raise DimensionMismatchError(f"向量长度 {len(x)} 与代数维数 {self.dim} 不符")
        f = self.field
        return [(i, c) for i, c in enumerate(x) if not f.is_zero(c)]

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        """[x, y]"""
        result: List[Scalar] = [0] * self.dim
        bs = self.bsparse
        ys = self._sparse(y)
        for i, a in self._sparse(x):
            for j, b in ys:
                for t, c in bs[i][j]:
                    result[t] += a * b * c
        return self.field.vector(result)

    def triple(self, x: Sequence[Scalar], y: Sequence[Scalar], z: Sequence[Scalar]) -> Vector:
        """{x, y, z}"""
        result: List[Scalar] = [0] * self.dim
        ts = self.tsparse
        ys = self._sparse(y)
        zs = self._sparse(z)
        for i, a in self._sparse(x):
            for j, b in ys:
                ab = a * b
                for k, c in zs:
                    for t, d in ts[i][j][k]:
                        result[t] += ab * c * d
        return self.field.vector(result)

    def basis_vector(self, i: int) -> Vector:
        return self.field.unit_vector(self.dim, i)


def bracket_eval(
    L: LYAlgebra,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    z: Optional[Sequence[Scalar]] = None,
    field: Optional[FieldSpec] = None,
) -> Vector:
    """
    多线性扩张后的 [x, y]（z 缺省）或 {x, y, z}

    Args:
        L: 代数
        x, y, z: 坐标向量
        field: 调用方认定的标量域，给出时必须与 L 一致

    Returns:
        Vector: 结果坐标
    """
    if field is not None and field != L.field:
        raise FieldMismatchError(f"向量域 {field.name} 与代数域 {L.field.name} 不一致")
    if z is None:
        return L.bracket(x, y)
    return L.triple(x, y, z)


# ----------------------------------------------------------------------
# 公理
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomStatus:
    """单条公理的检验结果"""

    name: str
    passed: bool
    witness: Optional[Tuple[int, ...]] = None
    residual: Optional[Vector] = None


@dataclass(frozen=True)
class AxiomReport:
    """LY1 至 LY6 的检验报告"""

    statuses: Tuple[AxiomStatus, ...] = dc_field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.statuses)

    def __getitem__(self, name: str) -> AxiomStatus:
        for status in self.statuses:
            if status.name == name:
                return status
        raise KeyError(name)

    def failures(self) -> List[AxiomStatus]:
        return [s for s in self.statuses if not s.passed]


def _acc(result: List, sparse: Sparse, coeff: Scalar) -> None:
    for t, c in sparse:
        result[t] += coeff * c


def evaluate_axiom(L: LYAlgebra, name: str, idx: Tuple[int, ...]) -> Vector:
    """
    在基元组上计算公理左端减右端的残差

    Args:
        L: 代数
        name: LY1..LY6
        idx: 基元下标

    Returns:
        Vector: 残差，公理成立时为零
    """
    n = L.dim
    bs, ts = L.bsparse, L.tsparse
    res: List[Scalar] = [0] * n
    if name == "LY1":
        a, b = idx
        _acc(res, bs[a][b], 1)
        if a != b:
            _acc(res, bs[b][a], 1)
    elif name == "LY2":
        a, b, c = idx
        _acc(res, ts[a][b][c], 1)
        if a != b:
            _acc(res, ts[b][a][c], 1)
    elif name == "LY3":
        a, b, c = idx
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for t, k in bs[x][y]:
                _acc(res, bs[t][z], k)
            _acc(res, ts[x][y][z], 1)
    elif name == "LY4":
        a, b, c, x = idx
        for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
            for t, k in bs[u][v]:
                _acc(res, ts[t][w][x], k)
    elif name == "LY5":
        a, b, x, y = idx
        for t, k in bs[x][y]:
            _acc(res, ts[a][b][t], k)
        for t, k in ts[a][b][x]:
            _acc(res, bs[t][y], -k)
        for t, k in ts[a][b][y]:
            _acc(res, bs[x][t], -k)
    elif name == "LY6":
        a, b, x, y, z = idx
        dab = ts[a][b]
        for t, k in ts[x][y][z]:
            _acc(res, dab[t], k)
        for t, k in dab[x]:
            _acc(res, ts[t][y][z], -k)
        for t, k in dab[y]:
            _acc(res, ts[x][t][z], -k)
        for t, k in dab[z]:
            _acc(res, ts[x][y][t], -k)
    else:
        raise KeyError(f"未知公理: {name}")
    return L.field.vector(res)


def _tuples(name: str, n: int, skew: bool) -> Iterator[Tuple[int, ...]]:
    """待检验的基元组；LY1/LY2 成立时按交错性只取规范元组"""
    r = range(n)
    if name == "LY1":
        return ((a, b) for a in r for b in r if a <= b)
    if name == "LY2":
        return ((a, b, c) for a in r for b in r if a <= b for c in r)
    if not skew:
        arity = {"LY3": 3, "LY4": 4, "LY5": 4, "LY6": 5}[name]
        return product(r, repeat=arity)
    if name == "LY3":
        return combinations(r, 3)
    if name == "LY4":
        return ((a, b, c, x) for a, b, c in combinations(r, 3) for x in r)
    if name == "LY5":
        return ((a, b, x, y) for a, b in combinations(r, 2) for x, y in combinations(r, 2))
    return (
        (a, b, x, y, z)
        for a, b in combinations(r, 2) for x, y in combinations(r, 2) for z in r
    )


def check_axioms(L: LYAlgebra) -> AxiomReport:
    """
    在全部基元组上检验 LY1-LY6，每条公理记录第一个失败的见证

    Args:
        L: 代数

    Returns:
        AxiomReport: 检验报告
    """
    f = L.field
    statuses: List[AxiomStatus] = []
    skew = True
    for name in AXIOMS:
        status = AxiomStatus(name, True)
        for idx in _tuples(name, L.dim, skew):
            residual = evaluate_axiom(L, name, idx)
            if not f.is_zero_vector(residual):
                status = AxiomStatus(name, False, tuple(idx), residual)
                break
        if name in ("LY1", "LY2") and not status.passed:
            skew = False
        statuses.append(status)

    report = AxiomReport(tuple(statuses))
    if report.passed:
        logger.debug(f"{L.dim} 维代数通过 LY1-LY6")
    else:
        logger.debug(f"公理检验失败: {[s.name for s in report.failures()]}")
    return report
