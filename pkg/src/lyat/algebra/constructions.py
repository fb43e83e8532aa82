"""
经典构造与内置代数族
Lie / Leibniz / Malcev / 约化 Lie 代数到 Lie-Yamaguti 代数，以及 Heisenberg 型代数族
"""

from typing import List, Literal, Mapping, Optional, Sequence, Tuple

from ..exactlinalg import FieldSpec, Matrix, RATIONAL, Scalar, Vector
from ..exceptions import ConstructionError
from ..utils.config import get_config
from ..utils.logger import get_logger
from .structure import LYAlgebra, check_axioms, default_basis_names

logger = get_logger(__name__)

ClassicalKind = Literal["lie", "leibniz", "malcev", "reductive"]


def _product_table(
    field: FieldSpec,
    dim: int,
    products: Mapping[Tuple[int, int], Sequence],
    skew: bool,
) -> List[List[Vector]]:
    """稠密乘法表；skew 为真时补全 (j, i) 并检查一致性"""
    zero = field.zero_vector(dim)
    table: List[List[Optional[Vector]]] = [[None] * dim for _ in range(dim)]
    for (i, j), value in products.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ConstructionError(f"乘积下标 ({i}, {j}) 超出维数 {dim}")
        vec = field.vector(value)
        if len(vec) != dim:
            raise ConstructionError(f"乘积 ({i}, {j}) 的坐标长度错误")
        if table[i][j] is not None and table[i][j] != vec:
            raise ConstructionError(f"乘积 ({i}, {j}) 重复且取值不同")
        table[i][j] = vec
        if skew:
            if i == j and not field.is_zero_vector(vec):
                raise ConstructionError(f"输入不是斜对称的: ({i}, {i}) 非零")
            neg = field.vector(-x for x in vec)
            if table[j][i] is not None and table[j][i] != neg:
                raise ConstructionError(f"输入不是斜对称的: ({i}, {j}) 与 ({j}, {i})")
            table[j][i] = neg
    return [[v if v is not None else zero for v in row] for row in table]


def _compose(field: FieldSpec, table: List[List[Vector]], left: Vector, k: int) -> List[Scalar]:
    """(Σ_t left_t e_t)·e_k"""
    out: List[Scalar] = [0] * len(left)
    for t, c in enumerate(left):
        if not field.is_zero(c):
            for s, d in enumerate(table[t][k]):
                out[s] += c * d
    return out


def _left(field: FieldSpec, table: List[List[Vector]], i: int, right: Sequence[Scalar]) -> List[Scalar]:
    """e_i·(Σ_t right_t e_t)"""
    out: List[Scalar] = [0] * len(right)
    for t, c in enumerate(right):
        if not field.is_zero(c):
            for s, d in enumerate(table[i][t]):
                out[s] += c * d
    return out


def from_classical(
    kind: ClassicalKind,
    products: Mapping[Tuple[int, int], Sequence],
    dim: int,
    field: FieldSpec = RATIONAL,
    g_dim: int = 0,
    basis_names: Optional[Sequence[str]] = None,
) -> LYAlgebra:
    """
    由经典代数构造 Lie-Yamaguti 代数

    Args:
        kind: lie / leibniz / malcev / reductive
        products: 乘法表 {(i, j): e_i·e_j 的坐标}
        dim: 输入代数的维数
        field: 标量域
        g_dim: reductive 时前 g_dim 个坐标张成 G，其余张成 H
        basis_names: 结果代数的基名称

    Returns:
        LYAlgebra: 通过公理检验的代数
    """
    f = field
    if kind in ("lie", "malcev", "reductive"):
        c = _product_table(f, dim, products, skew=True)
    elif kind == "leibniz":
        c = _product_table(f, dim, products, skew=False)
    else:
        raise ConstructionError(f"未知的构造类型: {kind}")

    if kind == "lie":
        algebra = LYAlgebra.from_functions(
            f, dim,
            lambda i, j: c[i][j],
            lambda i, j, k: _compose(f, c, c[i][j], k),
            basis_names,
        )
    elif kind == "malcev":
        def malcev_triple(i: int, j: int, k: int) -> List[Scalar]:
            # {x,y,z} = <x,<y,z>> - <y,<x,z>> + <<x,y>,z>
            first = _left(f, c, i, c[j][k])
            second = _left(f, c, j, c[i][k])
            third = _compose(f, c, c[i][j], k)
            return [a - b + d for a, b, d in zip(first, second, third)]

        algebra = LYAlgebra.from_functions(f, dim, lambda i, j: c[i][j], malcev_triple, basis_names)
    elif kind == "leibniz":
        algebra = LYAlgebra.from_functions(
            f, dim,
            lambda i, j: [a - b for a, b in zip(c[i][j], c[j][i])],
            lambda i, j, k: [-x for x in _compose(f, c, c[i][j], k)],
            basis_names,
        )
    else:
        algebra = _reductive(f, c, dim, g_dim, basis_names)

    if get_config().compute.verify_constructions:
        report = check_axioms(algebra)
        if not report.passed:
            failed = report.failures()[0]
            raise ConstructionError(
                f"{kind} 构造的结果不满足 {failed.name}，见证 {failed.witness}"
            )
    logger.debug(f"{kind} 构造得到 {algebra.dim} 维 Lie-Yamaguti 代数")
    return algebra


def _reductive(
    f: FieldSpec,
    c: List[List[Vector]],
    dim: int,
    g_dim: int,
    basis_names: Optional[Sequence[str]],
) -> LYAlgebra:
    """约化分解 L = G ⊕ H 上的 H：[a,b] = π_H[a,b]，{a,b,c} = [π_G[a,b], c]"""
    if not (0 <= g_dim <= dim):
        raise ConstructionError(f"G 的维数 {g_dim} 不合法")
    g_range = range(g_dim)
    h_range = range(g_dim, dim)
    for i in g_range:
        for j in g_range:
            if any(not f.is_zero(c[i][j][t]) for t in h_range):
                raise ConstructionError(f"[G, G] ⊄ G: ({i}, {j})")
        for j in h_range:
            if any(not f.is_zero(c[i][j][t]) for t in g_range):
                raise ConstructionError(f"[G, H] ⊄ H: ({i}, {j})")

    def bracket(a: int, b: int) -> List[Scalar]:
        return list(c[g_dim + a][g_dim + b][g_dim:])

    def triple(a: int, b: int, k: int) -> List[Scalar]:
        g_part = [x if t < g_dim else 0 for t, x in enumerate(c[g_dim + a][g_dim + b])]
        return _compose(f, c, tuple(g_part), g_dim + k)[g_dim:]

    return LYAlgebra.from_functions(f, dim - g_dim, bracket, triple, basis_names)


# ----------------------------------------------------------------------
# 内置代数族
# ----------------------------------------------------------------------

def _check_n(n: int) -> None:
    if n < 1:
        raise ConstructionError(f"n 必须 ≥ 1: {n}")


def heisenberg(n: int, field: FieldSpec = RATIONAL) -> LYAlgebra:
    """
    Heisenberg Lie-Yamaguti 代数 h_n

    基的顺序为 (e_1..e_n, e_{n+1}..e_{2n}, e)，非零乘积只有
    [e_i, e_{n+i}] = e 与 {e_i, e_{n+i}, e_i} = e 及其斜对称像。
    """
    _check_n(n)
    dim = 2 * n + 1
    e = field.unit_vector(dim, 2 * n)
    names = default_basis_names(2 * n) + ("e",)
    return LYAlgebra.from_products(
        field, dim,
        {(i, n + i): e for i in range(n)},
        {(i, n + i, i): e for i in range(n)},
        names,
    )


def generalized_heisenberg(n: int, field: FieldSpec = RATIONAL) -> LYAlgebra:
    """
    广义 Heisenberg Lie-Yamaguti 代数 G_n

    维数 2n+2，非零乘积 [e_i, e_{n+1+i}] = e = {e_i, e_{n+1+i}, e_i} (1 ≤ i ≤ n)
    与 {e_{n+1}, e_{2n+1}, e_{n+1}} = e。
    """
    _check_n(n)
    dim = 2 * n + 2
    e = field.unit_vector(dim, 2 * n + 1)
    ternary = {(i, n + 1 + i, i): e for i in range(n)}
    ternary[(n, 2 * n, n)] = e
    names = default_basis_names(2 * n + 1) + ("e",)
    return LYAlgebra.from_products(
        field, dim, {(i, n + 1 + i): e for i in range(n)}, ternary, names
    )


def heisenberg_lie(n: int, field: FieldSpec = RATIONAL) -> LYAlgebra:
    """Heisenberg Lie 代数，三元运算取 [[a,b],c] = 0"""
    _check_n(n)
    dim = 2 * n + 1
    e = field.unit_vector(dim, 2 * n)
    names = default_basis_names(2 * n) + ("e",)
    return from_classical("lie", {(i, n + i): e for i in range(n)}, dim, field, basis_names=names)


def heisenberg_embedding(n: int, field: FieldSpec = RATIONAL) -> Matrix:
    """
    嵌入 Φ: h_n → G_n 的矩阵

    Φ(e_i) = e_i (i ≤ n)，Φ(e_i) = e_{i+1} (n < i ≤ 2n)，Φ(e) = e。
    """
    _check_n(n)
    rows, cols = 2 * n + 2, 2 * n + 1
    columns = []
    for i in range(cols):
        target = i if i < n else i + 1
        columns.append(field.unit_vector(rows, target))
    return Matrix.from_columns(field, columns, rows)
