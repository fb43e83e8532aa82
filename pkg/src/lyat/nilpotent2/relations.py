"""
符号关系生成：对中心扩张，以符号矩阵 [ψ] = (x[r][c]) 与 [φ] = (y[r][c]) 展开
α(ψē_i, ψē_j) = φ(α(ē_i, ē_j)) 与 β(ψē_i, ψē_j, ψē_k) = φ(β(ē_i, ē_j, ē_k))
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Integer, Rational
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..algebra import LYAlgebra, lower_central_series
from ..cohomology import cochain_space
from ..exactlinalg import FieldSpec, Scalar
from ..exceptions import DimensionMismatchError, NotNilpotentIndexTwoError
from ..extension import central_extension
from ..inducibility import AutPair
from ..utils.logger import get_logger

logger = get_logger(__name__)

BINARY = "binary"
TERNARY = "ternary"


def _symbol(prefix: str, r: int, c: int, wide: bool) -> str:
    return f"{prefix}{r + 1}_{c + 1}" if wide else f"{prefix}{r + 1}{c + 1}"


def _json_name(prefix: str, r: int, c: int) -> str:
    return f"{prefix}[{r + 1}][{c + 1}]"


def _domain(field: FieldSpec):
    return GF(field.p) if field.is_prime else QQ


def _to_domain(domain, field: FieldSpec, x: Scalar):
    if field.is_prime:
        return domain.from_sympy(Integer(int(x)))
    q = Fraction(x)
    return domain.from_sympy(Rational(q.numerator, q.denominator))


def _from_domain(domain, field: FieldSpec, c) -> Scalar:
    value = domain.to_sympy(c)
    return field.normalize(Fraction(int(value.p), int(value.q)))


@dataclass(frozen=True)
class Relation:
    """一条多项式关系，来源为 (i,j) 或 (i,j,k) 及 φ 的第 component 个分量"""

    kind: str
    source: Tuple[int, ...]
    component: int
    poly: PolyElement


@dataclass
class RelationSet:
    """
    关系集合

    x_names[r][c] 对应 [ψ] 的 (r, c) 元，y_names 对应 [φ]（m = 1 时只有 k）。
    """

    field: FieldSpec
    ring: PolyRing
    n: int
    m: int
    x_names: List[List[str]]
    y_names: List[List[str]]
    relations: List[Relation]

    def __len__(self) -> int:
        return len(self.relations)

    def polys(self) -> List[PolyElement]:
        return [rel.poly for rel in self.relations]

    def find(self, kind: str, source: Sequence[int], component: int = 0) -> PolyElement:
        """按来源查找关系，没有发出（恒为零）时返回零多项式"""
        key = tuple(source)
        for rel in self.relations:
            if rel.kind == kind and rel.source == key and rel.component == component:
                return rel.poly
        return self.ring.zero

    def gen(self, name: str) -> PolyElement:
        """按符号名取环的生成元"""
        return self.ring.gens[self._names().index(name)]

    def _names(self) -> List[str]:
        return [str(s) for s in self.ring.symbols]

    def json_names(self) -> List[str]:
        names = [_json_name("x", r, c) for r in range(self.n) for c in range(self.n)]
        if self.m == 1:
            names.append("k")
        else:
            names.extend(_json_name("y", r, c) for r in range(self.m) for c in range(self.m))
        return names

    def to_json(self) -> Dict[str, Any]:
        """{"vars": [...], "relations": [{"kind", "source", "component", "terms"}]}"""
        names = self.json_names()
        domain = self.ring.domain
        out = []
        for rel in self.relations:
            terms = []
            for monom, coeff in rel.poly.terms():
                exps = {names[v]: e for v, e in enumerate(monom) if e}
                terms.append({"exps": exps, "c": self.field.format(_from_domain(domain, self.field, coeff))})
            out.append({
                "kind": rel.kind,
                "source": [i + 1 for i in rel.source],
                "component": rel.component + 1,
                "terms": terms,
            })
        return {"vars": names, "relations": out}

    def to_text(self) -> List[str]:
        """每行一个 '<多项式> = 0'，可直接粘贴到计算机代数系统"""
        return [f"{rel.poly} = 0" for rel in self.relations]


def _normalize(poly: PolyElement, field: FieldSpec) -> PolyElement:
    """有理系数：清分母、去内容并使首项系数为正"""
    if field.is_prime or not poly:
        return poly
    _, cleared = poly.clear_denoms()
    domain = poly.ring.domain
    ints = [int(domain.to_sympy(c)) for c in cleared.coeffs()]
    content = reduce(gcd, (abs(x) for x in ints))
    if domain.to_sympy(cleared.LC) < 0:
        content = -content
    return cleared.mul_ground(domain.from_sympy(Rational(1, content)))


def _apply_symbolic(matrix: List[List[PolyElement]], vec: Sequence) -> List[PolyElement]:
    out = []
    for row in matrix:
        acc = row[0].ring.zero
        for entry, x in zip(row, vec):
            acc += entry * x
        out.append(acc)
    return out


def generate_relations(L: LYAlgebra) -> RelationSet:
    """
    对中心扩张 0 → Z(L) → L → L̄ → 0 生成可诱导性的多项式关系

    Args:
        L: 指数为 2 的幂零代数

    Returns:
        RelationSet: 每个 (i<j) 与 (i<j, k) 给出 m 条关系，恒为零者略去
    """
    _, index = lower_central_series(L)
    if index != 2:
        raise NotNilpotentIndexTwoError(f"代数的幂零指数为 {index}，不是 2")
    e = central_extension(L)
    field = L.field
    n, m = e.n, e.vdim
    wide = max(n, m) > 9

    x_names = [[_symbol("x", r, c, wide) for c in range(n)] for r in range(n)]
    if m == 1:
        y_names = [["k"]]
    else:
        y_names = [[_symbol("y", r, c, wide) for c in range(m)] for r in range(m)]
    symbols = [s for row in x_names for s in row] + [s for row in y_names for s in row]
    domain = _domain(field)
    R, *gens = ring(symbols, domain, grlex)
    X = [gens[r * n:(r + 1) * n] for r in range(n)]
    Y = [gens[n * n + r * m:n * n + (r + 1) * m] for r in range(m)]

    c = e.cocycle

    def conv(x: Scalar):
        return _to_domain(domain, field, x)

    # α 与 β 的稀疏非零条目 (下标, 分量, 值)
    alpha = [
        ((a, b), t, conv(v))
        for a in range(n) for b in range(n)
        for t, v in enumerate(c.f(a, b)) if not field.is_zero(v)
    ]
    beta = [
        ((a, b, d), t, conv(v))
        for a in range(n) for b in range(n) for d in range(n)
        for t, v in enumerate(c.g(a, b, d)) if not field.is_zero(v)
    ]

    relations: List[Relation] = []

    def emit(kind: str, source: Tuple[int, ...], lhs: List[PolyElement], target: Sequence[Scalar]) -> None:
        rhs = _apply_symbolic(Y, [conv(x) for x in target])
        for t in range(m):
            poly = lhs[t] - rhs[t]
            if poly:
                relations.append(Relation(kind, source, t, _normalize(poly, field)))

    for i, j in cochain_space(2, n, m).tuples:
        lhs = [R.zero] * m
        for (a, b), t, v in alpha:
            lhs[t] += X[a][i] * X[b][j] * v
        emit(BINARY, (i, j), lhs, c.f(i, j))

    for i, j, k in cochain_space(3, n, m).tuples:
        lhs = [R.zero] * m
        for (a, b, d), t, v in beta:
            lhs[t] += X[a][i] * X[b][j] * X[d][k] * v
        emit(TERNARY, (i, j, k), lhs, c.g(i, j, k))

    logger.info(f"生成关系 {len(relations)} 条 (dim L̄ = {n}, dim Z = {m})")
    return RelationSet(field, R, n, m, x_names, y_names, relations)


def evaluate_relations(rs: RelationSet, pr: AutPair) -> bool:
    """
    把数值 (φ, ψ) 代入全部关系

    Args:
        rs: 关系集合
        pr: 自同构对，ψ 为 n×n，φ 为 m×m

    Returns:
        bool: 全部关系是否为零
    """
    if pr.psi.shape != (rs.n, rs.n) or pr.phi.shape != (rs.m, rs.m):
        raise DimensionMismatchError(
            f"(φ, ψ) 的形状应为 ({rs.m}x{rs.m}, {rs.n}x{rs.n})，实际为 ({pr.phi.shape}, {pr.psi.shape})"
        )
    domain = rs.ring.domain
    values = [pr.psi[r, c] for r in range(rs.n) for c in range(rs.n)]
    values += [pr.phi[r, c] for r in range(rs.m) for c in range(rs.m)]
    point = [_to_domain(domain, rs.field, x) for x in values]
    return all(not rel.poly(*point) for rel in rs.relations)
