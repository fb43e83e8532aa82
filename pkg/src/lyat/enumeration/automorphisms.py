"""
素域上的自同构群枚举：逐列扩展并在约束就绪时立即剪枝
"""

from itertools import product
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra import LYAlgebra
from ..algebra.structure import Sparse
from ..exactlinalg import FieldSpec, Matrix, SubspaceBasis, Vector, invert
from ..exceptions import BudgetExceededError, InvariantViolation
from ..utils.config import get_config
from ..utils.logger import get_logger
from .budget import EnumBudget, resolve_budget

logger = get_logger(__name__)

# (a, b, c 或 None, 乘积的稀疏支撑)
Constraint = Tuple[int, int, Optional[int], Sparse]


def constraint_plan(L: LYAlgebra) -> List[List[Constraint]]:
    """
    按"所需列都已确定"的最早时刻分组的约束

    γ[e_a, e_b] = [γe_a, γe_b] 需要列 a、b 以及 [e_a, e_b] 支撑上的列。
    """
    n = L.dim
    plan: List[List[Constraint]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            sup = L.bsparse[a][b]
            plan[max([a, b] + [t for t, _ in sup])].append((a, b, None, sup))
            for c in range(n):
                sup = L.tsparse[a][b][c]
                plan[max([a, b, c] + [t for t, _ in sup])].append((a, b, c, sup))
    return plan


def _holds(L: LYAlgebra, cols: Sequence[Vector], con: Constraint) -> bool:
    a, b, c, sup = con
    lhs = [0] * L.dim
    for t, coeff in sup:
        for r, x in enumerate(cols[t]):
            lhs[r] += coeff * x
    if c is None:
        rhs = L.bracket(cols[a], cols[b])
    else:
        rhs = L.triple(cols[a], cols[b], cols[c])
    return L.field.vector(lhs) == rhs


def nonzero_vectors(field: FieldSpec, n: int) -> List[Vector]:
    """字典序的非零向量"""
    return [v for v in product(range(field.p), repeat=n) if any(v)]


def split_cap(total: int, parts: int) -> List[int]:
    """把节点上限分给各分支，份额之和恰为 total"""
    base, extra = divmod(total, parts)
    return [base + 1 if i < extra else base for i in range(parts)]


def search_branch(
    L: LYAlgebra,
    first: Vector,
    plan: List[List[Constraint]],
    vectors: List[Vector],
    cap: int,
) -> Tuple[List[Matrix], int]:
    """
    固定第一列后的深度优先搜索

    Returns:
        (找到的自同构, 访问的节点数)
    """
    n = L.dim
    found: List[Matrix] = []
    visited = 0

    def ok(cols: List[Vector]) -> bool:
        return all(_holds(L, cols, con) for con in plan[len(cols) - 1])

    def extend(cols: List[Vector]) -> None:
        nonlocal visited
        if len(cols) == n:
            found.append(Matrix.from_columns(L.field, cols, n))
            return
        for v in vectors:
            visited += 1
            if visited > cap:
                raise BudgetExceededError(f"自同构搜索节点数超过 {cap}")
            nxt = cols + [v]
            if SubspaceBasis.span(L.field, n, nxt).dim < len(nxt):
                continue
            if ok(nxt):
                extend(nxt)

    visited += 1
    if visited > cap:
        raise BudgetExceededError(f"自同构搜索节点数超过 {cap}")
    if ok([first]):
        extend([first])
    return found, visited


def enumerate_automorphisms(
    L: LYAlgebra,
    budget: Optional[EnumBudget] = None,
    workers: Optional[int] = None,
) -> List[Matrix]:
    """
    枚举素域上代数 L 的全部自同构

    Args:
        L: 素域上的代数
        budget: 枚举预算，缺省取配置
        workers: 进程数，缺省取 compute.max_workers；按第一列划分搜索空间

    Returns:
        List[Matrix]: 按规范顺序排列的自同构
    """
    b = resolve_budget(budget)
    p = b.check_field(L.field)
    b.check_dim(L.dim)
    n = L.dim
    if n == 0:
        return [Matrix.identity(L.field, 0)]

    plan = constraint_plan(L)
    vectors = nonzero_vectors(L.field, n)
    workers = workers or get_config().compute.max_workers
    logger.debug(f"枚举 Aut(L): p = {p}, dim = {n}, 朴素规模 p^(n²) = {p ** (n * n)}")

    found: List[Matrix] = []
    visited = 0
    if workers > 1:
        with Pool(workers) as pool:
            jobs = [
                pool.apply_async(search_branch, (L, v, plan, vectors, cap))
                for v, cap in zip(vectors, split_cap(b.max_candidate_count, len(vectors)))
            ]
            pool.close()
            pool.join()
        for job in jobs:
            part, count = job.get()
            found.extend(part)
            visited += count
        b.check_count(visited, "自同构搜索")
    else:
        for v in vectors:
            part, count = search_branch(L, v, plan, vectors, b.max_candidate_count - visited)
            found.extend(part)
            visited += count

    found.sort(key=Matrix.sort_key)
    if not is_group(found, L.field):
        raise InvariantViolation("枚举得到的自同构集合不构成群")
    logger.info(f"|Aut(L)| = {len(found)}，访问节点 {visited}")
    return found


def is_group(elements: Sequence[Matrix], field: FieldSpec, seed: Optional[int] = None) -> bool:
    """
    检验有限矩阵集合含单位元且对乘法、求逆封闭

    元素个数不超过 compute.closure_check_limit 时逐对检验，否则随机抽取同样多的元素对。
    """
    if not elements:
        return False
    keys = {m.entries for m in elements}
    n = elements[0].rows
    if Matrix.identity(field, n).entries not in keys:
        return False
    for m in elements:
        inv = invert(m)
        if inv is None or inv.entries not in keys:
            return False

    limit = get_config().compute.closure_check_limit
    if len(elements) <= limit:
        pairs = ((x, y) for x in elements for y in elements)
    else:
        logger.warning(f"群阶 {len(elements)} 超过 {limit}，封闭性改为抽样检验")
        rng = np.random.default_rng(seed if seed is not None else get_config().sampling.default_seed)
        idx = rng.integers(0, len(elements), size=(limit, 2))
        pairs = ((elements[i], elements[j]) for i, j in idx)
    return all((x @ y).entries in keys for x, y in pairs)
