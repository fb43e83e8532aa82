"""
代数同态与自同构
"""

from ..exactlinalg import Matrix, invert
from ..exceptions import DimensionMismatchError
from .structure import LYAlgebra


def _check_shape(L: LYAlgebra, L2: LYAlgebra, m: Matrix) -> None:
    L.field.check_same(L2.field)
    L.field.check_same(m.field)
    if m.shape != (L2.dim, L.dim):
        raise DimensionMismatchError(
            f"矩阵形状 {m.shape} 与 K^{L.dim} → K^{L2.dim} 不符"
        )


def is_morphism(L: LYAlgebra, L2: LYAlgebra, m: Matrix) -> bool:
    """
    检验 m 是否为代数同态：在全部基元组上比较 m[e_i,e_j] 与 [m e_i, m e_j]，
    以及 m{e_i,e_j,e_k} 与 {m e_i, m e_j, m e_k}

    Args:
        L: 源代数
        L2: 目标代数
        m: K^dim(L) → K^dim(L2) 的矩阵

    Returns:
        bool: 是否为同态
    """
    _check_shape(L, L2, m)
    n = L.dim
    images = m.columns()
    # 只需斜对称的规范元组：两侧都满足 LY1/LY2 时 (j,i) 的等式由 (i,j) 推出
    for i in range(n):
        for j in range(i + 1, n):
            if m.apply(L.binary[i][j]) != L2.bracket(images[i], images[j]):
                return False
            for k in range(n):
                if m.apply(L.ternary[i][j][k]) != L2.triple(images[i], images[j], images[k]):
                    return False
    return True


def is_automorphism(L: LYAlgebra, m: Matrix) -> bool:
    """可逆且保持两种运算"""
    _check_shape(L, L, m)
    return invert(m) is not None and is_morphism(L, L, m)


def compose(first: Matrix, second: Matrix) -> Matrix:
    """先作用 first 再作用 second，即矩阵 second·first"""
    return second @ first
