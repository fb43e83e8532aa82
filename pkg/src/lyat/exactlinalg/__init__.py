"""
精确线性代数模块
"""

from .field import RATIONAL, FieldSpec, Scalar, Vector
from .matrix import AffineSolution, Matrix, invert, kernel_basis, rank, reduce_rows, rref, solve_affine
from .subspace import SubspaceBasis

__all__ = [
    'RATIONAL', 'FieldSpec', 'Scalar', 'Vector',
    'AffineSolution', 'Matrix', 'invert', 'kernel_basis', 'rank', 'reduce_rows', 'rref', 'solve_affine',
    'SubspaceBasis',
]
