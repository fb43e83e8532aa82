"""
Yamaguti 上同调模块
"""

from .coboundary import (
    LinearOperator,
    cocycle_operator,
    delta_operator,
    delta_pair,
    delta_star,
    delta_star_operator,
    delta_zero,
    delta_zero_operator,
)
from .cochains import (
    Cochain1,
    CochainPair,
    CochainSpace,
    FullCochain,
    cochain1_coords,
    cochain1_from_coords,
    cochain_space,
)
from .groups import H23Result, H45Result, h1_basis, h1_cochains, h23, h45, is_cocycle23, solve_coboundary

__all__ = [
    'LinearOperator', 'cocycle_operator', 'delta_operator', 'delta_pair', 'delta_star',
    'delta_star_operator', 'delta_zero', 'delta_zero_operator',
    'Cochain1', 'CochainPair', 'CochainSpace', 'FullCochain', 'cochain1_coords',
    'cochain1_from_coords', 'cochain_space',
    'H23Result', 'H45Result', 'h1_basis', 'h1_cochains', 'h23', 'h45', 'is_cocycle23',
    'solve_coboundary',
]
