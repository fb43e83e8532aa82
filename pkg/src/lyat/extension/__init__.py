"""
阿贝尔扩张模块
"""

from .equivalence import (
    are_equivalent,
    central_extension,
    same_representation,
    same_structure,
    section_shift_witness,
)
from .structure import (
    AbelianExtension,
    build_extension,
    build_extension_raw,
    canonical_section,
    from_total,
    induced_cocycle,
    induced_representation,
)

__all__ = [
    'are_equivalent', 'central_extension', 'same_representation', 'same_structure',
    'section_shift_witness',
    'AbelianExtension', 'build_extension', 'build_extension_raw', 'canonical_section',
    'from_total', 'induced_cocycle', 'induced_representation',
]
