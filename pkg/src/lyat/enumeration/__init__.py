"""
有限域穷举模块：为可诱导性与正合列提供独立的判定
"""

from .automorphisms import constraint_plan, enumerate_automorphisms, is_group, nonzero_vectors, split_cap
from .budget import EnumBudget, resolve_budget
from .lifts import (
    CompatiblePairs,
    InducibilityComparison,
    LiftSubgroups,
    SplitSections,
    brute_force_inducible,
    compare_inducibility,
    enumerate_compatible_pairs,
    enumerate_lift_subgroups,
    general_linear,
    pair_key,
    split_sections,
)
from .sequences import ProbeReport, SequenceReport, verify_exact_sequences, wells_homomorphism_probe

__all__ = [
    'constraint_plan', 'enumerate_automorphisms', 'is_group', 'nonzero_vectors', 'split_cap',
    'EnumBudget', 'resolve_budget',
    'CompatiblePairs', 'InducibilityComparison', 'LiftSubgroups', 'SplitSections',
    'brute_force_inducible', 'compare_inducibility',
    'enumerate_compatible_pairs', 'enumerate_lift_subgroups', 'general_linear', 'pair_key',
    'split_sections',
    'ProbeReport', 'SequenceReport', 'verify_exact_sequences', 'wells_homomorphism_probe',
]
