"""
可诱导性模块：τ、相容对、Wells 映射与 H^1 同构
"""

from .aut_iso import chi, h1_aut_iso
from .pairs import AutomorphismClass, AutPair, LiftCertificate, check_pair, classify_automorphism, tau
from .wells import (
    REASON_INCOMPATIBLE,
    REASON_NONTRIVIAL_CLASS,
    InducibilityDecision,
    WellsClass,
    decide_inducible,
    is_compatible,
    lambda1,
    lambda2,
    lift_matrix,
    wells_class,
    wells_cocycle,
)

__all__ = [
    'chi', 'h1_aut_iso',
    'AutomorphismClass', 'AutPair', 'LiftCertificate', 'check_pair', 'classify_automorphism', 'tau',
    'REASON_INCOMPATIBLE', 'REASON_NONTRIVIAL_CLASS', 'InducibilityDecision', 'WellsClass',
    'decide_inducible', 'is_compatible', 'lambda1', 'lambda2', 'lift_matrix', 'wells_class',
    'wells_cocycle',
]
