"""
表示模块
"""

from .constructions import adjoint, is_rep_morphism, semidirect, trivial_rep, twist
from .structure import (
    REP_AXIOMS,
    Representation,
    check_representation,
    evaluate_rep_axiom,
    representation_axioms_pass,
)

__all__ = [
    'adjoint', 'is_rep_morphism', 'semidirect', 'trivial_rep', 'twist',
    'REP_AXIOMS', 'Representation', 'check_representation', 'evaluate_rep_axiom',
    'representation_axioms_pass',
]
