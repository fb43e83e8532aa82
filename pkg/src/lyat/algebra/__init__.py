"""
Lie-Yamaguti 代数模块
"""

from .constructions import (
    from_classical,
    generalized_heisenberg,
    heisenberg,
    heisenberg_embedding,
    heisenberg_lie,
)
from .ideals import IdealReport, center, ideal_tests, lower_central_series, quotient, quotient_projection
from .morphisms import compose, is_automorphism, is_morphism
from .structure import (
    AXIOMS,
    AxiomReport,
    AxiomStatus,
    LYAlgebra,
    bracket_eval,
    check_axioms,
    default_basis_names,
    evaluate_axiom,
)

__all__ = [
    'from_classical', 'generalized_heisenberg', 'heisenberg', 'heisenberg_embedding', 'heisenberg_lie',
    'IdealReport', 'center', 'ideal_tests', 'lower_central_series', 'quotient', 'quotient_projection',
    'compose', 'is_automorphism', 'is_morphism',
    'AXIOMS', 'AxiomReport', 'AxiomStatus', 'LYAlgebra', 'bracket_eval', 'check_axioms',
    'default_basis_names', 'evaluate_axiom',
]
