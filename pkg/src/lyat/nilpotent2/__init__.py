"""
指数为 2 的幂零 Lie-Yamaguti 代数：直接判定、多项式关系与 h_n 的分块条件
"""

from .crosscheck import SAMPLE_KINDS, CrosscheckReport, crosscheck, sample_pair
from .direct import check_direct_hypotheses, direct_check
from .heisenberg import MODES, ConditionResult, HeisenbergReport, heisenberg_conditions, m_sigma, split_blocks
from .relations import BINARY, TERNARY, Relation, RelationSet, evaluate_relations, generate_relations

__all__ = [
    'SAMPLE_KINDS', 'CrosscheckReport', 'crosscheck', 'sample_pair',
    'check_direct_hypotheses', 'direct_check',
    'MODES', 'ConditionResult', 'HeisenbergReport', 'heisenberg_conditions', 'm_sigma', 'split_blocks',
    'BINARY', 'TERNARY', 'Relation', 'RelationSet', 'evaluate_relations', 'generate_relations',
]
