"""
指数为 2 的幂零代数的中心扩张：可诱导性的直接判定
"""

from ..cohomology import cochain_space
from ..exceptions import NotNilpotentIndexTwoError
from ..extension import AbelianExtension
from ..inducibility import AutPair, check_pair


def check_direct_hypotheses(e: AbelianExtension) -> None:
    if not e.base.is_abelian() or not e.rep.is_trivial():
        raise NotNilpotentIndexTwoError("直接判定要求基代数阿贝尔且诱导表示平凡，请改用 decide_inducible")


def direct_check(e: AbelianExtension, pr: AutPair) -> bool:
    """
    φ∘α(a,b) = α(ψa, ψb) 且 φ∘β(a,b,c) = β(ψa, ψb, ψc) 对全部基元组成立

    此时 B^(2,3) = 0 且任何 (φ, ψ) 都相容，该等式组即可诱导的充要条件。

    Args:
        e: 基代数阿贝尔、表示平凡的扩张
        pr: 自同构对

    Returns:
        bool: 是否可诱导
    """
    check_direct_hypotheses(e)
    check_pair(e, pr)
    c = e.cocycle
    phi = pr.phi
    cols = pr.psi.columns()
    n, m = e.n, e.vdim

    for i, j in cochain_space(2, n, m).tuples:
        if phi.apply(c.f(i, j)) != c.f_at(cols[i], cols[j]):
            return False
    for i, j, k in cochain_space(3, n, m).tuples:
        if phi.apply(c.g(i, j, k)) != c.g_at(cols[i], cols[j], cols[k]):
            return False
    return True
