"""
分块条件与直接判定的随机对照

样本分四类：
  lower     ψ = [[I, 0], [diag(c), κI]]，可诱导，C 块非零
  upper     ψ = [[I, diag(b)], [0, I]]，κ = 1，B 块非零时不可诱导
  perturbed 在 lower 样本上随机改动一个元素
  random    随机可逆矩阵
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from ..algebra import heisenberg, heisenberg_lie
from ..enumeration import EnumBudget, brute_force_inducible
from ..exactlinalg import RATIONAL, FieldSpec, Matrix, invert
from ..exceptions import BudgetExceededError, InvariantViolation
from ..extension import AbelianExtension, central_extension
from ..inducibility import AutPair, decide_inducible
from ..utils.config import get_config
from ..utils.logger import get_logger
from .direct import direct_check
from .heisenberg import heisenberg_conditions

logger = get_logger(__name__)

SAMPLE_KINDS = ("lower", "upper", "perturbed", "random")
MODE_COLUMNS = {"corrected": "direct", "as_stated": "direct", "lie": "lie_direct"}


def _diag_block(n: int, values: List) -> List[List]:
    return [[values[r] if r == c else 0 for c in range(n)] for r in range(n)]


def _identity_rows(n: int, scale=1) -> List[List]:
    return [[scale if r == c else 0 for c in range(n)] for r in range(n)]


def _assemble(f: FieldSpec, n: int, a, b, c, d) -> Matrix:
    rows = [a[r] + b[r] for r in range(n)] + [c[r] + d[r] for r in range(n)]
    return Matrix.from_rows(f, rows, 2 * n)


def sample_pair(kind: str, n: int, f: FieldSpec, rng: np.random.Generator, bound: int) -> AutPair:
    """按类别抽取一个 h_n 的自同构对 (κ, ψ)"""
    zero = [[0] * n for _ in range(n)]
    kappa = f.random_nonzero(rng, bound)
    if kind in ("lower", "perturbed"):
        cs = [f.random_scalar(rng, bound) for _ in range(n)]
        psi = _assemble(f, n, _identity_rows(n), zero, _diag_block(n, cs), _identity_rows(n, kappa))
        if kind == "perturbed":
            rows = [list(r) for r in psi.entries]
            while True:
                r, c = (int(x) for x in rng.integers(0, 2 * n, size=2))
                rows[r][c] = f.normalize(rows[r][c] + f.random_nonzero(rng, bound))
                candidate = Matrix.from_rows(f, rows, 2 * n)
                if invert(candidate) is not None:
                    psi = candidate
                    break
                rows = [list(r) for r in psi.entries]
    elif kind == "upper":
        kappa = f.one
        bs = [f.random_scalar(rng, bound) for _ in range(n)]
        psi = _assemble(f, n, _identity_rows(n), _diag_block(n, bs), zero, _identity_rows(n))
    else:
        while True:
            psi = Matrix.from_rows(
                f, [[f.random_scalar(rng, bound) for _ in range(2 * n)] for _ in range(2 * n)], 2 * n
            )
            if invert(psi) is not None:
                break
    return AutPair(Matrix.from_rows(f, [[kappa]], 1), psi)


@dataclass
class CrosscheckReport:
    """records 为逐样本表，agreement 为按域、模式统计的一致率（百分比）"""

    n: int
    samples: int
    seed: int
    records: pd.DataFrame
    agreement: pd.DataFrame
    disagreements: List[Dict[str, Any]]

    def agreement_of(self, field_name: str, mode: str) -> float:
        return float(self.agreement.loc[field_name, mode])

    def to_dict(self) -> Dict[str, Any]:
        table = self.agreement.round(4).reset_index().to_dict(orient="records")
        return {
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "agreement": table,
            "disagreements": self.disagreements,
        }


def _pair_strings(pr: AutPair) -> Dict[str, Any]:
    return {"phi": pr.phi.to_strings(), "psi": pr.psi.to_strings()}


def _reverify(ext: AbelianExtension, pr: AutPair, oracle: bool, budget: EnumBudget) -> str:
    """用显式 γ 或有限域提升搜索复核直接判定的结论"""
    if oracle:
        if decide_inducible(ext, pr).certificate is None:
            raise InvariantViolation("直接判定可诱导但构造不出 γ")
        return "certificate"
    if ext.field.is_prime:
        try:
            found = brute_force_inducible(ext, pr, budget)
        except BudgetExceededError:
            logger.debug("提升搜索超出预算，改用 Wells 类复核")
        else:
            if found is not None:
                raise InvariantViolation("直接判定不可诱导但提升搜索找到了 γ")
            return "lift_search"
    if decide_inducible(ext, pr).inducible:
        raise InvariantViolation("直接判定不可诱导但 Wells 类为零")
    return "wells_class"


def crosscheck(
    n: int,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    prime: Optional[int] = None,
) -> CrosscheckReport:
    """
    在 ℚ 与 𝔽_p 上抽样，比较分块条件（三种模式）与直接判定

    Args:
        n: h_n 的参数
        samples: 每个域上的样本数，缺省取 sampling.crosscheck_samples
        seed: 随机种子，缺省取 sampling.default_seed
        prime: 素域的 p，缺省取 sampling.crosscheck_prime

    Returns:
        CrosscheckReport: 一致率与全部不一致的见证（附复核方式）
    """
    cfg = get_config().sampling
    seed = cfg.default_seed if seed is None else seed
    prime = cfg.crosscheck_prime if prime is None else prime
    samples = cfg.crosscheck_samples if samples is None else samples
    rng = np.random.default_rng(seed)
    budget = EnumBudget.from_config()

    records: List[Dict[str, Any]] = []
    disagreements: List[Dict[str, Any]] = []
    for f in (RATIONAL, FieldSpec.prime(prime)):
        ext = central_extension(heisenberg(n, f))
        lie_ext = central_extension(heisenberg_lie(n, f))
        oracles = {"direct": ext, "lie_direct": lie_ext}
        for index in range(samples):
            kind = SAMPLE_KINDS[index % len(SAMPLE_KINDS)]
            pr = sample_pair(kind, n, f, rng, cfg.entry_bound)
            row: Dict[str, Any] = {"field": f.name, "index": index, "kind": kind}
            row["direct"] = direct_check(ext, pr)
            row["lie_direct"] = direct_check(lie_ext, pr)
            for mode, oracle_column in MODE_COLUMNS.items():
                report = heisenberg_conditions(n, pr, mode)
                row[mode] = report.passed
                if report.passed == row[oracle_column]:
                    continue
                failing = [c.name for c in report.conditions if not c.passed]
                witness = {
                    "field": f.name,
                    "index": index,
                    "kind": kind,
                    "mode": mode,
                    "oracle": row[oracle_column],
                    "failing_conditions": failing,
                    "verified_by": _reverify(oracles[oracle_column], pr, row[oracle_column], budget),
                    **_pair_strings(pr),
                }
                disagreements.append(witness)
                if mode == "as_stated":
                    logger.warning(f"as_stated 模式与直接判定不一致: {f.name} 样本 {index} ({kind})")
                else:
                    logger.error(f"{mode} 模式与直接判定不一致: {f.name} 样本 {index} ({kind})")
            records.append(row)

    df = pd.DataFrame.from_records(records)
    for mode, oracle_column in MODE_COLUMNS.items():
        df[f"{mode}_agrees"] = df[mode] == df[oracle_column]
    agreement = df.groupby("field")[[f"{mode}_agrees" for mode in MODE_COLUMNS]].mean() * 100
    agreement.columns = list(MODE_COLUMNS)
    logger.info(f"对照完成: n = {n}, 每个域 {samples} 个样本, 不一致 {len(disagreements)} 条")
    return CrosscheckReport(n, samples, seed, df, agreement, disagreements)
