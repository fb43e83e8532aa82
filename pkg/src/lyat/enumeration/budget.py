"""
有限域枚举预算
"""

from dataclasses import dataclass
from typing import Optional

from ..exactlinalg import FieldSpec
from ..exceptions import BudgetExceededError, FieldMismatchError
from ..utils.config import get_config


@dataclass(frozen=True)
class EnumBudget:
    """max_candidate_count 是搜索节点数的硬上限，超出即中止"""

    max_field_size: int
    max_total_dim: int
    max_candidate_count: int

    @classmethod
    def from_config(cls, max_candidate_count: Optional[int] = None) -> "EnumBudget":
        cfg = get_config().enumeration
        return cls(
            max_field_size=cfg.max_field_size,
            max_total_dim=cfg.max_total_dim,
            max_candidate_count=max_candidate_count or cfg.max_candidate_count,
        )

    def check_field(self, field: FieldSpec) -> int:
        """返回素数 p"""
        if not field.is_prime:
            raise FieldMismatchError("枚举只在素域上进行")
        if field.p > self.max_field_size:
            raise BudgetExceededError(f"p = {field.p} 超出预算 {self.max_field_size}")
        return field.p

    def check_dim(self, dim: int) -> None:
        if dim > self.max_total_dim:
            raise BudgetExceededError(f"维数 {dim} 超出预算 {self.max_total_dim}")

    def check_count(self, count: int, what: str) -> None:
        if count > self.max_candidate_count:
            raise BudgetExceededError(f"{what} 的候选数 {count} 超出预算 {self.max_candidate_count}")


def resolve_budget(budget: Optional[EnumBudget]) -> EnumBudget:
    return budget if budget is not None else EnumBudget.from_config()
