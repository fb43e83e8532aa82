"""
异常定义
库函数只在输入非法或前置条件不满足时抛出异常，数学上的"否"以返回值表达
"""

from typing import Optional


class LyatError(Exception):
    """lyat 所有异常的基类"""

    exit_code: int = 2


class InputError(LyatError):
    """输入数据错误"""


class ScalarParseError(InputError, ValueError):
    """标量解析失败"""


class SchemaError(InputError):
    """JSON 结构不符合约定"""

    def __init__(self, message: str, location: Optional[str] = None):
        self.location = location
        self.message = message
        super().__init__(f"{location}: {message}" if location else message)


class SkewConflictError(InputError):
    """斜对称补全时出现相互矛盾的条目"""

    def __init__(self, first: str, second: str):
        self.first = first
        self.second = second
        super().__init__(f"斜对称冲突: {first} 与 {second} 不一致")


class DimensionMismatchError(InputError, ValueError):
    """维数或形状不匹配"""


class FieldMismatchError(InputError, ValueError):
    """标量域不一致"""


class PreconditionError(LyatError):
    """运算前置条件不满足"""


class NotAnIdealError(PreconditionError):
    """子空间不是(阿贝尔)理想"""


class NotAnAutomorphismError(PreconditionError):
    """矩阵不是自同构"""


class NotASectionError(PreconditionError):
    """线性映射不是投影的截面"""


class NotACocycleError(PreconditionError):
    """上链不是上闭链"""


class IncompatiblePairError(PreconditionError):
    """自同构对不相容"""


class RepresentationMismatchError(PreconditionError):
    """两个扩张的诱导表示不同"""


class NotNilpotentIndexTwoError(PreconditionError):
    """代数不是指数为 2 的幂零代数"""


class TrivialCenterError(PreconditionError):
    """代数的中心为零"""


class ConstructionError(PreconditionError):
    """经典构造的输入不满足要求"""


class BudgetExceededError(LyatError):
    """枚举或计算规模超出预算"""


class InvariantViolation(LyatError):
    """理论保证的后置条件被破坏"""

    exit_code = 3
