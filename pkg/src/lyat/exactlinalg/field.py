"""
标量域
有理数域用 Fraction 表示，素域 F_p 的元素用 [0, p) 中的 int 表示。
所有归约、求逆、解析与格式化都由 FieldSpec 负责。
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Literal, Optional, Tuple, Union

import numpy as np
from sympy import isprime

from ..exceptions import FieldMismatchError, ScalarParseError

Scalar = Union[Fraction, int]
Vector = Tuple[Scalar, ...]

_SCALAR_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


@dataclass(frozen=True)
class FieldSpec:
    """标量域描述：有理数域或素域"""

    kind: Literal["rational", "prime"] = "rational"
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == "rational":
            if self.p is not None:
                raise FieldMismatchError("有理数域不接受模数 p")
        elif self.kind == "prime":
            if self.p is None or not (1 < self.p < 2 ** 16) or not isprime(self.p):
                raise FieldMismatchError(f"模数必须是小于 2^16 的素数: {self.p}")
        else:
            raise FieldMismatchError(f"未知的域类型: {self.kind}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational", None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.is_prime else "QQ"

    def __str__(self) -> str:
        return self.name

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime else Fraction(1)

    def check_same(self, other: "FieldSpec") -> None:
        """两个对象必须定义在同一个域上"""
        if self != other:
            raise FieldMismatchError(f"标量域不一致: {self.name} 与 {other.name}")

    # ------------------------------------------------------------------
    # 算术
    # ------------------------------------------------------------------

    def normalize(self, value: Any) -> Scalar:
        """
        把 int / Fraction / 字符串归约为本域的规范标量

        Args:
            value: 原始值

        Returns:
            Scalar: 规范标量
        """
        if isinstance(value, str):
            return self.parse(value)
        if self.is_prime:
            if isinstance(value, Fraction):
                return (value.numerator * self.inv(value.denominator)) % self.p
            return int(value) % self.p
        if isinstance(value, Fraction):
            return value
        return Fraction(value)

    def vector(self, values: Iterable[Any]) -> Vector:
        return tuple(self.normalize(v) for v in values)

    def zero_vector(self, n: int) -> Vector:
        return (self.zero,) * n

    def unit_vector(self, n: int, i: int) -> Vector:
        return tuple(self.one if k == i else self.zero for k in range(n))

    def is_zero(self, value: Scalar) -> bool:
        if self.is_prime:
            return value % self.p == 0
        return value == 0

    def is_zero_vector(self, values: Iterable[Scalar]) -> bool:
        return all(self.is_zero(v) for v in values)

    def inv(self, value: Scalar) -> Scalar:
        """乘法逆元；素域上用扩展欧几里得算法 (pow(a, -1, p))"""
        if self.is_zero(value):
            raise ZeroDivisionError(f"{self.name} 中零元不可逆")
        if self.is_prime:
            return pow(int(value) % self.p, -1, self.p)
        return 1 / Fraction(value)

    def fermat_inv(self, value: int) -> int:
        """费马小定理求逆 a^(p-2)，用于与扩展欧几里得结果互相校验"""
        if not self.is_prime:
            raise FieldMismatchError("费马求逆只适用于素域")
        if self.is_zero(value):
            raise ZeroDivisionError(f"{self.name} 中零元不可逆")
        return pow(int(value) % self.p, self.p - 2, self.p)

    # ------------------------------------------------------------------
    # 序列化
    # ------------------------------------------------------------------

    def parse(self, text: str) -> Scalar:
        """
        解析标量字符串，如 "3"、"-7/2"、"4"

        Args:
            text: 标量字符串

        Returns:
            Scalar: 规范标量
        """
        match = _SCALAR_PATTERN.match(str(text))
        if not match:
            raise ScalarParseError(f"无法解析的标量: {text!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise ScalarParseError(f"分母为零: {text!r}")
        if self.is_prime:
            if denominator % self.p == 0:
                raise ScalarParseError(f"分母在 {self.name} 中为零: {text!r}")
            return (numerator * pow(denominator % self.p, -1, self.p)) % self.p
        return Fraction(numerator, denominator)

    def format(self, value: Scalar) -> str:
        if self.is_prime:
            return str(int(value) % self.p)
        return str(Fraction(value))

    # ------------------------------------------------------------------
    # 枚举与抽样
    # ------------------------------------------------------------------

    def elements(self) -> Iterator[int]:
        """按字典序列出素域的全部元素"""
        if not self.is_prime:
            raise FieldMismatchError("只能枚举素域的元素")
        return iter(range(self.p))

    def random_scalar(self, rng: np.random.Generator, bound: int = 3) -> Scalar:
        """
        随机标量

        Args:
            rng: numpy 随机数生成器
            bound: 有理数域上整数元素的绝对值上界

        Returns:
            Scalar: 随机标量
        """
        if self.is_prime:
            return int(rng.integers(0, self.p))
        return Fraction(int(rng.integers(-bound, bound + 1)))

    def random_nonzero(self, rng: np.random.Generator, bound: int = 3) -> Scalar:
        while True:
            value = self.random_scalar(rng, bound)
            if not self.is_zero(value):
                return value


RATIONAL = FieldSpec.rational()
