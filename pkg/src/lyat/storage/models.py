"""
数据文件模型定义
定义所有 JSON 数据文件的结构
"""

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

# 行主序的标量字符串矩阵
MatrixRows = List[List[str]]


class _Strict(BaseModel):
    """未知字段一律视为错误"""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class FieldModel(_Strict):
    """标量域：{"kind": "rational"} 或 {"kind": "prime", "p": 3}"""

    kind: Literal["rational", "prime"]
    p: Optional[int] = None

    @model_validator(mode="after")
    def _check_modulus(self) -> "FieldModel":
        if self.kind == "prime" and self.p is None:
            raise ValueError("素域必须给出 p")
        if self.kind == "rational" and self.p is not None:
            raise ValueError("有理数域不接受 p")
        return self


class Term(_Strict):
    """稀疏坐标中的一项：第 k 个基向量的系数 c"""

    k: int = Field(ge=0)
    c: str


class BinaryEntry(_Strict):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    value: List[Term] = Field(default_factory=list)


class TernaryEntry(_Strict):
    i: int = Field(ge=0)
    j: int = Field(ge=0)
    k: int = Field(ge=0)
    value: List[Term] = Field(default_factory=list)


class AlgebraModel(_Strict):
    """
    结构常数表

    binary 只存 i<j 的条目，ternary 只存前两个下标 i<j 的条目，
    读入时按斜对称补全。
    """

    field: FieldModel
    dim: int = Field(ge=0)
    basis: Optional[List[str]] = None
    binary: List[BinaryEntry] = Field(default_factory=list)
    ternary: List[TernaryEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_basis(self) -> "AlgebraModel":
        if self.basis is not None and len(self.basis) != self.dim:
            raise ValueError(f"basis 应有 {self.dim} 个名称")
        return self


class RepresentationModel(_Strict):
    """algebra 可以内联，也可以是相对于本文件的路径"""

    algebra: Union[AlgebraModel, str]
    vdim: int = Field(ge=0)
    rho: List[MatrixRows]
    dmap: List[List[MatrixRows]] = Field(alias="D")
    theta: List[List[MatrixRows]]


class CochainModel(_Strict):
    """(2,3) 上链 (f, g)，格式同结构常数表"""

    field: FieldModel
    n: int = Field(ge=0)
    m: int = Field(ge=0)
    f: List[BinaryEntry] = Field(default_factory=list)
    g: List[TernaryEntry] = Field(default_factory=list)


class ExtensionModel(_Strict):
    """扩张：基代数、表示、上闭链、总代数与三个结构矩阵"""

    base: AlgebraModel
    rep: RepresentationModel
    cocycle: CochainModel
    total: AlgebraModel
    inclusion: MatrixRows
    projection: MatrixRows
    section: MatrixRows


class PairModel(_Strict):
    """自同构对 (φ, ψ)；field 缺省时沿用扩张的域"""

    field: Optional[FieldModel] = None
    phi: MatrixRows
    psi: MatrixRows


class CertificateModel(_Strict):
    """提升证书：γ 与 λ"""

    field: Optional[FieldModel] = None
    gamma: MatrixRows
    lam: MatrixRows = Field(alias="lambda")


class Cochain1Model(_Strict):
    """C^1 = Hom(L, V) 中的元素，m×n 矩阵"""

    field: Optional[FieldModel] = None
    n: int = Field(ge=0)
    m: int = Field(ge=0)
    values: MatrixRows


class SubspaceModel(_Strict):
    """子空间的一组张成向量（坐标取总代数的基）"""

    field: Optional[FieldModel] = None
    vectors: List[List[str]] = Field(default_factory=list)
