"""
数据文件编解码
在 pydantic 模型与领域对象之间转换，解码时给出带位置的诊断信息
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Generic, List, Optional, Sequence, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from ..algebra import LYAlgebra, is_morphism
from ..cohomology import CochainPair, cochain_space
from ..exactlinalg import FieldSpec, Matrix, Scalar, SubspaceBasis, Vector
from ..exceptions import SchemaError, ScalarParseError, SkewConflictError
from ..extension import AbelianExtension, induced_cocycle, induced_representation, same_representation
from ..inducibility import AutPair, LiftCertificate
from ..representation import Representation
from ..utils.config import get_config
from ..utils.logger import get_logger
from .models import (
    AlgebraModel,
    BinaryEntry,
    CertificateModel,
    Cochain1Model,
    CochainModel,
    ExtensionModel,
    FieldModel,
    MatrixRows,
    PairModel,
    RepresentationModel,
    SubspaceModel,
    TernaryEntry,
    Term,
)

logger = get_logger(__name__)

# 泛型类型变量
T = TypeVar('T')


@dataclass(frozen=True)
class DecodeContext:
    """
    解码时的外部信息

    field: 文件未声明域时使用；base_dir: 解析相对路径引用；
    ambient_dim: 子空间文件的外围维数。
    """

    field: Optional[FieldSpec] = None
    base_dir: Optional[Path] = None
    ambient_dim: Optional[int] = None


# ----------------------------------------------------------------------
# 基础转换
# ----------------------------------------------------------------------

def field_from_model(model: FieldModel) -> FieldSpec:
    return FieldSpec.prime(model.p) if model.kind == "prime" else FieldSpec.rational()


def field_to_model(field: FieldSpec) -> FieldModel:
    return FieldModel(kind="prime", p=field.p) if field.is_prime else FieldModel(kind="rational")


def _resolve_field(model: Optional[FieldModel], context: DecodeContext, what: str) -> FieldSpec:
    if model is not None:
        declared = field_from_model(model)
        if context.field is not None:
            context.field.check_same(declared)
        return declared
    if context.field is None:
        raise SchemaError(f"{what} 未声明标量域且上下文中没有可沿用的域", "field")
    return context.field


def parse_scalar(field: FieldSpec, text: str, location: str) -> Scalar:
    try:
        return field.parse(text)
    except ScalarParseError as e:
        raise ScalarParseError(f"{location}: {e}") from e


def decode_matrix(
    field: FieldSpec,
    rows: MatrixRows,
    location: str,
    shape: Optional[Tuple[int, int]] = None,
) -> Matrix:
    """
    解析标量字符串矩阵

    Args:
        field: 标量域
        rows: 行主序的字符串矩阵
        location: 诊断信息中的位置
        shape: 期望形状，None 时由数据推断

    Returns:
        Matrix: 矩阵
    """
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise SchemaError("各行长度不一致", location)
    cols = widths.pop() if widths else (shape[1] if shape else 0)
    if shape is not None and (len(rows), cols) != shape:
        raise SchemaError(f"矩阵形状 {(len(rows), cols)} 应为 {shape}", location)
    parsed = [
        [parse_scalar(field, x, f"{location}[{r}][{c}]") for c, x in enumerate(row)]
        for r, row in enumerate(rows)
    ]
    return Matrix.from_rows(field, parsed, cols)


def encode_matrix(m: Matrix) -> MatrixRows:
    return m.to_strings()


def _decode_terms(field: FieldSpec, terms: List[Term], width: int, location: str) -> Vector:
    out = [field.zero] * width
    seen = set()
    for t, term in enumerate(terms):
        where = f"{location}.value[{t}]"
        if term.k >= width:
            raise SchemaError(f"下标 {term.k} 超出维数 {width}", f"{where}.k")
        if term.k in seen:
            raise SchemaError(f"下标 {term.k} 重复出现", f"{where}.k")
        seen.add(term.k)
        out[term.k] = parse_scalar(field, term.c, f"{where}.c")
    return field.vector(out)


def _encode_terms(field: FieldSpec, vec: Sequence[Scalar]) -> List[Term]:
    return [Term(k=k, c=field.format(x)) for k, x in enumerate(vec) if not field.is_zero(x)]


def _collect(
    field: FieldSpec,
    entries: Sequence[BaseModel],
    slots: Sequence[str],
    n: int,
    width: int,
    label: str,
) -> Dict[Tuple[int, ...], Vector]:
    """
    读取稀疏条目并把前两个下标化为 i ≤ j 的一侧

    同一规范位置出现两次且取值（按斜对称换号后）不同时报 SkewConflictError，
    指出两个条目。
    """
    table: Dict[Tuple[int, ...], Vector] = {}
    origin: Dict[Tuple[int, ...], str] = {}
    for pos, entry in enumerate(entries):
        where = f"{label}[{pos}]"
        idx = tuple(getattr(entry, s) for s in slots)
        for s, x in zip(slots, idx):
            if x >= n:
                raise SchemaError(f"下标 {x} 超出维数 {n}", f"{where}.{s}")
        vec = _decode_terms(field, entry.value, width, where)
        if idx[0] > idx[1]:
            idx = (idx[1], idx[0]) + idx[2:]
            vec = field.vector(-x for x in vec)
        if idx in table and table[idx] != vec:
            raise SkewConflictError(origin[idx], where)
        table[idx] = vec
        origin[idx] = where
    return table


# ----------------------------------------------------------------------
# 编解码器
# ----------------------------------------------------------------------

class BaseCodec(Generic[T]):
    """基础编解码器"""

    kind: str = ""

    def __init__(self, model: Type[BaseModel]):
        """
        初始化编解码器

        Args:
            model: 对应的 pydantic 模型类
        """
        self.model = model

    def validate(self, data: Any) -> BaseModel:
        """
        校验原始 JSON 数据

        Args:
            data: json.load 的结果

        Returns:
            BaseModel: 模型实例；校验失败时抛出 SchemaError，位置形如 ternary[3].k
        """
        try:
            return self.model.model_validate(data)
        except ValidationError as e:
            first = e.errors()[0]
            raise SchemaError(
                f"{first['msg']}（共 {e.error_count()} 处错误）",
                _location(first["loc"]) or self.kind,
            ) from e

    def decode(self, model: BaseModel, context: DecodeContext) -> T:
        raise NotImplementedError

    def encode(self, value: T) -> BaseModel:
        raise NotImplementedError

    def from_dict(self, data: Any, context: Optional[DecodeContext] = None) -> T:
        return self.decode(self.validate(data), context or DecodeContext())

    def to_dict(self, value: T) -> Dict[str, Any]:
        return self.encode(value).model_dump(by_alias=True, exclude_none=True)


def _location(loc: Sequence) -> str:
    out = ""
    for part in loc:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out += f".{part}" if out else str(part)
    return out


class AlgebraCodec(BaseCodec[LYAlgebra]):
    """结构常数表 ↔ LYAlgebra"""

    kind = "algebra"

    def decode(self, model: AlgebraModel, context: DecodeContext) -> LYAlgebra:
        f = _resolve_field(model.field, context, "代数")
        n = model.dim
        binary = _collect(f, model.binary, ("i", "j"), n, n, "binary")
        ternary = _collect(f, model.ternary, ("i", "j", "k"), n, n, "ternary")
        return LYAlgebra.from_products(f, n, binary, ternary, model.basis)

    def encode(self, L: LYAlgebra) -> AlgebraModel:
        f = L.field
        n = L.dim
        binary = [
            BinaryEntry(i=i, j=j, value=_encode_terms(f, L.binary[i][j]))
            for i in range(n) for j in range(i + 1, n)
            if not f.is_zero_vector(L.binary[i][j])
        ]
        ternary = [
            TernaryEntry(i=i, j=j, k=k, value=_encode_terms(f, L.ternary[i][j][k]))
            for i in range(n) for j in range(i + 1, n) for k in range(n)
            if not f.is_zero_vector(L.ternary[i][j][k])
        ]
        return AlgebraModel(
            field=field_to_model(f), dim=n, basis=list(L.basis_names), binary=binary, ternary=ternary
        )


class RepresentationCodec(BaseCodec[Representation]):
    """表示文件 ↔ Representation；algebra 为字符串时按相对路径读取"""

    kind = "representation"

    def _algebra(self, model: RepresentationModel, context: DecodeContext) -> LYAlgebra:
        if isinstance(model.algebra, AlgebraModel):
            return algebra_codec.decode(model.algebra, context)
        from .files import read_json

        path = Path(model.algebra)
        if not path.is_absolute() and context.base_dir is not None:
            path = context.base_dir / path
        logger.debug(f"读取表示引用的代数: {path}")
        nested = DecodeContext(field=context.field, base_dir=path.parent)
        return algebra_codec.from_dict(read_json(path), nested)

    def decode(self, model: RepresentationModel, context: DecodeContext) -> Representation:
        L = self._algebra(model, context)
        f, n, m = L.field, L.dim, model.vdim
        if len(model.rho) != n:
            raise SchemaError(f"rho 应有 {n} 个矩阵", "rho")
        rho = tuple(decode_matrix(f, x, f"rho[{i}]", (m, m)) for i, x in enumerate(model.rho))
        families = []
        for label, family in (("D", model.dmap), ("theta", model.theta)):
            if len(family) != n or any(len(row) != n for row in family):
                raise SchemaError(f"{label} 应为 {n}x{n} 个矩阵", label)
            families.append(tuple(
                tuple(decode_matrix(f, x, f"{label}[{i}][{j}]", (m, m)) for j, x in enumerate(row))
                for i, row in enumerate(family)
            ))
        return Representation(L, m, rho, families[0], families[1])

    def encode(self, r: Representation) -> RepresentationModel:
        return RepresentationModel(
            algebra=algebra_codec.encode(r.algebra),
            vdim=r.vdim,
            rho=[encode_matrix(x) for x in r.rho],
            dmap=[[encode_matrix(x) for x in row] for row in r.dmap],
            theta=[[encode_matrix(x) for x in row] for row in r.theta],
        )


class CochainCodec(BaseCodec[CochainPair]):
    """(2,3) 上链 ↔ CochainPair"""

    kind = "cochain"

    def decode(self, model: CochainModel, context: DecodeContext) -> CochainPair:
        f = _resolve_field(model.field, context, "上链")
        n, m = model.n, model.m
        fs = _collect(f, model.f, ("i", "j"), n, m, "f")
        gs = _collect(f, model.g, ("i", "j", "k"), n, m, "g")
        return CochainPair.from_entries(f, n, m, fs, gs)

    def encode(self, c: CochainPair) -> CochainModel:
        f = c.field
        fs = [
            BinaryEntry(i=i, j=j, value=_encode_terms(f, c.f(i, j)))
            for i, j in cochain_space(2, c.n, c.m).tuples
            if not f.is_zero_vector(c.f(i, j))
        ]
        gs = [
            TernaryEntry(i=i, j=j, k=k, value=_encode_terms(f, c.g(i, j, k)))
            for i, j, k in cochain_space(3, c.n, c.m).tuples
            if not f.is_zero_vector(c.g(i, j, k))
        ]
        return CochainModel(field=field_to_model(f), n=c.n, m=c.m, f=fs, g=gs)


class ExtensionCodec(BaseCodec[AbelianExtension]):
    """
    扩张文件 ↔ AbelianExtension

    读入时检查三个结构矩阵的关系；compute.verify_constructions 打开时
    还检查表示与上闭链确实由总代数和截面诱导。
    """

    kind = "extension"

    def decode(self, model: ExtensionModel, context: DecodeContext) -> AbelianExtension:
        base = algebra_codec.decode(model.base, context)
        f = base.field
        nested = DecodeContext(field=f, base_dir=context.base_dir)
        rep = representation_codec.decode(model.rep, nested)
        cocycle = cochain_codec.decode(model.cocycle, nested)
        total = algebra_codec.decode(model.total, nested)
        n, m, N = base.dim, rep.vdim, total.dim
        if N != n + m or (cocycle.n, cocycle.m) != (n, m):
            raise SchemaError(f"维数不一致: dim L = {n}, dim V = {m}, dim L̃ = {N}", "total")

        inclusion = decode_matrix(f, model.inclusion, "inclusion", (N, m))
        projection = decode_matrix(f, model.projection, "projection", (n, N))
        section = decode_matrix(f, model.section, "section", (N, n))
        ideal = SubspaceBasis.span(f, N, inclusion.columns())
        if ideal.inclusion_matrix() != inclusion:
            raise SchemaError("inclusion 的列必须是 V 的 RREF 基", "inclusion")
        if not (projection @ inclusion).is_zero():
            raise SchemaError("projection∘inclusion 不为零", "projection")
        if not (projection @ section).is_identity():
            raise SchemaError("projection∘section 不是恒等映射", "section")

        if get_config().compute.verify_constructions:
            if not is_morphism(total, base, projection):
                raise SchemaError("projection 不是 L̃ → L 的同态", "projection")
            if not same_representation(induced_representation(total, ideal, section, base), rep):
                raise SchemaError("rep 与总代数诱导的表示不一致", "rep")
            if induced_cocycle(total, ideal, section, projection, base) != cocycle:
                raise SchemaError("cocycle 与截面诱导的上闭链不一致", "cocycle")
        return AbelianExtension(base, rep, cocycle, total, inclusion, projection, section, ideal)

    def encode(self, e: AbelianExtension) -> ExtensionModel:
        return ExtensionModel(
            base=algebra_codec.encode(e.base),
            rep=representation_codec.encode(e.rep),
            cocycle=cochain_codec.encode(e.cocycle),
            total=algebra_codec.encode(e.total),
            inclusion=encode_matrix(e.inclusion),
            projection=encode_matrix(e.projection),
            section=encode_matrix(e.section),
        )


class PairCodec(BaseCodec[AutPair]):
    """自同构对 (φ, ψ)，方阵形状由数据推断"""

    kind = "pair"

    def decode(self, model: PairModel, context: DecodeContext) -> AutPair:
        f = _resolve_field(model.field, context, "自同构对")
        return AutPair(decode_matrix(f, model.phi, "phi"), decode_matrix(f, model.psi, "psi"))

    def encode(self, pr: AutPair) -> PairModel:
        return PairModel(
            field=field_to_model(pr.phi.field), phi=encode_matrix(pr.phi), psi=encode_matrix(pr.psi)
        )


class CertificateCodec(BaseCodec[LiftCertificate]):
    kind = "certificate"

    def decode(self, model: CertificateModel, context: DecodeContext) -> LiftCertificate:
        f = _resolve_field(model.field, context, "证书")
        return LiftCertificate(decode_matrix(f, model.gamma, "gamma"), decode_matrix(f, model.lam, "lambda"))

    def encode(self, cert: LiftCertificate) -> CertificateModel:
        return CertificateModel(
            field=field_to_model(cert.gamma.field),
            gamma=encode_matrix(cert.gamma),
            lam=encode_matrix(cert.lam),
        )


class Cochain1Codec(BaseCodec[Matrix]):
    """C^1 元素 λ: L → V"""

    kind = "cochain1"

    def decode(self, model: Cochain1Model, context: DecodeContext) -> Matrix:
        f = _resolve_field(model.field, context, "C^1 上链")
        return decode_matrix(f, model.values, "values", (model.m, model.n))

    def encode(self, lam: Matrix) -> Cochain1Model:
        return Cochain1Model(field=field_to_model(lam.field), n=lam.cols, m=lam.rows, values=encode_matrix(lam))


class SubspaceCodec(BaseCodec[SubspaceBasis]):
    """子空间以张成向量给出，读入后化为 RREF 基"""

    kind = "subspace"

    def decode(self, model: SubspaceModel, context: DecodeContext) -> SubspaceBasis:
        f = _resolve_field(model.field, context, "子空间")
        if context.ambient_dim is None:
            raise SchemaError("缺少外围维数，子空间文件需与代数一同读取", "vectors")
        rows = decode_matrix(f, model.vectors, "vectors", (len(model.vectors), context.ambient_dim))
        return SubspaceBasis.span(f, context.ambient_dim, rows.entries)

    def encode(self, W: SubspaceBasis) -> SubspaceModel:
        return SubspaceModel(
            field=field_to_model(W.field),
            vectors=[[W.field.format(x) for x in v] for v in W.vectors],
        )


# 创建全局编解码器实例
algebra_codec = AlgebraCodec(AlgebraModel)
representation_codec = RepresentationCodec(RepresentationModel)
cochain_codec = CochainCodec(CochainModel)
extension_codec = ExtensionCodec(ExtensionModel)
pair_codec = PairCodec(PairModel)
certificate_codec = CertificateCodec(CertificateModel)
cochain1_codec = Cochain1Codec(Cochain1Model)
subspace_codec = SubspaceCodec(SubspaceModel)

CODECS: Dict[str, BaseCodec] = {
    codec.kind: codec
    for codec in (
        algebra_codec,
        representation_codec,
        cochain_codec,
        extension_codec,
        pair_codec,
        certificate_codec,
        cochain1_codec,
        subspace_codec,
    )
}
