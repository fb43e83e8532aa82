"""
数据文件读写
"""

import hashlib
import json
import sys
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Union

from ..algebra import LYAlgebra
from ..cohomology import CochainPair
from ..exactlinalg import FieldSpec, Matrix, SubspaceBasis
from ..exceptions import InputError, SchemaError
from ..extension import AbelianExtension
from ..inducibility import AutPair, LiftCertificate
from ..representation import Representation
from ..utils.config import get_config
from ..utils.logger import get_logger
from .codec import CODECS, BaseCodec, DecodeContext

logger = get_logger(__name__)

PathLike = Union[str, Path]

# 从标准输入读取，便于 `lyat builtin ... | lyat validate -`
STDIN = "-"

_KIND_BY_TYPE = (
    (AbelianExtension, "extension"),
    (Representation, "representation"),
    (LYAlgebra, "algebra"),
    (CochainPair, "cochain"),
    (AutPair, "pair"),
    (LiftCertificate, "certificate"),
    (SubspaceBasis, "subspace"),
    (Matrix, "cochain1"),
)


@lru_cache(maxsize=1)
def _stdin_bytes() -> bytes:
    return sys.stdin.buffer.read()


def _read_bytes(path: PathLike) -> bytes:
    if str(path) == STDIN:
        return _stdin_bytes()
    path = Path(path)
    if not path.is_file():
        raise InputError(f"文件不存在: {path}")
    return path.read_bytes()


def read_json(path: PathLike) -> Any:
    """
    读取 JSON 文件

    Args:
        path: 文件路径

    Returns:
        Any: 解析结果；语法错误时抛出 SchemaError，位置为 文件:行:列
    """
    try:
        text = _read_bytes(path).decode("utf-8")
    except UnicodeDecodeError as e:
        raise SchemaError(f"非法 UTF-8 字节: {e.reason}", f"{path}:{e.start}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"JSON 语法错误: {e.msg}", f"{path}:{e.lineno}:{e.colno}") from e


def canonical_json(data: Any) -> str:
    """键排序、固定缩进、以换行结尾"""
    indent = get_config().report.indent
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"


def codec_for(kind: str) -> BaseCodec:
    try:
        return CODECS[kind]
    except KeyError:
        raise InputError(f"未知的数据类型: {kind}，可选 {sorted(CODECS)}") from None


def kind_of(value: Any) -> str:
    for cls, kind in _KIND_BY_TYPE:
        if isinstance(value, cls):
            return kind
    raise InputError(f"无法序列化的对象类型: {type(value).__name__}")


def load_store(
    path: PathLike,
    kind: str,
    field: Optional[FieldSpec] = None,
    ambient_dim: Optional[int] = None,
) -> Any:
    """
    读取、校验并解码数据文件

    Args:
        path: 文件路径
        kind: algebra / representation / cochain / extension / pair / certificate / cochain1 / subspace
        field: 文件未声明域时沿用的域
        ambient_dim: 子空间文件的外围维数

    Returns:
        Any: 领域对象
    """
    path = Path(path)
    codec = codec_for(kind)
    data = read_json(path)
    context = DecodeContext(field=field, base_dir=path.parent, ambient_dim=ambient_dim)
    try:
        value = codec.from_dict(data, context)
    except SchemaError as e:
        if e.location and not e.location.startswith(str(path)):
            raise SchemaError(e.message, f"{path}:{e.location}") from e
        raise
    logger.debug(f"读取 {kind}: {path}")
    return value


def dumps(value: Any, kind: Optional[str] = None) -> str:
    """领域对象的规范 JSON 文本"""
    return canonical_json(codec_for(kind or kind_of(value)).to_dict(value))


def store(value: Any, path: Optional[PathLike] = None, kind: Optional[str] = None) -> str:
    """
    以规范 JSON 写出领域对象

    条目按下标排序、只存 i<j 一侧、省略零条目、标量取规范字符串，
    因此对规范文件 store(load(x)) 逐字节不变。

    Args:
        value: 领域对象
        path: 输出路径，None 时只返回文本
        kind: 数据类型，缺省按对象类型推断

    Returns:
        str: JSON 文本
    """
    text = dumps(value, kind)
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.debug(f"写出 {path}")
    return text


def input_digest(path: PathLike) -> str:
    """原始字节的 sha256"""
    return hashlib.sha256(_read_bytes(path)).hexdigest()
