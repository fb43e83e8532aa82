"""
数据文件模块：JSON 模型、编解码与规范化读写
"""

from .codec import (
    CODECS,
    BaseCodec,
    DecodeContext,
    algebra_codec,
    certificate_codec,
    cochain1_codec,
    cochain_codec,
    decode_matrix,
    encode_matrix,
    extension_codec,
    field_from_model,
    field_to_model,
    pair_codec,
    representation_codec,
    subspace_codec,
)
from .files import canonical_json, codec_for, dumps, input_digest, kind_of, load_store, read_json, store
from .models import (
    AlgebraModel,
    CertificateModel,
    Cochain1Model,
    CochainModel,
    ExtensionModel,
    FieldModel,
    PairModel,
    RepresentationModel,
    SubspaceModel,
)

__all__ = [
    'CODECS', 'BaseCodec', 'DecodeContext', 'algebra_codec', 'certificate_codec', 'cochain1_codec',
    'cochain_codec', 'decode_matrix', 'encode_matrix', 'extension_codec', 'field_from_model',
    'field_to_model', 'pair_codec', 'representation_codec', 'subspace_codec',
    'canonical_json', 'codec_for', 'dumps', 'input_digest', 'kind_of', 'load_store', 'read_json', 'store',
    'AlgebraModel', 'CertificateModel', 'Cochain1Model', 'CochainModel', 'ExtensionModel',
    'FieldModel', 'PairModel', 'RepresentationModel', 'SubspaceModel',
]
