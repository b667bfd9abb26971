"""Hermitian-code codec with semi-erasure decoding."""

from .code import Code, CodeParams, code_params
from .decoder import DecodeReport, decode
from .field import FieldCtx, build_field
from .mapping import MappingSet, build_mapping

__all__ = [
    "Code", "CodeParams", "code_params", "DecodeReport", "decode",
    "FieldCtx", "build_field", "MappingSet", "build_mapping",
]
