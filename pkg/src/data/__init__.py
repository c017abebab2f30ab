"""Input formats: algebra description files and module specifications."""

from .algebra_file import (
    DEFAULT_PRIME,
    AlgebraFile,
    load_algebra,
    parse_algebra_text,
    read_algebra_file,
    serialize_algebra_file,
)
from .module_spec import module_from_literal, parse_module_spec

__all__ = [
    "DEFAULT_PRIME",
    "AlgebraFile",
    "load_algebra",
    "module_from_literal",
    "parse_algebra_text",
    "parse_module_spec",
    "read_algebra_file",
    "serialize_algebra_file",
]
