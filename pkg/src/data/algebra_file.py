"""Algebra description files.

A file is a YAML mapping::

    name: triangular_r
    p: 1009                 # optional
    vertices: [1, 2, 3]
    arrows:
      - {name: delta, from: 1, to: 2}
    relations:
      - [{coeff: 1, path: [alpha, gamma]}, {coeff: -1, path: [epsilon, delta]}]
    max_path_length: 20     # optional

Unknown keys are rejected at every level.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import yaml

from ..algebra import Arrow, BoundQuiverAlgebra, Quiver, Relation, build_algebra
from ..algebra.bound_algebra import DEFAULT_MAX_PATH_LENGTH
from ..errors import AlgebraFileError
from ..linalg.exact import is_prime

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 1009
TOP_LEVEL_KEYS = {"name", "p", "vertices", "arrows", "relations", "max_path_length"}
ARROW_KEYS = {"name", "from", "to"}
TERM_KEYS = {"coeff", "path"}


@dataclass(frozen=True)
class AlgebraFile:
    name: str
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...]
    # None when the file leaves the field to the caller
    p: Optional[int] = None
    max_path_length: Optional[int] = None

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "AlgebraFile":
        if not isinstance(data, Mapping):
            raise AlgebraFileError("algebra file must contain a mapping")
        _reject_unknown(data, TOP_LEVEL_KEYS, "algebra file")
        if "vertices" not in data:
            raise AlgebraFileError("algebra file is missing 'vertices'")
        vertices = tuple(_vertex_id(v) for v in data.get("vertices") or [])
        arrows = tuple(_parse_arrow(item) for item in data.get("arrows") or [])
        relations = tuple(_parse_relation(item) for item in data.get("relations") or [])
        try:
            p = int(data["p"]) if data.get("p") is not None else None
            max_len = int(data["max_path_length"]) if data.get("max_path_length") is not None else None
        except (TypeError, ValueError) as exc:
            raise AlgebraFileError(f"Invalid numeric field: {exc}") from exc
        if p is not None and not is_prime(p):
            raise AlgebraFileError(f"p must be a prime, got {p}")
        return cls(
            name=str(data.get("name") or "algebra"),
            vertices=vertices,
            arrows=arrows,
            relations=relations,
            p=p,
            max_path_length=max_len,
        )

    def to_mapping(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
            "relations": [
                [{"coeff": coeff, "path": list(path)} for coeff, path in rel.terms]
                for rel in self.relations
            ],
        }
        if self.p is not None:
            data["p"] = self.p
        if self.max_path_length is not None:
            data["max_path_length"] = self.max_path_length
        return data

    def quiver(self) -> Quiver:
        return Quiver(vertices=self.vertices, arrows=self.arrows)

    def build(
        self,
        *,
        p: Optional[int] = None,
        max_path_length: Optional[int] = None,
        default_p: int = DEFAULT_PRIME,
        default_max_path_length: int = DEFAULT_MAX_PATH_LENGTH,
    ) -> BoundQuiverAlgebra:
        prime = p or self.p or default_p
        if not is_prime(prime):
            raise AlgebraFileError(f"p must be a prime, got {prime}")
        algebra = build_algebra(
            self.quiver(),
            self.relations,
            p=prime,
            max_path_length=max_path_length or self.max_path_length or default_max_path_length,
            name=self.name,
        )
        logger.info("Built algebra %s over F_%d: dim %d", self.name, algebra.p, algebra.dim)
        return algebra


def _reject_unknown(data: Mapping[str, Any], allowed: set[str], where: str) -> None:
    unknown = sorted(str(k) for k in data if k not in allowed)
    if unknown:
        raise AlgebraFileError(f"Unknown keys in {where}: {unknown}")


def _vertex_id(value: Any) -> str:
    text = str(value if value is not None else "").strip()
    if not text:
        raise AlgebraFileError("vertex id is required")
    return text


def _parse_arrow(item: Any) -> Arrow:
    if not isinstance(item, Mapping):
        raise AlgebraFileError(f"arrow entry must be a mapping, got {item!r}")
    _reject_unknown(item, ARROW_KEYS, "arrow entry")
    missing = ARROW_KEYS - set(item)
    if missing:
        raise AlgebraFileError(f"arrow entry {item!r} is missing {sorted(missing)}")
    return Arrow(str(item["name"]), _vertex_id(item["from"]), _vertex_id(item["to"]))


def _parse_path(value: Any) -> tuple[str, ...]:
    if isinstance(value, str):
        return tuple(value.split())
    if isinstance(value, list):
        return tuple(str(name) for name in value)
    raise AlgebraFileError(f"path must be a list of arrow names, got {value!r}")


def _parse_relation(item: Any) -> Relation:
    if not isinstance(item, list) or not item:
        raise AlgebraFileError(f"relation must be a nonempty list of terms, got {item!r}")
    terms: List[tuple[int, tuple[str, ...]]] = []
    for term in item:
        if not isinstance(term, Mapping):
            raise AlgebraFileError(f"relation term must be a mapping, got {term!r}")
        _reject_unknown(term, TERM_KEYS, "relation term")
        try:
            coeff = int(term.get("coeff", 1))
        except (TypeError, ValueError) as exc:
            raise AlgebraFileError(f"Invalid coefficient in {term!r}") from exc
        terms.append((coeff, _parse_path(term.get("path"))))
    return Relation(tuple(terms))


def parse_algebra_text(text: str) -> AlgebraFile:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise AlgebraFileError(f"Malformed algebra file: {exc}") from exc
    return AlgebraFile.from_mapping(data)


def read_algebra_file(path: str | Path) -> AlgebraFile:
    file_path = Path(path)
    if not file_path.exists():
        raise AlgebraFileError(f"Algebra file not found: {file_path}")
    return parse_algebra_text(file_path.read_text(encoding="utf-8"))


def serialize_algebra_file(spec: AlgebraFile) -> str:
    return yaml.safe_dump(spec.to_mapping(), sort_keys=False, allow_unicode=True)


def load_algebra(
    path: str | Path,
    *,
    p: Optional[int] = None,
    max_path_length: Optional[int] = None,
) -> BoundQuiverAlgebra:
    return read_algebra_file(path).build(p=p, max_path_length=max_path_length)


__all__ = [
    "AlgebraFile",
    "DEFAULT_PRIME",
    "load_algebra",
    "parse_algebra_text",
    "read_algebra_file",
    "serialize_algebra_file",
]
