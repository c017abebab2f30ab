"""Module specifications given on the command line.

Two forms are accepted:

* a symbolic sum of registered labels, ``P1+S1`` or ``0``;
* a YAML/JSON literal ``{dims: [1, 1], maps: {delta: [[1]]}}``.
"""

from __future__ import annotations

import logging
from typing import Any, Mapping

import yaml

from ..algebra import BoundQuiverAlgebra
from ..errors import ModuleSpecError
from ..modules import Representation, module_from_labels

logger = logging.getLogger(__name__)

LITERAL_KEYS = {"dims", "maps"}


def parse_module_spec(algebra: BoundQuiverAlgebra, text: str) -> Representation:
    spec = (text or "").strip()
    if not spec:
        raise ModuleSpecError("Module spec is empty")
    if spec.startswith("{"):
        try:
            data = yaml.safe_load(spec)
        except yaml.YAMLError as exc:
            raise ModuleSpecError(f"Malformed module literal: {exc}") from exc
        return module_from_literal(algebra, data)
    if spec == "0":
        return module_from_labels(algebra, [])
    names = [part.strip() for part in spec.split("+")]
    if any(not name for name in names):
        raise ModuleSpecError(f"Malformed module sum {spec!r}")
    return module_from_labels(algebra, names)


def module_from_literal(algebra: BoundQuiverAlgebra, data: Any) -> Representation:
    if not isinstance(data, Mapping):
        raise ModuleSpecError("Module literal must be a mapping")
    unknown = sorted(str(k) for k in data if k not in LITERAL_KEYS)
    if unknown:
        raise ModuleSpecError(f"Unknown keys in module literal: {unknown}")
    try:
        dims = tuple(int(d) for d in data.get("dims") or [])
        maps = dict(data.get("maps") or {})
        module = Representation(algebra, dims, maps)
    except (TypeError, ValueError) as exc:
        raise ModuleSpecError(f"Invalid module literal: {exc}") from exc
    violations = module.relation_violations()
    if violations:
        raise ModuleSpecError(f"Module literal violates relations: {', '.join(violations)}")
    logger.debug("Parsed module literal with dims %s over %s", module.dims, algebra.name)
    return module


__all__ = ["module_from_literal", "parse_module_spec"]
