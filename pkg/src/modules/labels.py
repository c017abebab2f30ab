"""Canonical names of indecomposable modules, one registry per algebra.

Registries are seeded with ``P<v>``, then ``S<v>``, then ``I<v>`` in vertex
order; a module isomorphic to an earlier name keeps it. Any other
indecomposable is named by its dimension vector, ``M(1,1,0)``, with ``_2``,
``_3``... on collisions.
"""

from __future__ import annotations

import logging
import threading
import weakref
from typing import Optional

from ..algebra import BoundQuiverAlgebra
from ..errors import ModuleSpecError
from .decompose import decompose, is_isomorphic, sort_key
from .presentation import injective_module, projective_module, simple_module
from .representation import Representation, direct_sum, zero_module

logger = logging.getLogger(__name__)


class LabelRegistry:
    def __init__(self, algebra: BoundQuiverAlgebra) -> None:
        self.algebra = algebra
        self._lock = threading.RLock()
        self._entries: list[tuple[str, Representation]] = []
        self._by_dims: dict[tuple[int, ...], list[int]] = {}
        self._seeded = False

    def _seed(self) -> None:
        if self._seeded:
            return
        self._seeded = True
        alg = self.algebra
        builders = (
            ("P", lambda v: projective_module(alg, [v])),
            ("S", lambda v: simple_module(alg, v)),
            ("I", lambda v: injective_module(alg, [v])),
        )
        for prefix, build in builders:
            for v in alg.vertices:
                module = build(v)
                if self._lookup(module) is None:
                    self._add(f"{prefix}{v}", module)

    def _add(self, name: str, module: Representation) -> None:
        self._by_dims.setdefault(module.dims, []).append(len(self._entries))
        self._entries.append((name, module))

    def _lookup(self, module: Representation) -> Optional[str]:
        for idx in self._by_dims.get(module.dims, []):
            name, known = self._entries[idx]
            if is_isomorphic(known, module):
                return name
        return None

    def find(self, module: Representation) -> Optional[str]:
        with self._lock:
            self._seed()
            return self._lookup(module)

    def label(self, module: Representation) -> str:
        """Name of an indecomposable, registering a new one on first sight."""
        with self._lock:
            self._seed()
            name = self._lookup(module)
            if name is not None:
                return name
            base = "M(" + ",".join(str(d) for d in module.dims) + ")"
            taken = {n for n, _ in self._entries}
            name, suffix = base, 2
            while name in taken:
                name = f"{base}_{suffix}"
                suffix += 1
            self._add(name, module)
            logger.debug("Registered %s over %s", name, self.algebra.name)
            return name

    def labels_of(self, module: Representation) -> list[str]:
        """Summand labels with multiplicity, in canonical order."""
        keyed = []
        for piece, mult in decompose(module):
            name = self.label(piece)
            keyed.extend([((sort_key(piece), name), name)] * mult)
        keyed.sort(key=lambda item: item[0])
        return [name for _, name in keyed]

    def label_sum(self, module: Representation) -> str:
        names = self.labels_of(module)
        return "".join(names) if names else "0"

    def resolve(self, name: str) -> Representation:
        with self._lock:
            self._seed()
            for known_name, module in self._entries:
                if known_name == name:
                    return module
        raise ModuleSpecError(f"Unknown module label {name!r} over {self.algebra.name}")

    def known_labels(self) -> list[str]:
        with self._lock:
            self._seed()
            return [name for name, _ in self._entries]


_registries: "weakref.WeakKeyDictionary[BoundQuiverAlgebra, LabelRegistry]" = weakref.WeakKeyDictionary()
_registries_lock = threading.Lock()


def registry_for(algebra: BoundQuiverAlgebra) -> LabelRegistry:
    with _registries_lock:
        registry = _registries.get(algebra)
        if registry is None:
            registry = LabelRegistry(algebra)
            _registries[algebra] = registry
        return registry


def label_of(module: Representation) -> str:
    return registry_for(module.algebra).label_sum(module)


def module_from_labels(algebra: BoundQuiverAlgebra, names: list[str]) -> Representation:
    registry = registry_for(algebra)
    return direct_sum([registry.resolve(n) for n in names], algebra) if names else zero_module(algebra)


__all__ = ["LabelRegistry", "label_of", "module_from_labels", "registry_for"]
