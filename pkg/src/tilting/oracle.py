"""Brute-force oracle: exhaustive search for indecomposables and support tau-tilting pairs.

Arrow matrices are enumerated over a small prime field (F_2 by default) for
every dimension vector under a per-vertex cap. Pairs are then tested straight
from the definition on every subset of pairwise tau-rigid indecomposables.
"""

from __future__ import annotations

import itertools
import logging
from typing import Sequence, Union

import numpy as np
from tqdm.auto import tqdm

from ..algebra import BoundQuiverAlgebra
from ..errors import SearchSpaceTooLargeError
from ..modules import (
    Representation,
    direct_sum,
    hom_space,
    injective_module,
    is_indecomposable,
    is_isomorphic,
    projective_module,
    registry_for,
    sort_key,
)
from .tau import SttPair, make_pair, max_annihilating_idempotent, tau

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_PRIME = 2
DEFAULT_SEARCH_LIMIT = 2_000_000

DimBound = Union[int, Sequence[int]]


def _caps(algebra: BoundQuiverAlgebra, dim_bound: DimBound) -> tuple[int, ...]:
    if isinstance(dim_bound, int):
        return (dim_bound,) * algebra.n_vertices
    caps = tuple(int(c) for c in dim_bound)
    if len(caps) != algebra.n_vertices:
        raise ValueError(f"Expected {algebra.n_vertices} caps, got {len(caps)}")
    return caps


def default_dim_bound(algebra: BoundQuiverAlgebra) -> tuple[int, ...]:
    """Per-vertex cap: the largest dimension an indecomposable projective or injective has there."""
    modules = [projective_module(algebra, [v]) for v in algebra.vertices]
    modules += [injective_module(algebra, [v]) for v in algebra.vertices]
    return tuple(max((m.dims[i] for m in modules), default=0) for i in range(algebra.n_vertices))


def search_space_size(algebra: BoundQuiverAlgebra, dim_bound: DimBound, prime: int = DEFAULT_ORACLE_PRIME) -> int:
    caps = _caps(algebra, dim_bound)
    index = algebra.quiver.vertex_index
    total = 0
    for dims in itertools.product(*(range(c + 1) for c in caps)):
        bits = sum(dims[index[a.target]] * dims[index[a.source]] for a in algebra.quiver.arrows)
        total += prime**bits
    return total


def oracle_indecomposables(
    algebra: BoundQuiverAlgebra,
    dim_bound: DimBound,
    *,
    prime: int = DEFAULT_ORACLE_PRIME,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    progress: bool = False,
) -> list[Representation]:
    """Indecomposables up to isomorphism over ``algebra`` rebuilt at ``prime``."""
    field = algebra.with_field(prime)
    caps = _caps(field, dim_bound)
    size = search_space_size(field, caps, prime)
    if size > search_limit:
        raise SearchSpaceTooLargeError(
            f"Oracle search over {size} representations exceeds the limit {search_limit}"
        )
    index = field.quiver.vertex_index
    arrows = field.quiver.arrows
    found: list[Representation] = []
    bar = tqdm(total=size, desc=f"[oracle] {field.name}", unit="rep", dynamic_ncols=True, disable=not progress)
    try:
        for dims in itertools.product(*(range(c + 1) for c in caps)):
            shapes = [(dims[index[a.target]], dims[index[a.source]]) for a in arrows]
            bits = sum(r * c for r, c in shapes)
            if not any(dims):
                bar.update(prime**bits)
                continue
            for values in itertools.product(range(prime), repeat=bits):
                bar.update(1)
                maps, offset = {}, 0
                for arrow, (r, c) in zip(arrows, shapes):
                    maps[arrow.name] = np.array(values[offset : offset + r * c], dtype=np.int64).reshape(r, c)
                    offset += r * c
                module = Representation(field, dims, maps)
                if module.relation_violations() or not is_indecomposable(module):
                    continue
                if any(other.dims == module.dims and is_isomorphic(other, module) for other in found):
                    continue
                found.append(module)
    finally:
        bar.close()
    registry = registry_for(field)
    found.sort(key=lambda m: (sort_key(m), registry.label(m)))
    logger.info("Oracle found %d indecomposables over %s (caps %s)", len(found), field.name, caps)
    return found


def oracle_stt(
    algebra: BoundQuiverAlgebra,
    dim_bound: DimBound,
    *,
    prime: int = DEFAULT_ORACLE_PRIME,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    progress: bool = False,
) -> list[SttPair]:
    """All support tau-tilting pairs whose summands lie under the cap, tested by definition."""
    modules = oracle_indecomposables(
        algebra, dim_bound, prime=prime, search_limit=search_limit, progress=progress
    )
    if not modules:
        field = algebra.with_field(prime)
    else:
        field = modules[0].algebra
    n = field.n_vertices
    translates = [tau(m) for m in modules]
    rigid = [[not hom_space(x, t) for t in translates] for x in modules]
    candidates = [i for i in range(len(modules)) if rigid[i][i]]
    pairs: list[SttPair] = []
    for size in range(n + 1):
        for combo in itertools.combinations(candidates, size):
            if not all(rigid[i][j] and rigid[j][i] for i, j in itertools.combinations(combo, 2)):
                continue
            chosen = [modules[i] for i in combo]
            support = max_annihilating_idempotent(direct_sum(chosen, field))
            if size + len(support) == n:
                pairs.append(make_pair(field, chosen, support))
    pairs.sort(key=lambda pair: pair.label)
    logger.info("Oracle found %d support tau-tilting pairs over %s", len(pairs), field.name)
    return pairs


__all__ = [
    "DEFAULT_ORACLE_PRIME",
    "DEFAULT_SEARCH_LIMIT",
    "default_dim_bound",
    "oracle_indecomposables",
    "oracle_stt",
    "search_space_size",
]
