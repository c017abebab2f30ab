"""Krull-Schmidt decomposition by idempotent splitting in End(X).

Endomorphisms are tried in a fixed order: basis elements, then small linear
combinations of pairs, each shifted by its F_p-eigenvalues. A non-invertible,
non-nilpotent candidate ``phi`` splits ``X`` as ``im phi^N + ker phi^N``
(Fitting). When nothing splits, the module is accepted as indecomposable
only after its endomorphism ring is confirmed local.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from ..errors import DecompositionError
from ..linalg import exact
from .presentation import top_multiplicities
from .representation import (
    Morphism,
    Representation,
    _same_algebra,
    hom_space,
    identity_morphism,
    socle_dims,
    submodule,
    zero_morphism,
)

logger = logging.getLogger(__name__)

Endo = tuple[np.ndarray, ...]


@dataclass(frozen=True)
class DecompositionLimits:
    sweep_scalars: int = 3
    exhaustive_budget: int = 20000


_limits = DecompositionLimits()


def configure(limits: DecompositionLimits) -> None:
    global _limits
    _limits = limits
    decompose.cache_clear()
    split_module.cache_clear()


def _combine(terms: list[tuple[int, Endo]], p: int) -> Endo:
    first = terms[0][1]
    out = [np.zeros_like(m) for m in first]
    for coeff, endo in terms:
        for i, m in enumerate(endo):
            out[i] = np.mod(out[i] + coeff * m, p)
    return tuple(out)


def _shift(endo: Endo, scalar: int, p: int) -> Endo:
    return tuple(np.mod(m - scalar * exact.identity(m.shape[0]), p) for m in endo)


def _eigenvalues(endo: Endo, p: int) -> list[int]:
    values: set[int] = set()
    for m in endo:
        if m.shape[0]:
            values.update(exact.eigenvalues(m, p))
    return sorted(values)


def _fitting(module: Representation, endo: Endo) -> Optional[tuple[list[np.ndarray], list[np.ndarray]]]:
    p = module.p
    n = module.total_dim
    images, kernels = [], []
    for m in endo:
        power = exact.matrix_power(m, n, p)
        images.append(exact.column_space(power, p))
        kernels.append(exact.kernel(power, p))
    size = sum(b.shape[1] for b in images)
    if 0 < size < n:
        return images, kernels
    return None


def _candidates(basis: list[Endo], p: int) -> Iterator[Endo]:
    for endo in basis:
        yield endo
    scalars = range(1, min(p, _limits.sweep_scalars))
    for i, j in itertools.combinations(range(len(basis)), 2):
        for c in scalars:
            yield _combine([(1, basis[i]), (c, basis[j])], p)


def _exhaustive(basis: list[Endo], p: int) -> Iterator[Endo]:
    count = 0
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        count += 1
        if count > _limits.exhaustive_budget:
            return
        yield _combine([(c, e) for c, e in zip(coeffs, basis) if c], p)


def _local_status(module: Representation, basis: list[Endo]) -> str:
    """``local``, ``nonsplit`` (no F_p-eigenvalue somewhere) or ``unknown``."""
    p = module.p
    n = module.total_dim
    nilpotent: list[Endo] = []
    for endo in basis:
        values = _eigenvalues(endo, p)
        if not values:
            return "nonsplit"
        if len(values) > 1:
            return "unknown"
        nilpotent.append(_shift(endo, values[0], p))
    if not nilpotent:
        return "local"

    def flat(endo: Endo) -> np.ndarray:
        return np.concatenate([m.ravel() for m in endo]).reshape(-1, 1)

    span = np.concatenate([flat(e) for e in nilpotent], axis=1)
    layer = nilpotent
    for _ in range(n + 1):
        products = [
            tuple(exact.matmul(a, b, p) for a, b in zip(x, y)) for x in layer for y in nilpotent
        ]
        products = [e for e in products if any(m.any() for m in e)]
        if not products:
            return "local"
        stacked = np.concatenate([flat(e) for e in products], axis=1)
        if exact.solve(span, stacked, p) is None:
            return "unknown"
        basis_cols = exact.column_space(stacked, p)
        layer = []
        for j in range(basis_cols.shape[1]):
            col = basis_cols[:, j]
            parts, offset = [], 0
            for m in nilpotent[0]:
                parts.append(col[offset : offset + m.size].reshape(m.shape))
                offset += m.size
            layer.append(tuple(parts))
    return "unknown"


def _find_split(module: Representation) -> Optional[tuple[list[np.ndarray], list[np.ndarray]]]:
    p = module.p
    basis: list[Endo] = [h.maps for h in hom_space(module, module)]
    if len(basis) <= 1:
        return None
    for candidate in _candidates(basis, p):
        for value in _eigenvalues(candidate, p):
            parts = _fitting(module, _shift(candidate, value, p))
            if parts is not None:
                return parts
    status = _local_status(module, basis)
    if status == "local":
        return None
    logger.warning(
        "Endomorphism sweep found no idempotent for dims %s; trying exhaustive search", module.dims
    )
    for candidate in _exhaustive(basis, p):
        for value in _eigenvalues(candidate, p):
            parts = _fitting(module, _shift(candidate, value, p))
            if parts is not None:
                return parts
    if status == "nonsplit":
        raise DecompositionError(
            f"Endomorphism ring of a module with dims {module.dims} does not split over F_{p}"
        )
    raise DecompositionError(f"No idempotent found for a module with dims {module.dims}")


@lru_cache(maxsize=4096)
def split_module(module: Representation) -> tuple[Morphism, ...]:
    """Inclusions of indecomposable submodules whose sum is ``module``."""
    if module.is_zero():
        return ()
    parts = _find_split(module)
    if parts is None:
        return (identity_morphism(module),)
    logger.debug("Split module with dims %s", module.dims)
    pieces: list[Morphism] = []
    for bases in parts:
        sub, inclusion = submodule(module, bases)
        for inner in split_module(sub):
            pieces.append(inclusion.compose(inner))
    return tuple(pieces)


def is_indecomposable(module: Representation) -> bool:
    return len(split_module(module)) == 1


@lru_cache(maxsize=4096)
def sort_key(module: Representation) -> tuple:
    """Isomorphism-invariant key: dims, top and socle descending, then End dimension."""
    return (
        tuple(-d for d in module.dims),
        tuple(-t for t in top_multiplicities(module)),
        tuple(-s for s in socle_dims(module)),
        -len(hom_space(module, module)),
    )


def _iso_between_indecomposables(x: Representation, y: Representation) -> Optional[Morphism]:
    if x.dims != y.dims:
        return None
    for h in hom_space(x, y):
        if h.is_isomorphism():
            return h
    return None


@lru_cache(maxsize=4096)
def decompose(module: Representation) -> tuple[tuple[Representation, int], ...]:
    """Pairwise non-isomorphic indecomposable summands with multiplicities, canonically ordered."""
    groups: list[list[Representation]] = []
    for inclusion in split_module(module):
        piece = inclusion.source
        for group in groups:
            if _iso_between_indecomposables(group[0], piece) is not None:
                group.append(piece)
                break
        else:
            groups.append([piece])
    keyed = sorted(
        ((sort_key(g[0]), i, g) for i, g in enumerate(groups)), key=lambda item: (item[0], item[1])
    )
    return tuple((g[0], len(g)) for _, _, g in keyed)


def indecomposable_summands(module: Representation) -> list[Representation]:
    return [piece for piece, _ in decompose(module)]


def summand_count(module: Representation) -> int:
    return len(decompose(module))


def find_isomorphism(x: Representation, y: Representation) -> Optional[Morphism]:
    alg = _same_algebra(x, y)
    if x.dims != y.dims:
        return None
    if x.is_zero():
        return zero_morphism(x, y)
    homs = hom_space(x, y)
    for h in homs:
        if h.is_isomorphism():
            return h
    scalars = range(1, min(alg.p, _limits.sweep_scalars))
    for i, j in itertools.combinations(range(len(homs)), 2):
        for c in scalars:
            h = homs[i] + homs[j].scaled(c)
            if h.is_isomorphism():
                return h
    return _iso_by_pieces(x, y)


def _iso_by_pieces(x: Representation, y: Representation) -> Optional[Morphism]:
    x_pieces = list(split_module(x))
    y_pieces = list(split_module(y))
    if len(x_pieces) != len(y_pieces):
        return None
    matched: list[tuple[Morphism, Morphism, Morphism]] = []
    unused = list(range(len(y_pieces)))
    for inc_x in x_pieces:
        for pos, j in enumerate(unused):
            iso = _iso_between_indecomposables(inc_x.source, y_pieces[j].source)
            if iso is not None:
                matched.append((inc_x, y_pieces[j], iso))
                del unused[pos]
                break
        else:
            return None
    p = x.p
    maps = []
    for i in range(x.algebra.n_vertices):
        if x.dims[i] == 0:
            maps.append(exact.zeros(0, 0))
            continue
        ix = np.concatenate([m[0].maps[i] for m in matched], axis=1)
        iy = np.concatenate([m[1].maps[i] for m in matched], axis=1)
        middle = exact.block_diagonal([m[2].maps[i] for m in matched])
        maps.append(exact.chain([iy, middle, exact.inverse(ix, p)], p))
    return Morphism(x, y, tuple(maps))


def is_isomorphic(x: Representation, y: Representation) -> bool:
    return find_isomorphism(x, y) is not None


__all__ = [
    "DecompositionLimits",
    "configure",
    "decompose",
    "find_isomorphism",
    "indecomposable_summands",
    "is_indecomposable",
    "is_isomorphic",
    "sort_key",
    "split_module",
    "summand_count",
]
