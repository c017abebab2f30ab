"""Distinguished modules, projective covers and minimal projective presentations.

A sum of indecomposable projectives ``P_{i1} + ... + P_{ik}`` has, at vertex
``v``, the basis ``(k, b)`` with ``b`` running over basis paths from ``i_k`` to
``v``. Maps between such sums are written as path matrices: entry ``x[l, k]``
lies in ``e_{j_l} A e_{i_k}`` and the map sends ``q`` in summand ``k`` to
``x[l, k] * q`` in summand ``l``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..algebra import BoundQuiverAlgebra
from ..errors import NotProjectiveError
from ..linalg import exact
from .representation import (
    Morphism,
    Representation,
    _same_algebra,
    hom_space,
    identity_morphism,
    kernel,
    quotient,
    submodule,
)

logger = logging.getLogger(__name__)

Layout = dict[str, list[tuple[int, int]]]


def projective_layout(algebra: BoundQuiverAlgebra, generators: Sequence[str]) -> Layout:
    return {
        v: [(k, b) for k, g in enumerate(generators) for b in algebra.basis_between(g, v)]
        for v in algebra.vertices
    }


def injective_layout(algebra: BoundQuiverAlgebra, generators: Sequence[str]) -> Layout:
    return {
        v: [(k, b) for k, g in enumerate(generators) for b in algebra.basis_between(v, g)]
        for v in algebra.vertices
    }


def projective_module(algebra: BoundQuiverAlgebra, generators: Sequence[str]) -> Representation:
    generators = tuple(generators)
    unknown = set(generators) - set(algebra.vertices)
    if unknown:
        raise ValueError(f"Unknown vertices {sorted(unknown)}")
    layout = projective_layout(algebra, generators)
    position = {v: {key: i for i, key in enumerate(keys)} for v, keys in layout.items()}
    maps = {}
    for arrow in algebra.quiver.arrows:
        mat = exact.zeros(len(layout[arrow.target]), len(layout[arrow.source]))
        action = algebra.right_arrow(arrow.name)
        for col, (k, b) in enumerate(layout[arrow.source]):
            for idx in np.nonzero(action[:, b])[0]:
                mat[position[arrow.target][(k, int(idx))], col] = action[idx, b]
        maps[arrow.name] = mat
    dims = tuple(len(layout[v]) for v in algebra.vertices)
    return Representation(algebra, dims, maps, generators=generators)


def injective_module(algebra: BoundQuiverAlgebra, generators: Sequence[str]) -> Representation:
    """``D(A e_g)`` summed over ``generators``, on the dual basis of paths ending at ``g``."""
    layout = injective_layout(algebra, generators)
    position = {v: {key: i for i, key in enumerate(keys)} for v, keys in layout.items()}
    table = algebra.right_multiplication
    maps = {}
    for arrow in algebra.quiver.arrows:
        element = algebra.path_element(arrow.source, (arrow.name,))
        mat = exact.zeros(len(layout[arrow.target]), len(layout[arrow.source]))
        for row, (k, r) in enumerate(layout[arrow.target]):
            # coordinates of arrow * r
            product = np.mod(table[r] @ element, algebra.p)
            for idx in np.nonzero(product)[0]:
                col = position[arrow.source].get((k, int(idx)))
                if col is not None:
                    mat[row, col] = product[idx]
        maps[arrow.name] = mat
    dims = tuple(len(layout[v]) for v in algebra.vertices)
    return Representation(algebra, dims, maps)


def simple_module(algebra: BoundQuiverAlgebra, vertex: str) -> Representation:
    dims = tuple(1 if v == vertex else 0 for v in algebra.vertices)
    if vertex not in algebra.vertices:
        raise ValueError(f"Unknown vertex {vertex!r}")
    return Representation(algebra, dims)


def regular_module(algebra: BoundQuiverAlgebra) -> Representation:
    return projective_module(algebra, algebra.vertices)


def generator_column(module: Representation, k: int) -> tuple[str, int]:
    """Vertex and column of the idempotent generating summand ``k`` of a typed projective."""
    gens = _generators(module)
    vertex = gens[k]
    idem = module.algebra.basis_between(vertex, vertex)[0]
    layout = projective_layout(module.algebra, gens)
    return vertex, layout[vertex].index((k, idem))


def _generators(module: Representation) -> tuple[str, ...]:
    if module.generators is None:
        raise NotProjectiveError(f"{module!r} is not given as a sum of indecomposable projectives")
    return module.generators


def projective_map(
    algebra: BoundQuiverAlgebra,
    source_gens: Sequence[str],
    target_gens: Sequence[str],
    entries: np.ndarray,
    *,
    source: Representation | None = None,
    target: Representation | None = None,
) -> Morphism:
    source_gens, target_gens = tuple(source_gens), tuple(target_gens)
    source = source if source is not None else projective_module(algebra, source_gens)
    target = target if target is not None else projective_module(algebra, target_gens)
    entries = np.asarray(entries, dtype=np.int64).reshape(len(target_gens), len(source_gens), algebra.dim)
    table = algebra.right_multiplication
    src_layout = projective_layout(algebra, source_gens)
    tgt_layout = projective_layout(algebra, target_gens)
    maps = []
    for v in algebra.vertices:
        position = {key: i for i, key in enumerate(tgt_layout[v])}
        mat = exact.zeros(len(tgt_layout[v]), len(src_layout[v]))
        for col, (k, q) in enumerate(src_layout[v]):
            for l in range(len(target_gens)):
                x = entries[l, k]
                if not x.any():
                    continue
                # coordinates of x * q
                product = np.mod(table[q] @ x, algebra.p)
                for idx in np.nonzero(product)[0]:
                    row = position[(l, int(idx))]
                    mat[row, col] = (mat[row, col] + product[idx]) % algebra.p
        maps.append(mat)
    return Morphism(source, target, tuple(maps))


def path_matrix(f: Morphism) -> np.ndarray:
    """Entries ``x[l, k]`` of a map between typed sums of indecomposable projectives."""
    src_gens = _generators(f.source)
    tgt_gens = _generators(f.target)
    alg = f.source.algebra
    entries = np.zeros((len(tgt_gens), len(src_gens), alg.dim), dtype=np.int64)
    tgt_layout = projective_layout(alg, tgt_gens)
    for k in range(len(src_gens)):
        vertex, col = generator_column(f.source, k)
        column = f.at(vertex)[:, col]
        for row, (l, r) in enumerate(tgt_layout[vertex]):
            entries[l, k, r] = column[row]
    return entries


@dataclass(frozen=True, eq=False)
class RadicalTop:
    radical: Representation
    inclusion: Morphism
    top: Representation
    projection: Morphism


def radical_bases(module: Representation) -> list[np.ndarray]:
    bases = []
    p = module.p
    for v in module.algebra.vertices:
        incoming = [module.maps[a.name] for a in module.algebra.quiver.arrows_into(v)]
        if incoming:
            bases.append(exact.column_space(np.concatenate(incoming, axis=1), p))
        else:
            bases.append(exact.zeros(module.dim_at(v), 0))
    return bases


def radical_top(module: Representation) -> RadicalTop:
    bases = radical_bases(module)
    rad, inclusion = submodule(module, bases)
    top, projection = quotient(module, bases)
    return RadicalTop(rad, inclusion, top, projection)


def top_multiplicities(module: Representation) -> tuple[int, ...]:
    return tuple(
        module.dims[i] - basis.shape[1] for i, basis in enumerate(radical_bases(module))
    )


def projective_cover(module: Representation) -> tuple[Representation, Morphism]:
    """The projective cover ``P0 -> module``, with ``P0`` typed by its generators."""
    alg = module.algebra
    p = alg.p
    generators: list[str] = []
    vectors: list[np.ndarray] = []
    for v, rad in zip(alg.vertices, radical_bases(module)):
        d = module.dim_at(v)
        for idx in exact.complement(rad, d, p):
            generators.append(v)
            vec = np.zeros(d, dtype=np.int64)
            vec[idx] = 1
            vectors.append(vec)
    cover_source = projective_module(alg, generators)
    layout = projective_layout(alg, generators)
    maps = []
    for v in alg.vertices:
        mat = exact.zeros(module.dim_at(v), len(layout[v]))
        for col, (k, q) in enumerate(layout[v]):
            mat[:, col] = exact.matmul(module.basis_action(q), vectors[k].reshape(-1, 1), p).ravel()
        maps.append(mat)
    return cover_source, Morphism(cover_source, module, tuple(maps))


@dataclass(frozen=True, eq=False)
class ProjectivePresentation:
    """``p1 --sigma--> p0 --cover--> module -> 0`` with both projective covers minimal."""

    module: Representation
    p1: Representation
    p0: Representation
    sigma: Morphism
    cover: Morphism

    @property
    def entries(self) -> np.ndarray:
        return path_matrix(self.sigma)


def min_proj_presentation(module: Representation) -> ProjectivePresentation:
    p0, cover = projective_cover(module)
    syzygy, inclusion = kernel(cover)
    p1, syzygy_cover = projective_cover(syzygy)
    sigma = inclusion.compose(syzygy_cover)
    return ProjectivePresentation(module=module, p1=p1, p0=p0, sigma=sigma, cover=cover)


def is_projective(module: Representation) -> bool:
    alg = module.algebra
    tops = top_multiplicities(module)
    cover_dim = sum(m * len(alg.basis_from(v)) for v, m in zip(alg.vertices, tops))
    return cover_dim == module.total_dim


def proj_dim_le_one(module: Representation) -> bool:
    _, cover = projective_cover(module)
    syzygy, _ = kernel(cover)
    return is_projective(syzygy)


def as_typed_projective(module: Representation) -> tuple[Representation, Morphism]:
    """A typed sum of indecomposable projectives with an isomorphism onto ``module``."""
    if module.generators is not None:
        return module, identity_morphism(module)
    p0, cover = projective_cover(module)
    if p0.total_dim != module.total_dim:
        raise NotProjectiveError(f"{module!r} is not projective")
    return p0, cover


def gen_membership(module: Representation, generator: Representation) -> bool:
    """Whether ``module`` is a quotient of a finite sum of copies of ``generator``."""
    _same_algebra(module, generator)
    if module.is_zero():
        return True
    homs = hom_space(generator, module)
    if not homs:
        return False
    p = module.p
    for i, v in enumerate(module.algebra.vertices):
        d = module.dims[i]
        if d == 0:
            continue
        images = np.concatenate([h.maps[i] for h in homs], axis=1)
        if exact.rank(images, p) < d:
            return False
    return True


__all__ = [
    "ProjectivePresentation",
    "RadicalTop",
    "as_typed_projective",
    "gen_membership",
    "generator_column",
    "injective_layout",
    "injective_module",
    "is_projective",
    "min_proj_presentation",
    "path_matrix",
    "proj_dim_le_one",
    "projective_cover",
    "projective_layout",
    "projective_map",
    "radical_bases",
    "radical_top",
    "regular_module",
    "simple_module",
    "top_multiplicities",
]
