"""Nakayama functor, Auslander-Reiten translate and support tau-tilting pairs."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional

import numpy as np

from ..algebra import BoundQuiverAlgebra
from ..errors import NotProjectiveError, VerificationError
from ..linalg import exact
from ..modules import (
    Morphism,
    Representation,
    cokernel,
    direct_sum,
    hom_space,
    indecomposable_summands,
    injective_module,
    is_projective,
    kernel,
    min_proj_presentation,
    path_matrix,
    proj_dim_le_one,
    projective_map,
    projective_module,
    registry_for,
    sort_key,
)
from ..modules.presentation import as_typed_projective, injective_layout

logger = logging.getLogger(__name__)


def nakayama_of_projective_map(f: Morphism) -> Morphism:
    """``nu f`` between the corresponding sums of indecomposable injectives."""
    alg = f.source.algebra
    p = alg.p
    try:
        source, to_source = as_typed_projective(f.source)
        target, to_target = as_typed_projective(f.target)
    except NotProjectiveError as exc:
        raise NotProjectiveError(f"Nakayama functor needs projective endpoints: {exc}") from exc
    typed = to_target.inverse().compose(f.compose(to_source))
    entries = path_matrix(typed)
    src_gens, tgt_gens = source.generators, target.generators
    i_source = injective_module(alg, src_gens)
    i_target = injective_module(alg, tgt_gens)
    src_layout = injective_layout(alg, src_gens)
    tgt_layout = injective_layout(alg, tgt_gens)
    table = alg.right_multiplication
    # right multiplication by each entry, as a matrix on coordinates
    right = [
        [np.mod(np.tensordot(entries[l, k], table, axes=(0, 0)), p) for k in range(len(src_gens))]
        for l in range(len(tgt_gens))
    ]
    maps = []
    for v in alg.vertices:
        mat = exact.zeros(len(tgt_layout[v]), len(src_layout[v]))
        for row, (l, r) in enumerate(tgt_layout[v]):
            for col, (k, q) in enumerate(src_layout[v]):
                # coefficient of q in r * x[l, k]
                mat[row, col] = right[l][k][q, r]
        maps.append(mat)
    return Morphism(i_source, i_target, tuple(maps))


@lru_cache(maxsize=4096)
def tau(module: Representation) -> Representation:
    presentation = min_proj_presentation(module)
    translate, _ = kernel(nakayama_of_projective_map(presentation.sigma))
    return translate


def is_tau_rigid(module: Representation) -> bool:
    return not hom_space(module, tau(module))


def max_annihilating_idempotent(module: Representation) -> tuple[str, ...]:
    return tuple(v for v, d in zip(module.algebra.vertices, module.dims) if d == 0)


def transpose(module: Representation) -> Representation:
    """Auslander-Bridger transpose, a module over the opposite algebra."""
    alg = module.algebra
    op = alg.opposite()
    presentation = min_proj_presentation(module)
    entries = path_matrix(presentation.sigma)
    dual = np.zeros((entries.shape[1], entries.shape[0], op.dim), dtype=np.int64)
    for l in range(entries.shape[0]):
        for k in range(entries.shape[1]):
            if entries[l, k].any():
                dual[k, l] = alg.to_opposite(entries[l, k])
    star = projective_map(op, presentation.p0.generators, presentation.p1.generators, dual)
    result, _ = cokernel(star)
    return result


@dataclass(frozen=True, eq=False)
class SttPair:
    """A support tau-tilting pair ``(M, P)`` with ``P = e A`` for the ``support`` vertices."""

    algebra: BoundQuiverAlgebra
    summands: tuple[Representation, ...]
    support: tuple[str, ...]

    @cached_property
    def module(self) -> Representation:
        return direct_sum(self.summands, self.algebra)

    @cached_property
    def support_proj(self) -> Representation:
        return projective_module(self.algebra, self.support)

    @property
    def size(self) -> int:
        return len(self.summands) + len(self.support)

    @cached_property
    def summand_labels(self) -> tuple[str, ...]:
        registry = registry_for(self.algebra)
        named = [(sort_key(s), registry.label(s)) for s in self.summands]
        return tuple(name for _, name in sorted(named))

    @property
    def module_label(self) -> str:
        return "".join(self.summand_labels) or "0"

    @property
    def support_label(self) -> str:
        return "".join(f"P{v}" for v in self.support) or "0"

    @property
    def label(self) -> str:
        return f"({self.module_label},{self.support_label})"

    @property
    def key(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        return self.summand_labels, self.support

    def to_record(self) -> dict:
        return {
            "label": self.label,
            "module": self.module_label,
            "support": self.support_label,
            "summands": list(self.summand_labels),
            "dims": [list(s.dims) for s in self.summands],
        }


def make_pair(
    algebra: BoundQuiverAlgebra, summands: Iterable[Representation], support: Iterable[str]
) -> SttPair:
    ordered = sorted(summands, key=sort_key)
    index = algebra.quiver.vertex_index
    return SttPair(algebra, tuple(ordered), tuple(sorted(set(support), key=index.__getitem__)))


def is_support_tau_tilting(module: Representation) -> Optional[SttPair]:
    alg = module.algebra
    summands = indecomposable_summands(module)
    basic = direct_sum(summands, alg)
    if not is_tau_rigid(basic):
        return None
    support = max_annihilating_idempotent(basic)
    count = len(summands) + len(support)
    if count > alg.n_vertices:
        raise VerificationError(
            f"tau-rigid module with {len(summands)} summands and {len(support)} annihilated "
            f"vertices exceeds {alg.n_vertices}"
        )
    if count != alg.n_vertices:
        return None
    return make_pair(alg, summands, support)


def is_tilting(module: Representation) -> bool:
    pair = is_support_tau_tilting(module)
    return pair is not None and not pair.support and proj_dim_le_one(module)


def d_sigma_contains(sigma: Morphism, module: Representation) -> bool:
    """Whether ``Hom(sigma, module)`` is onto, i.e. every map ``P1 -> module`` factors through ``sigma``."""
    if not (is_projective(sigma.source) and is_projective(sigma.target)):
        raise NotProjectiveError("d_sigma_contains needs a map between projectives")
    from_p1 = hom_space(sigma.source, module)
    if not from_p1:
        return True
    from_p0 = hom_space(sigma.target, module)
    if not from_p0:
        return False
    images = np.stack([h.compose(sigma).vector() for h in from_p0], axis=1)
    return exact.rank(images, module.p) == len(from_p1)


__all__ = [
    "SttPair",
    "d_sigma_contains",
    "is_support_tau_tilting",
    "is_tau_rigid",
    "is_tilting",
    "make_pair",
    "max_annihilating_idempotent",
    "nakayama_of_projective_map",
    "tau",
    "transpose",
]
