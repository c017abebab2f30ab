"""Triangular splits ``R = (Lambda 0; M Gamma)`` of a bound quiver algebra and ``- (x)_Gamma M``.

For a vertex partition ``A | B`` with no arrow from ``A`` to ``B``, ``Lambda``
is the corner at ``A``, ``Gamma`` the corner at ``B`` and ``M`` is spanned by
the basis paths from ``B`` to ``A``. For an indecomposable projective
``e_j Gamma`` the tensor product ``e_j Gamma (x) M`` is ``e_j M``, so ``Y (x) M``
is read off a projective presentation of ``Y``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ..algebra import BoundQuiverAlgebra
from ..errors import AlgebraMismatchError, NotAPartitionError, NotTriangularError, VerificationError
from ..linalg import exact
from ..modules import (
    Morphism,
    ProjectivePresentation,
    Representation,
    cokernel,
    is_projective,
    min_proj_presentation,
)
from ..modules.presentation import generator_column, projective_layout

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TriSplit:
    algebra: BoundQuiverAlgebra
    a_vertices: tuple[str, ...]
    b_vertices: tuple[str, ...]
    lam: BoundQuiverAlgebra
    gamma: BoundQuiverAlgebra
    m_basis: tuple[int, ...]
    # left_action[g] @ m = coordinates of basis[g] * m, for g in Gamma
    left_action: np.ndarray
    # right_action[l] @ m = coordinates of m * basis[l], for l in Lambda
    right_action: np.ndarray
    lam_embedding: np.ndarray
    gamma_embedding: np.ndarray

    @property
    def m_dim(self) -> int:
        return len(self.m_basis)

    @cached_property
    def m_position(self) -> dict[int, int]:
        return {idx: i for i, idx in enumerate(self.m_basis)}

    def m_path(self, local: int):
        return self.algebra.basis[self.m_basis[local]]

    def m_between(self, source: str, target: str) -> list[int]:
        return [i for i, idx in enumerate(self.m_basis)
                if self.algebra.basis[idx].source == source and self.algebra.basis[idx].target == target]

    def m_coordinates(self, element: np.ndarray) -> np.ndarray:
        return np.asarray(element, dtype=np.int64)[list(self.m_basis)] if self.m_basis else np.zeros(0, dtype=np.int64)

    def describe(self) -> dict:
        return {
            "A": list(self.a_vertices),
            "B": list(self.b_vertices),
            "dim_lambda": self.lam.dim,
            "dim_gamma": self.gamma.dim,
            "dim_M": self.m_dim,
            "M_basis": [self.m_path(i).describe() for i in range(self.m_dim)],
        }


def parse_split(text: str) -> tuple[list[str], list[str]]:
    """Read ``A=1,2;B=3,4,5``."""
    parts: dict[str, list[str]] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        key, sep, values = chunk.partition("=")
        if not sep or key.strip() not in {"A", "B"}:
            raise NotAPartitionError(f"Malformed split {text!r}; expected A=<vertices>;B=<vertices>")
        parts[key.strip()] = [v.strip() for v in values.split(",") if v.strip()]
    if set(parts) != {"A", "B"}:
        raise NotAPartitionError(f"Split {text!r} must name both A and B")
    return parts["A"], parts["B"]


def triangular_split(algebra: BoundQuiverAlgebra, a_vertices: Iterable[str], b_vertices: Iterable[str]) -> TriSplit:
    a_list, b_list = list(a_vertices), list(b_vertices)
    a_set, b_set = set(a_list), set(b_list)
    everything = set(algebra.vertices)
    if (
        len(a_set) != len(a_list)
        or len(b_set) != len(b_list)
        or a_set & b_set
        or a_set | b_set != everything
    ):
        raise NotAPartitionError(f"{sorted(a_set)} and {sorted(b_set)} do not partition {list(algebra.vertices)}")
    for arrow in algebra.quiver.arrows:
        if arrow.source in a_set and arrow.target in b_set:
            raise NotTriangularError(f"Arrow {arrow.name}: {arrow.source}->{arrow.target} runs from A to B")

    order = algebra.vertices
    a_vs = tuple(v for v in order if v in a_set)
    b_vs = tuple(v for v in order if v in b_set)
    lam = algebra.corner(a_vs)
    gamma = algebra.corner(b_vs)
    m_basis = tuple(
        i for i, path in enumerate(algebra.basis) if path.source in b_set and path.target in a_set
    )
    if algebra.dim != lam.dim + gamma.dim + len(m_basis):
        raise VerificationError(
            f"dim {algebra.dim} != {lam.dim} + {gamma.dim} + {len(m_basis)} for split {a_vs}|{b_vs}"
        )
    lam_embedding = algebra.embedding_from(lam)
    gamma_embedding = algebra.embedding_from(gamma)
    m = len(m_basis)
    left = np.zeros((gamma.dim, m, m), dtype=np.int64)
    right = np.zeros((lam.dim, m, m), dtype=np.int64)
    for j, idx in enumerate(m_basis):
        unit = algebra.unit(idx)
        for g in range(gamma.dim):
            left[g, :, j] = algebra.multiply(gamma_embedding[:, g], unit)[list(m_basis)]
        for l in range(lam.dim):
            right[l, :, j] = algebra.multiply(unit, lam_embedding[:, l])[list(m_basis)]
    split = TriSplit(
        algebra=algebra,
        a_vertices=a_vs,
        b_vertices=b_vs,
        lam=lam,
        gamma=gamma,
        m_basis=m_basis,
        left_action=left,
        right_action=right,
        lam_embedding=lam_embedding,
        gamma_embedding=gamma_embedding,
    )
    logger.info(
        "Split %s into Lambda (dim %d), Gamma (dim %d) and M (dim %d)",
        algebra.name, lam.dim, gamma.dim, m,
    )
    return split


def _arrow_index(algebra: BoundQuiverAlgebra, name: str) -> int:
    arrow = algebra.quiver.arrow(name)
    for idx in algebra.basis_between(arrow.source, arrow.target):
        if algebra.basis[idx].arrows == (name,):
            return idx
    raise ValueError(f"Arrow {name} is not a basis element of {algebra.name}")


def tensor_layout(split: TriSplit, generators: Sequence[str]) -> dict[str, list[tuple[int, int]]]:
    """Basis ``(k, m)`` of ``(sum_k e_{g_k} Gamma) (x) M`` at each Lambda vertex."""
    return {
        v: [(k, m) for k, g in enumerate(generators) for m in split.m_between(g, v)]
        for v in split.lam.vertices
    }


def tensor_projective(split: TriSplit, generators: Sequence[str]) -> Representation:
    lam = split.lam
    layout = tensor_layout(split, generators)
    position = {v: {key: i for i, key in enumerate(keys)} for v, keys in layout.items()}
    maps = {}
    for arrow in lam.quiver.arrows:
        action = split.right_action[_arrow_index(lam, arrow.name)]
        mat = exact.zeros(len(layout[arrow.target]), len(layout[arrow.source]))
        for col, (k, m) in enumerate(layout[arrow.source]):
            for idx in np.nonzero(action[:, m])[0]:
                mat[position[arrow.target][(k, int(idx))], col] = action[idx, m]
        maps[arrow.name] = mat
    return Representation(lam, tuple(len(layout[v]) for v in lam.vertices), maps)


def tensor_map(
    split: TriSplit,
    entries: np.ndarray,
    source_gens: Sequence[str],
    target_gens: Sequence[str],
    source: Representation,
    target: Representation,
) -> Morphism:
    """``F (x) M`` for the map ``F`` between projective Gamma-modules with path matrix ``entries``."""
    p = split.algebra.p
    src_layout = tensor_layout(split, source_gens)
    tgt_layout = tensor_layout(split, target_gens)
    maps = []
    for v in split.lam.vertices:
        position = {key: i for i, key in enumerate(tgt_layout[v])}
        mat = exact.zeros(len(tgt_layout[v]), len(src_layout[v]))
        for col, (k, m) in enumerate(src_layout[v]):
            for l in range(len(target_gens)):
                x = entries[l, k]
                if not x.any():
                    continue
                moved = np.mod(np.tensordot(x, split.left_action, axes=(0, 0))[:, m], p)
                for idx in np.nonzero(moved)[0]:
                    row = position[(l, int(idx))]
                    mat[row, col] = (mat[row, col] + moved[idx]) % p
        maps.append(mat)
    return Morphism(source, target, tuple(maps))


@dataclass(frozen=True, eq=False)
class TensorProduct:
    """``Y (x) M`` as the cokernel of ``sigma_Y (x) M``."""

    module: Representation
    projection: Morphism
    q0: Representation
    q1: Representation
    sigma: Morphism
    presentation: ProjectivePresentation

    def section(self) -> list[np.ndarray]:
        p = self.module.p
        return [exact.solve(m, exact.identity(m.shape[0]), p) for m in self.projection.maps]


def tensor_with_M(module: Representation, split: TriSplit) -> TensorProduct:
    if module.algebra is not split.gamma:
        raise AlgebraMismatchError(f"Expected a module over {split.gamma.name}, got {module.algebra.name}")
    presentation = min_proj_presentation(module)
    gens0, gens1 = presentation.p0.generators, presentation.p1.generators
    q0 = tensor_projective(split, gens0)
    q1 = tensor_projective(split, gens1)
    sigma = tensor_map(split, presentation.entries, gens1, gens0, q1, q0)
    result, projection = cokernel(sigma)
    return TensorProduct(result, projection, q0, q1, sigma, presentation)


def tensored_presentation_is_monic(module: Representation, split: TriSplit) -> bool:
    return tensor_with_M(module, split).sigma.is_injective()


def presentation_is_monic(module: Representation) -> bool:
    return min_proj_presentation(module).sigma.is_injective()


def _lift_through_cover(g: Morphism, target: ProjectivePresentation, source: ProjectivePresentation) -> np.ndarray:
    """Path matrix of a map ``P0 -> P0'`` lifting ``g`` through the two covers."""
    alg = g.source.algebra
    p = alg.p
    gens = source.p0.generators
    target_gens = target.p0.generators
    layout = projective_layout(alg, target_gens)
    entries = np.zeros((len(target_gens), len(gens), alg.dim), dtype=np.int64)
    for k in range(len(gens)):
        vertex, col = generator_column(source.p0, k)
        image = exact.matmul(g.at(vertex), source.cover.at(vertex)[:, col : col + 1], p)
        pre = exact.solve(target.cover.at(vertex), image, p)
        if pre is None:
            raise VerificationError("Projective cover is not onto")
        for row, (l, r) in enumerate(layout[vertex]):
            entries[l, k, r] = pre[row, 0]
    return entries


def tensor_morphism(g: Morphism, split: TriSplit) -> tuple[TensorProduct, TensorProduct, Morphism]:
    """``g (x) M`` between the tensor products of its source and target."""
    first = tensor_with_M(g.source, split)
    second = tensor_with_M(g.target, split)
    entries = _lift_through_cover(g, second.presentation, first.presentation)
    lifted = tensor_map(
        split,
        entries,
        first.presentation.p0.generators,
        second.presentation.p0.generators,
        first.q0,
        second.q0,
    )
    p = split.algebra.p
    maps = tuple(
        exact.chain([proj, lift, sec], p)
        for proj, lift, sec in zip(second.projection.maps, lifted.maps, first.section())
    )
    return first, second, Morphism(first.module, second.module, maps)


def left_module(split: TriSplit) -> Representation:
    """``_Gamma M`` as a right module over the opposite of Gamma."""
    gamma = split.gamma
    op = gamma.opposite()
    layout = {u: [m for m in range(split.m_dim) if split.m_path(m).source == u] for u in gamma.vertices}
    position = {u: {m: i for i, m in enumerate(ms)} for u, ms in layout.items()}
    maps = {}
    for arrow in gamma.quiver.arrows:
        # Gamma arrow u -> w acts from e_w M to e_u M; in the opposite quiver it runs w -> u
        action = split.left_action[_arrow_index(gamma, arrow.name)]
        mat = exact.zeros(len(layout[arrow.source]), len(layout[arrow.target]))
        for col, m in enumerate(layout[arrow.target]):
            for idx in np.nonzero(action[:, m])[0]:
                mat[position[arrow.source][int(idx)], col] = action[idx, m]
        maps[arrow.name] = mat
    return Representation(op, tuple(len(layout[u]) for u in op.vertices), maps)


def left_module_is_projective(split: TriSplit) -> bool:
    return is_projective(left_module(split))


def dual_left_module(split: TriSplit) -> Representation:
    """The k-dual of ``_Gamma M``, a right Gamma-module."""
    view = left_module(split)
    maps = {name: mat.T.copy() for name, mat in view.maps.items()}
    return Representation(split.gamma, view.dims, maps)


def right_module(split: TriSplit) -> Representation:
    """``M_Lambda`` as a right Lambda-module."""
    lam = split.lam
    layout = {v: [m for m in range(split.m_dim) if split.m_path(m).target == v] for v in lam.vertices}
    position = {v: {m: i for i, m in enumerate(ms)} for v, ms in layout.items()}
    maps = {}
    for arrow in lam.quiver.arrows:
        action = split.right_action[_arrow_index(lam, arrow.name)]
        mat = exact.zeros(len(layout[arrow.target]), len(layout[arrow.source]))
        for col, m in enumerate(layout[arrow.source]):
            for idx in np.nonzero(action[:, m])[0]:
                mat[position[arrow.target][int(idx)], col] = action[idx, m]
        maps[arrow.name] = mat
    return Representation(lam, tuple(len(layout[v]) for v in lam.vertices), maps)


__all__ = [
    "TensorProduct",
    "TriSplit",
    "dual_left_module",
    "left_module",
    "left_module_is_projective",
    "parse_split",
    "presentation_is_monic",
    "right_module",
    "tensor_layout",
    "tensor_map",
    "tensor_morphism",
    "tensor_projective",
    "tensor_with_M",
    "tensored_presentation_is_monic",
    "triangular_split",
]
