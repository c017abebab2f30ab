"""Triples ``(X, Y)_f`` over a triangular split and the lifted module ``(X, 0) + (Y (x) M, Y)``.

Lifting criteria
----------------
* support tau-tilting: ``X`` and ``Y`` support tau-tilting, ``Hom(Y (x) M, tau X) = 0``
  and ``Y (x) M`` vanishes where ``X`` does;
* tau-rigid: ``X`` and ``Y`` tau-rigid and ``Hom(Y (x) M, tau X) = 0``;
* silting: ``X`` and ``Y`` support tau-tilting and ``Y (x) M`` in ``Gen X``;
* tilting: ``lift(X, Y)`` tilting over ``R``, cross-checked against the
  componentwise conditions when ``_Gamma M`` is projective.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import AlgebraMismatchError, VerificationError
from ..linalg import exact
from ..modules import (
    Morphism,
    Representation,
    cokernel,
    decompose,
    direct_sum,
    extend_by_zero,
    gen_membership,
    hom_space,
    min_proj_presentation,
    proj_dim_le_one,
    projective_map,
    registry_for,
    restrict,
    summand_count,
)
from ..modules.presentation import generator_column, projective_layout
from ..tilting import (
    SttPair,
    is_support_tau_tilting,
    is_tau_rigid,
    is_tilting,
    max_annihilating_idempotent,
    tau,
)
from .split import TensorProduct, TriSplit, left_module_is_projective, tensor_layout, tensor_with_M

logger = logging.getLogger(__name__)


def _check(module: Representation, algebra, what: str) -> None:
    if module.algebra is not algebra:
        raise AlgebraMismatchError(f"{what} must be a module over {algebra.name}, got {module.algebra.name}")


def _gamma_entries_in_r(split: TriSplit, entries: np.ndarray) -> np.ndarray:
    if entries.size == 0:
        return np.zeros(entries.shape[:2] + (split.algebra.dim,), dtype=np.int64)
    return np.mod(np.tensordot(entries, split.gamma_embedding.T, axes=(2, 0)), split.algebra.p)


def lift_of_gamma_module(module: Representation, split: TriSplit) -> Representation:
    """``(Y (x) M, Y)`` over ``R``, as the cokernel of the ``R``-projective map induced by ``sigma_Y``."""
    _check(module, split.gamma, "Y")
    presentation = min_proj_presentation(module)
    entries = _gamma_entries_in_r(split, presentation.entries)
    induced = projective_map(split.algebra, presentation.p1.generators, presentation.p0.generators, entries)
    result, _ = cokernel(induced)
    return result


def lift(x: Representation, y: Representation, split: TriSplit) -> Representation:
    _check(x, split.lam, "X")
    _check(y, split.gamma, "Y")
    return direct_sum([extend_by_zero(x, split.algebra), lift_of_gamma_module(y, split)])


@dataclass(frozen=True, eq=False)
class Triple:
    x: Representation
    y: Representation
    f: Morphism
    tensor: TensorProduct


def rep_to_triple(module: Representation, split: TriSplit) -> Triple:
    _check(module, split.algebra, "Z")
    p = split.algebra.p
    x = restrict(module, split.lam)
    y = restrict(module, split.gamma)
    tensor = tensor_with_M(y, split)
    cover = tensor.presentation.cover
    gens = tensor.presentation.p0.generators
    generators = []
    for k in range(len(gens)):
        vertex, col = generator_column(tensor.presentation.p0, k)
        generators.append(cover.at(vertex)[:, col : col + 1])
    layout = tensor_layout(split, gens)
    sections = tensor.section()
    maps = []
    for i, v in enumerate(split.lam.vertices):
        phi = exact.zeros(module.dim_at(v), len(layout[v]))
        for col, (k, m) in enumerate(layout[v]):
            phi[:, col] = exact.matmul(module.basis_action(split.m_basis[m]), generators[k], p).ravel()
        maps.append(exact.matmul(phi, sections[i], p))
    return Triple(x, y, Morphism(tensor.module, x, tuple(maps)), tensor)


def triple_to_rep(triple: Triple, split: TriSplit) -> Representation:
    alg = split.algebra
    p = alg.p
    x, y, tensor = triple.x, triple.y, triple.tensor
    cover = tensor.presentation.cover
    gens = tensor.presentation.p0.generators
    gamma_layout = projective_layout(split.gamma, gens)
    t_layout = tensor_layout(split, gens)
    lam_names = {a.name for a in split.lam.quiver.arrows}
    gamma_names = {a.name for a in split.gamma.quiver.arrows}
    maps = {}
    for arrow in alg.quiver.arrows:
        if arrow.name in lam_names:
            maps[arrow.name] = x.maps[arrow.name]
            continue
        if arrow.name in gamma_names:
            maps[arrow.name] = y.maps[arrow.name]
            continue
        # cross arrow u (B) -> v (A): y in Y_u goes to f(pi(z (x) arrow)) with cover(z) = y
        u, v = arrow.source, arrow.target
        action = alg.right_arrow(arrow.name)
        position = {key: i for i, key in enumerate(t_layout[v])}
        pre = exact.solve(cover.at(u), exact.identity(y.dim_at(u)), p)
        if pre is None:
            raise VerificationError("Projective cover is not onto")
        moved = exact.zeros(len(t_layout[v]), y.dim_at(u))
        for row, (k, q) in enumerate(gamma_layout[u]):
            image = np.mod(action @ split.gamma_embedding[:, q], p)
            for idx in np.nonzero(image)[0]:
                key = (k, split.m_position[int(idx)])
                moved[position[key], :] = np.mod(moved[position[key], :] + image[idx] * pre[row, :], p)
        maps[arrow.name] = exact.chain([triple.f.at(v), tensor.projection.at(v), moved], p)
    return _assemble(alg, x, y, maps)


def _assemble(alg, x: Representation, y: Representation, maps: dict) -> Representation:
    dims = []
    for v in alg.vertices:
        dims.append(x.dim_at(v) if v in x.algebra.vertices else y.dim_at(v))
    return Representation(alg, tuple(dims), maps)


def triple_key(module: Representation, split: TriSplit) -> tuple:
    a_dims = tuple(module.dim_at(v) for v in split.a_vertices)
    b_dims = tuple(module.dim_at(v) for v in split.b_vertices)
    return (1 if any(b_dims) else 0, tuple(-d for d in b_dims), tuple(-d for d in a_dims))


def triple_labels(module: Representation, split: TriSplit) -> list[str]:
    """One ``(a,b)`` token per indecomposable summand, in triple order."""
    lam_names = registry_for(split.lam)
    gamma_names = registry_for(split.gamma)
    keyed = []
    for piece, mult in decompose(module):
        a = lam_names.label_sum(restrict(piece, split.lam))
        b = gamma_names.label_sum(restrict(piece, split.gamma))
        token = f"({a},{b})"
        keyed.extend([(triple_key(piece, split), token)] * mult)
    keyed.sort()
    return [token for _, token in keyed]


def triple_label(module: Representation, split: TriSplit) -> str:
    return "".join(triple_labels(module, split)) or "0"


def parse_triple_label(label: str) -> list[str]:
    """Tokens of a triple label such as ``(P1,0)(0,P5)``; ``"0"`` has none."""
    if label == "0":
        return []
    tokens, depth, start = [], 0, 0
    for i, ch in enumerate(label):
        if ch == "(":
            if depth == 0:
                start = i
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                tokens.append(label[start : i + 1])
    return tokens


@dataclass(frozen=True)
class LiftVerdict:
    verdict: bool
    failed: tuple[int, ...] = ()
    x_pair: Optional[SttPair] = field(default=None, compare=False)
    y_pair: Optional[SttPair] = field(default=None, compare=False)
    tensor: Optional[Representation] = field(default=None, compare=False)

    @property
    def tensor_label(self) -> str:
        if self.tensor is None:
            return ""
        return registry_for(self.tensor.algebra).label_sum(self.tensor)


def check_lift_stt(x: Representation, y: Representation, split: TriSplit) -> LiftVerdict:
    _check(x, split.lam, "X")
    _check(y, split.gamma, "Y")
    x_pair = is_support_tau_tilting(x)
    y_pair = is_support_tau_tilting(y)
    tensored = tensor_with_M(y, split).module
    failed = []
    if x_pair is None:
        failed.append(1)
    if y_pair is None:
        failed.append(2)
    if hom_space(tensored, tau(x)):
        failed.append(3)
    if any(tensored.dim_at(v) for v in max_annihilating_idempotent(x)):
        failed.append(4)
    return LiftVerdict(
        verdict=not failed,
        failed=tuple(failed),
        x_pair=x_pair,
        y_pair=y_pair,
        tensor=tensored,
    )


def check_lift_tau_rigid(x: Representation, y: Representation, split: TriSplit) -> bool:
    tensored = tensor_with_M(y, split).module
    return is_tau_rigid(x) and is_tau_rigid(y) and not hom_space(tensored, tau(x))


def check_lift_silting(x: Representation, y: Representation, split: TriSplit) -> bool:
    if is_support_tau_tilting(x) is None or is_support_tau_tilting(y) is None:
        return False
    return gen_membership(tensor_with_M(y, split).module, x)


def check_lift_tilting(x: Representation, y: Representation, split: TriSplit) -> bool:
    """Tilting verdict of the lift over ``R``.

    When ``_Gamma M`` is projective the componentwise criterion and the
    generation route are evaluated too and both must agree.
    """
    direct = is_tilting(lift(x, y, split))
    if left_module_is_projective(split):
        tensored = tensor_with_M(y, split).module
        componentwise = is_tilting(x) and is_tilting(y) and not hom_space(tensored, tau(x))
        by_generation = check_lift_tilting_by_generation(x, y, split)
        if not direct == componentwise == by_generation:
            raise VerificationError(
                f"Tilting criteria disagree for X dims {x.dims}, Y dims {y.dims}: "
                f"direct {direct}, componentwise {componentwise}, by generation {by_generation}"
            )
    return direct


def check_lift_tilting_by_generation(x: Representation, y: Representation, split: TriSplit) -> bool:
    """Both tilting, ``Y (x) M`` in ``Gen X`` and the lift of projective dimension at most one."""
    if not (is_tilting(x) and is_tilting(y)):
        return False
    if not gen_membership(tensor_with_M(y, split).module, x):
        return False
    return proj_dim_le_one(lift(x, y, split))


def assembled_presentation(x: Representation, y: Representation, split: TriSplit) -> Morphism:
    """Block presentation of ``lift(x, y)``: ``sigma_X`` extended by zero beside the map induced by ``sigma_Y``."""
    alg = split.algebra
    px = min_proj_presentation(x)
    py = min_proj_presentation(y)
    x_entries = px.entries
    x_in_r = (
        np.mod(np.tensordot(x_entries, split.lam_embedding.T, axes=(2, 0)), alg.p)
        if x_entries.size
        else np.zeros(x_entries.shape[:2] + (alg.dim,), dtype=np.int64)
    )
    y_in_r = _gamma_entries_in_r(split, py.entries)
    src = px.p1.generators + py.p1.generators
    tgt = px.p0.generators + py.p0.generators
    entries = np.zeros((len(tgt), len(src), alg.dim), dtype=np.int64)
    entries[: len(px.p0.generators), : len(px.p1.generators)] = x_in_r
    entries[len(px.p0.generators) :, len(px.p1.generators) :] = y_in_r
    return projective_map(alg, src, tgt, entries)


def lift_summand_count(x: Representation, y: Representation, split: TriSplit) -> tuple[int, int]:
    """``|lift(x, y)|`` and ``|x| + |y|``."""
    return summand_count(lift(x, y, split)), summand_count(x) + summand_count(y)


__all__ = [
    "LiftVerdict",
    "Triple",
    "assembled_presentation",
    "check_lift_silting",
    "check_lift_stt",
    "check_lift_tau_rigid",
    "check_lift_tilting",
    "check_lift_tilting_by_generation",
    "lift",
    "lift_of_gamma_module",
    "lift_summand_count",
    "parse_triple_label",
    "rep_to_triple",
    "triple_key",
    "triple_label",
    "triple_labels",
    "triple_to_rep",
]
