"""Right modules over a bound quiver algebra, given as quiver representations.

For an arrow ``a: i -> j`` a representation stores a ``(dim_j, dim_i)`` matrix;
a path ``a1.a2...an`` acts as ``M_an @ ... @ M_a1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from ..algebra import BoundQuiverAlgebra
from ..errors import AlgebraMismatchError
from ..linalg import exact

logger = logging.getLogger(__name__)


def _fitted(mat, shape: tuple[int, int], p: int, where: str) -> np.ndarray:
    arr = np.asarray(mat, dtype=np.int64)
    # empty blocks may come in any empty shape
    if arr.size and arr.shape != shape:
        raise ValueError(f"Matrix for {where} has shape {arr.shape}, expected {shape}")
    return exact.as_matrix(arr, p, shape)


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: BoundQuiverAlgebra
    dims: tuple[int, ...]
    maps: Mapping[str, np.ndarray] = field(default_factory=dict)
    # vertices of the indecomposable projectives, when built as a sum of them
    generators: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        alg = self.algebra
        if len(self.dims) != alg.n_vertices:
            raise ValueError(f"Expected {alg.n_vertices} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise ValueError(f"Negative dimension in {self.dims}")
        maps: dict[str, np.ndarray] = {}
        for arrow in alg.quiver.arrows:
            shape = (self.dim_at(arrow.target), self.dim_at(arrow.source))
            mat = self.maps.get(arrow.name)
            if mat is None:
                mat = exact.zeros(*shape)
            mat = _fitted(mat, shape, alg.p, f"arrow {arrow.name}")
            maps[arrow.name] = mat
        unknown = set(self.maps) - set(maps)
        if unknown:
            raise ValueError(f"Maps given for unknown arrows {sorted(unknown)}")
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "maps", maps)

    def __repr__(self) -> str:
        return f"Representation({self.algebra.name!r}, dims={self.dims})"

    @property
    def p(self) -> int:
        return self.algebra.p

    def dim_at(self, vertex: str) -> int:
        return self.dims[self.algebra.quiver.vertex_index[vertex]]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def support(self) -> tuple[str, ...]:
        return tuple(v for v, d in zip(self.algebra.vertices, self.dims) if d)

    def path_action(self, source: str, arrows: Sequence[str]) -> np.ndarray:
        """Matrix of the path starting at ``source``, from ``X_source`` to ``X_end``."""
        result = exact.identity(self.dim_at(source))
        for name in arrows:
            result = exact.matmul(self.maps[name], result, self.p)
        return result

    def basis_action(self, index: int) -> np.ndarray:
        path = self.algebra.basis[index]
        return self.path_action(path.source, path.arrows)

    def element_action(self, element: np.ndarray, source: str, target: str) -> np.ndarray:
        out = exact.zeros(self.dim_at(target), self.dim_at(source))
        for idx in self.algebra.basis_between(source, target):
            coeff = int(element[idx])
            if coeff:
                out = np.mod(out + coeff * self.basis_action(idx), self.p)
        return out

    def relation_violations(self) -> list[str]:
        bad = []
        for rel in self.algebra.relations:
            source, target = rel.validate(self.algebra.quiver)
            total = exact.zeros(self.dim_at(target), self.dim_at(source))
            for coeff, path in rel.terms:
                total = np.mod(total + coeff * self.path_action(source, path), self.p)
            if total.any():
                bad.append(rel.describe())
        return bad

    def validate(self) -> "Representation":
        bad = self.relation_violations()
        if bad:
            raise ValueError(f"Relations not satisfied: {bad}")
        return self


@dataclass(frozen=True, eq=False)
class Morphism:
    source: Representation
    target: Representation
    maps: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        _same_algebra(self.source, self.target)
        p = self.source.p
        fixed = []
        for v, mat in zip(self.source.algebra.vertices, self.maps):
            shape = (self.target.dim_at(v), self.source.dim_at(v))
            fixed.append(_fitted(mat, shape, p, f"vertex {v}"))
        if len(fixed) != self.source.algebra.n_vertices:
            raise ValueError("Morphism needs one matrix per vertex")
        object.__setattr__(self, "maps", tuple(fixed))

    @property
    def p(self) -> int:
        return self.source.p

    def at(self, vertex: str) -> np.ndarray:
        return self.maps[self.source.algebra.quiver.vertex_index[vertex]]

    def compose(self, first: "Morphism") -> "Morphism":
        """``self`` after ``first``."""
        if first.target is not self.source:
            raise ValueError("Morphisms do not compose")
        maps = tuple(exact.matmul(g, f, self.p) for g, f in zip(self.maps, first.maps))
        return Morphism(first.source, self.target, maps)

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target, tuple(np.mod(a + b, self.p) for a, b in zip(self.maps, other.maps)))

    def scaled(self, scalar: int) -> "Morphism":
        return Morphism(self.source, self.target, tuple(np.mod(a * int(scalar), self.p) for a in self.maps))

    def vector(self) -> np.ndarray:
        if not self.maps:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([m.ravel() for m in self.maps])

    def is_zero(self) -> bool:
        return not any(m.any() for m in self.maps)

    def is_injective(self) -> bool:
        return all(exact.rank(m, self.p) == m.shape[1] for m in self.maps)

    def is_surjective(self) -> bool:
        return all(exact.rank(m, self.p) == m.shape[0] for m in self.maps)

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def inverse(self) -> "Morphism":
        return Morphism(self.target, self.source, tuple(exact.inverse(m, self.p) for m in self.maps))

    def intertwines(self) -> bool:
        alg = self.source.algebra
        idx = alg.quiver.vertex_index
        for arrow in alg.quiver.arrows:
            left = exact.matmul(self.target.maps[arrow.name], self.maps[idx[arrow.source]], self.p)
            right = exact.matmul(self.maps[idx[arrow.target]], self.source.maps[arrow.name], self.p)
            if not np.array_equal(left, right):
                return False
        return True


def _same_algebra(*modules: Representation) -> BoundQuiverAlgebra:
    alg = modules[0].algebra
    for other in modules[1:]:
        if other.algebra is not alg:
            raise AlgebraMismatchError(
                f"Modules live over different algebras: {alg.name} and {other.algebra.name}"
            )
    return alg


def zero_module(algebra: BoundQuiverAlgebra) -> Representation:
    return Representation(algebra, (0,) * algebra.n_vertices, generators=())


def zero_morphism(source: Representation, target: Representation) -> Morphism:
    alg = _same_algebra(source, target)
    return Morphism(
        source, target, tuple(exact.zeros(target.dim_at(v), source.dim_at(v)) for v in alg.vertices)
    )


def identity_morphism(module: Representation) -> Morphism:
    return Morphism(module, module, tuple(exact.identity(d) for d in module.dims))


def morphism_from_vector(source: Representation, target: Representation, vec: np.ndarray) -> Morphism:
    maps = []
    offset = 0
    for v in source.algebra.vertices:
        rows, cols = target.dim_at(v), source.dim_at(v)
        maps.append(np.asarray(vec[offset : offset + rows * cols]).reshape(rows, cols))
        offset += rows * cols
    return Morphism(source, target, tuple(maps))


def hom_space(source: Representation, target: Representation) -> list[Morphism]:
    """A basis of Hom(source, target), read off the kernel of the intertwining system."""
    alg = _same_algebra(source, target)
    p = alg.p
    offsets: dict[str, int] = {}
    n = 0
    for v in alg.vertices:
        offsets[v] = n
        n += target.dim_at(v) * source.dim_at(v)
    if n == 0:
        return []
    blocks = []
    for arrow in alg.quiver.arrows:
        s, t = arrow.source, arrow.target
        xs, yt = source.dim_at(s), target.dim_at(t)
        rows = yt * xs
        if rows == 0:
            continue
        block = exact.zeros(rows, n)
        ys, xt = target.dim_at(s), source.dim_at(t)
        # Y_a F_s - F_t X_a, both vectorised row-major
        left = np.kron(target.maps[arrow.name], exact.identity(xs))
        right = np.kron(exact.identity(yt), source.maps[arrow.name].T)
        block[:, offsets[s] : offsets[s] + ys * xs] += left
        block[:, offsets[t] : offsets[t] + yt * xt] -= right
        blocks.append(np.mod(block, p))
    system = np.concatenate(blocks, axis=0) if blocks else exact.zeros(0, n)
    basis = exact.kernel(system, p)
    return [morphism_from_vector(source, target, basis[:, j]) for j in range(basis.shape[1])]


def submodule(module: Representation, bases: Sequence[np.ndarray]) -> tuple[Representation, Morphism]:
    """The submodule spanned vertexwise by the columns of ``bases`` and its inclusion."""
    alg = module.algebra
    p = alg.p
    idx = alg.quiver.vertex_index
    bases = [np.asarray(b, dtype=np.int64) for b in bases]
    maps = {}
    for arrow in alg.quiver.arrows:
        bs, bt = bases[idx[arrow.source]], bases[idx[arrow.target]]
        moved = exact.matmul(module.maps[arrow.name], bs, p)
        induced = exact.solve(bt, moved, p)
        if induced is None:
            raise ValueError(f"Subspaces are not closed under arrow {arrow.name}")
        maps[arrow.name] = induced
    sub = Representation(alg, tuple(b.shape[1] for b in bases), maps)
    return sub, Morphism(sub, module, tuple(bases))


def quotient(module: Representation, bases: Sequence[np.ndarray]) -> tuple[Representation, Morphism]:
    """The quotient by the submodule spanned by ``bases`` and the projection onto it."""
    alg = module.algebra
    p = alg.p
    idx = alg.quiver.vertex_index
    projections = []
    sections = []
    for basis in bases:
        basis = np.asarray(basis, dtype=np.int64)
        proj = exact.left_kernel(basis, p)
        projections.append(proj)
        sections.append(exact.solve(proj, exact.identity(proj.shape[0]), p))
    maps = {}
    for arrow in alg.quiver.arrows:
        s, t = idx[arrow.source], idx[arrow.target]
        maps[arrow.name] = exact.chain([projections[t], module.maps[arrow.name], sections[s]], p)
    quo = Representation(alg, tuple(proj.shape[0] for proj in projections), maps)
    return quo, Morphism(module, quo, tuple(projections))


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    return submodule(f.source, [exact.kernel(m, f.p) for m in f.maps])


def image(f: Morphism) -> tuple[Representation, Morphism]:
    return submodule(f.target, [exact.column_space(m, f.p) for m in f.maps])


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    return quotient(f.target, [exact.column_space(m, f.p) for m in f.maps])


def direct_sum(modules: Iterable[Representation], algebra: Optional[BoundQuiverAlgebra] = None) -> Representation:
    modules = list(modules)
    if not modules:
        if algebra is None:
            raise ValueError("An empty direct sum needs its algebra")
        return zero_module(algebra)
    alg = _same_algebra(*modules)
    if len(modules) == 1:
        return modules[0]
    dims = tuple(sum(col) for col in zip(*(m.dims for m in modules)))
    maps = {
        arrow.name: exact.block_diagonal([m.maps[arrow.name] for m in modules])
        for arrow in alg.quiver.arrows
    }
    gens = None
    if all(m.generators is not None for m in modules):
        gens = tuple(g for m in modules for g in m.generators)
    return Representation(alg, dims, maps, generators=gens)


def restrict(module: Representation, corner: BoundQuiverAlgebra) -> Representation:
    """Restriction to a full-subquiver corner algebra of ``module.algebra``."""
    dims = tuple(module.dim_at(v) for v in corner.vertices)
    maps = {a.name: module.maps[a.name] for a in corner.quiver.arrows}
    return Representation(corner, dims, maps)


def extend_by_zero(module: Representation, algebra: BoundQuiverAlgebra) -> Representation:
    """The module seen over a larger algebra, zero at the vertices outside its own quiver."""
    own = set(module.algebra.vertices)
    dims = tuple(module.dim_at(v) if v in own else 0 for v in algebra.vertices)
    maps = {
        a.name: module.maps[a.name]
        for a in algebra.quiver.arrows
        if a.source in own and a.target in own
    }
    return Representation(algebra, dims, maps)


def socle_dims(module: Representation) -> tuple[int, ...]:
    out = []
    for v in module.algebra.vertices:
        outgoing = [module.maps[a.name] for a in module.algebra.quiver.arrows_from(v)]
        if not outgoing or module.dim_at(v) == 0:
            out.append(module.dim_at(v))
            continue
        stacked = np.concatenate(outgoing, axis=0)
        out.append(module.dim_at(v) - exact.rank(stacked, module.p))
    return tuple(out)


__all__ = [
    "Morphism",
    "Representation",
    "cokernel",
    "direct_sum",
    "extend_by_zero",
    "hom_space",
    "identity_morphism",
    "image",
    "kernel",
    "morphism_from_vector",
    "quotient",
    "restrict",
    "socle_dims",
    "submodule",
    "zero_module",
    "zero_morphism",
]
