"""Finite-dimensional bound quiver algebras kQ/I.

Paths are read left to right in diagram order: ``alpha.gamma`` first follows
``alpha`` and then ``gamma``. The quotient is computed degree by degree in
kQ/(I + J^(L+1)), growing L until every path of length L vanishes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from ..errors import CornerError, NotFiniteDimensionalError
from ..linalg import exact
from .quiver import Quiver, Relation

logger = logging.getLogger(__name__)

DEFAULT_MAX_PATH_LENGTH = 20

Path = tuple[str, tuple[str, ...]]


@dataclass(frozen=True)
class BasisPath:
    source: str
    target: str
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def describe(self) -> str:
        return ".".join(self.arrows) if self.arrows else f"e{self.source}"


def enumerate_paths(quiver: Quiver, max_length: int) -> list[Path]:
    """All paths of length at most ``max_length``, trivial paths included."""
    paths: list[Path] = [(v, ()) for v in quiver.vertices]
    frontier: list[tuple[str, tuple[str, ...], str]] = [(v, (), v) for v in quiver.vertices]
    for _ in range(max_length):
        grown = []
        for source, arrows, end in frontier:
            for arrow in quiver.arrows_from(end):
                grown.append((source, arrows + (arrow.name,), arrow.target))
        paths.extend((source, arrows) for source, arrows, _ in grown)
        frontier = grown
        if not frontier:
            break
    return paths


class BoundQuiverAlgebra:
    """kQ/I with a path basis and right-multiplication structure constants.

    Instances are treated as immutable once built.
    """

    def __init__(
        self,
        *,
        name: str,
        quiver: Quiver,
        relations: tuple[Relation, ...],
        p: int,
        max_path_length: int,
        basis: tuple[BasisPath, ...],
        arrow_matrices: dict[str, np.ndarray],
        level: int,
    ) -> None:
        self.name = name
        self.quiver = quiver
        self.relations = relations
        self.p = p
        self.max_path_length = max_path_length
        self.basis = basis
        self.level = level
        self._arrow_matrices = arrow_matrices
        self._opposite: Optional[BoundQuiverAlgebra] = None

    def __repr__(self) -> str:
        return f"BoundQuiverAlgebra({self.name!r}, dim={self.dim}, p={self.p})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def n_vertices(self) -> int:
        return len(self.quiver.vertices)

    @cached_property
    def _between(self) -> dict[tuple[str, str], list[int]]:
        table: dict[tuple[str, str], list[int]] = {}
        for idx, path in enumerate(self.basis):
            table.setdefault((path.source, path.target), []).append(idx)
        return table

    def basis_between(self, source: str, target: str) -> list[int]:
        return self._between.get((source, target), [])

    def basis_from(self, source: str) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.source == source]

    def basis_into(self, target: str) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.target == target]

    def unit(self, index: int) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.int64)
        vec[index] = 1
        return vec

    def zero_element(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def idempotent(self, vertex: str) -> np.ndarray:
        return self.unit(self.basis.index(BasisPath(vertex, vertex, ())))

    def right_arrow(self, name: str) -> np.ndarray:
        """Matrix of right multiplication by an arrow, acting on coordinate columns."""
        return self._arrow_matrices[name]

    def path_element(self, source: str, arrows: Sequence[str]) -> np.ndarray:
        vec = self.idempotent(source)
        end = source
        for name in arrows:
            arrow = self.quiver.arrow(name)
            if arrow.source != end:
                raise ValueError(f"Path {'.'.join(arrows)} does not compose at {name}")
            vec = exact.matmul(self._arrow_matrices[name], vec.reshape(-1, 1), self.p).ravel()
            end = arrow.target
        return vec

    @cached_property
    def right_multiplication(self) -> np.ndarray:
        """Stack ``T`` with ``T[c] @ x`` the coordinates of ``x * basis[c]``."""
        n = self.dim
        table = np.zeros((n, n, n), dtype=np.int64)
        for c, path in enumerate(self.basis):
            if path.arrows:
                mats = [self._arrow_matrices[a] for a in reversed(path.arrows)]
                table[c] = exact.chain(mats, self.p)
            else:
                for i, other in enumerate(self.basis):
                    if other.target == path.source:
                        table[c, i, i] = 1
        return table

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.dim == 0:
            return self.zero_element()
        combined = np.mod(np.tensordot(y, self.right_multiplication, axes=(0, 0)), self.p)
        return exact.matmul(combined, np.asarray(x).reshape(-1, 1), self.p).ravel()

    def paths_by_degree(self) -> dict[int, list[str]]:
        degrees: dict[int, list[str]] = {}
        for path in self.basis:
            degrees.setdefault(path.length, []).append(path.describe())
        return degrees

    def opposite(self) -> "BoundQuiverAlgebra":
        if self._opposite is None:
            op = build_algebra(
                self.quiver.opposite(),
                [rel.reversed() for rel in self.relations],
                p=self.p,
                max_path_length=self.max_path_length,
                name=f"{self.name}^op",
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def to_opposite(self, element: np.ndarray) -> np.ndarray:
        op = self.opposite()
        out = op.zero_element()
        for idx in np.nonzero(element)[0]:
            path = self.basis[int(idx)]
            out = out + int(element[idx]) * op.path_element(path.target, tuple(reversed(path.arrows)))
        return np.mod(out, self.p)

    def with_field(self, p: int) -> "BoundQuiverAlgebra":
        """The same presentation over another prime field; coefficients are read as integers."""
        if p == self.p:
            return self
        return build_algebra(
            self.quiver,
            self.relations,
            p=p,
            max_path_length=self.max_path_length,
            name=self.name,
        )

    def corner(self, vertices: Iterable[str]) -> "BoundQuiverAlgebra":
        keep = set(vertices)
        unknown = keep - set(self.quiver.vertices)
        if unknown:
            raise CornerError(f"Unknown vertices {sorted(unknown)}")
        if keep == set(self.quiver.vertices):
            return self
        sub = self.quiver.full_subquiver(keep)
        name = f"{self.name}[{','.join(sub.vertices)}]"
        if not sub.vertices:
            return build_algebra(sub, [], p=self.p, max_path_length=self.max_path_length, name=name)

        expected = sum(
            len(self.basis_between(u, w)) for u in sub.vertices for w in sub.vertices
        )
        by_ends: dict[tuple[str, str], list[tuple[str, ...]]] = {}
        for source, arrows in enumerate_paths(sub, self.level):
            end = sub.arrow(arrows[-1]).target if arrows else source
            by_ends.setdefault((source, end), []).append(arrows)

        relations: list[Relation] = []
        image_dim = 0
        for (source, end), paths in by_ends.items():
            columns = np.stack([self.path_element(source, arrows) for arrows in paths], axis=1)
            fac = exact.factor(columns, self.p)
            image_dim += fac.rank
            for col in fac.kernel_basis.T:
                terms = tuple(
                    (_signed(int(col[k]), self.p), paths[k]) for k in np.nonzero(col)[0]
                )
                relations.append(Relation(terms))
        if image_dim != expected:
            raise CornerError(
                f"Vertices {sorted(keep)} do not cut out a subquiver algebra of {self.name}"
            )
        return build_algebra(
            sub, relations, p=self.p, max_path_length=self.max_path_length, name=name
        )

    def embedding_from(self, corner: "BoundQuiverAlgebra") -> np.ndarray:
        """Matrix sending corner coordinates to coordinates in this algebra."""
        if corner.dim == 0:
            return exact.zeros(self.dim, 0)
        columns = [self.path_element(b.source, b.arrows) for b in corner.basis]
        return np.stack(columns, axis=1)


def _signed(value: int, p: int) -> int:
    return value if value <= p // 2 else value - p


def build_algebra(
    quiver: Quiver,
    relations: Sequence[Relation],
    *,
    p: int,
    max_path_length: int = DEFAULT_MAX_PATH_LENGTH,
    name: str = "",
) -> BoundQuiverAlgebra:
    p = exact.check_prime(p)
    if max_path_length < 1:
        raise ValueError("max_path_length must be at least 1")
    relations = tuple(relations)
    for rel in relations:
        rel.validate(quiver)
    arrow_order = quiver.arrow_index
    vertex_order = quiver.vertex_index

    for level in range(1, max_path_length + 1):
        paths = enumerate_paths(quiver, level)
        columns = sorted(
            paths,
            key=lambda path: (
                -len(path[1]),
                tuple(arrow_order[a] for a in path[1]),
                vertex_order[path[0]],
            ),
        )
        column_of = {path: i for i, path in enumerate(columns)}
        generators = _ideal_generators(quiver, relations, level, column_of, p)
        if generators.shape[0]:
            reduced, pivots = exact.rref(generators, p)
            reduced = reduced[: len(pivots)]
        else:
            reduced, pivots = exact.zeros(0, len(columns)), ()
        pivot_rows = {c: i for i, c in enumerate(pivots)}

        survivors = []
        for path in columns:
            if len(path[1]) != level:
                continue
            c = column_of[path]
            row = pivot_rows.get(c)
            if row is None or np.count_nonzero(reduced[row]) > 1:
                survivors.append(path)
        logger.debug(
            "Level %d of %s: %d paths, %d ideal pivots, %d surviving top-degree paths",
            level, name or "algebra", len(columns), len(pivots), len(survivors),
        )
        if not survivors:
            break
    else:
        raise NotFiniteDimensionalError(
            f"Paths of length {max_path_length} survive reduction in {name or 'algebra'}; "
            "the ideal may not be admissible"
        )

    pivot_set = set(pivots)
    normal = [path for path in columns if column_of[path] not in pivot_set]
    normal.sort(
        key=lambda path: (
            len(path[1]),
            vertex_order[path[0]],
            tuple(arrow_order[a] for a in path[1]),
        )
    )
    basis = tuple(
        BasisPath(src, quiver.arrow(arrows[-1]).target if arrows else src, arrows)
        for src, arrows in normal
    )
    basis_cols = [column_of[path] for path in normal]
    pivot_list = list(pivots)

    def reduce(vec: np.ndarray) -> np.ndarray:
        if pivot_list:
            vec = np.mod(vec - vec[pivot_list] @ reduced, p)
        return vec[basis_cols]

    arrow_matrices: dict[str, np.ndarray] = {}
    for arrow in quiver.arrows:
        mat = exact.zeros(len(basis), len(basis))
        for j, path in enumerate(basis):
            if path.target != arrow.source:
                continue
            vec = np.zeros(len(columns), dtype=np.int64)
            vec[column_of[(path.source, path.arrows + (arrow.name,))]] = 1
            mat[:, j] = reduce(vec)
        arrow_matrices[arrow.name] = mat

    algebra = BoundQuiverAlgebra(
        name=name,
        quiver=quiver,
        relations=relations,
        p=p,
        max_path_length=max_path_length,
        basis=basis,
        arrow_matrices=arrow_matrices,
        level=level,
    )
    logger.debug("Built %r with nilpotency level %d", algebra, level)
    return algebra


def _ideal_generators(
    quiver: Quiver,
    relations: Sequence[Relation],
    level: int,
    column_of: dict[Path, int],
    p: int,
) -> np.ndarray:
    rows: list[np.ndarray] = []
    if not relations:
        return exact.zeros(0, len(column_of))
    prefixes: dict[str, list[Path]] = {}
    suffixes: dict[str, list[Path]] = {}
    for path in column_of:
        source, arrows = path
        end = quiver.arrow(arrows[-1]).target if arrows else source
        prefixes.setdefault(end, []).append(path)
        suffixes.setdefault(source, []).append(path)
    for rel in relations:
        source, target = rel.validate(quiver)
        shortest = min(len(path) for _, path in rel.terms)
        for u_source, u_arrows in prefixes.get(source, []):
            for _, v_arrows in suffixes.get(target, []):
                if len(u_arrows) + shortest + len(v_arrows) > level:
                    continue
                row = np.zeros(len(column_of), dtype=np.int64)
                for coeff, path in rel.terms:
                    word = u_arrows + path + v_arrows
                    if len(word) <= level:
                        idx = column_of[(u_source, word)]
                        row[idx] = (row[idx] + coeff) % p
                if row.any():
                    rows.append(row)
    if not rows:
        return exact.zeros(0, len(column_of))
    return np.stack(rows)


__all__ = [
    "BasisPath",
    "BoundQuiverAlgebra",
    "DEFAULT_MAX_PATH_LENGTH",
    "build_algebra",
    "enumerate_paths",
]
