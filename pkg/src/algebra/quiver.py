from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from ..errors import AlgebraFileError, IllFormedRelationError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraFileError(f"Duplicate vertex ids in {list(self.vertices)}")
        names = [arrow.name for arrow in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraFileError(f"Duplicate arrow names in {names}")
        known = set(self.vertices)
        for arrow in self.arrows:
            if arrow.source not in known or arrow.target not in known:
                raise AlgebraFileError(
                    f"Arrow {arrow.name} uses unknown endpoint {arrow.source}->{arrow.target}"
                )

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self.arrow_index[name]]
        except KeyError as exc:
            raise IllFormedRelationError(f"Unknown arrow {name!r}") from exc

    def arrows_from(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def arrows_into(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == vertex]

    def path_endpoints(self, path: Sequence[str]) -> tuple[str, str]:
        """Source and target of a nonempty arrow sequence, checking composability."""
        if not path:
            raise IllFormedRelationError("Empty path has no endpoints")
        arrows = [self.arrow(name) for name in path]
        for left, right in zip(arrows, arrows[1:]):
            if left.target != right.source:
                raise IllFormedRelationError(
                    f"Arrows {left.name} and {right.name} do not compose "
                    f"({left.name} ends at {left.target}, {right.name} starts at {right.source})"
                )
        return arrows[0].source, arrows[-1].target

    def full_subquiver(self, vertices: Iterable[str]) -> "Quiver":
        keep = set(vertices)
        return Quiver(
            vertices=tuple(v for v in self.vertices if v in keep),
            arrows=tuple(a for a in self.arrows if a.source in keep and a.target in keep),
        )

    def opposite(self) -> "Quiver":
        return Quiver(
            vertices=self.vertices,
            arrows=tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
        )


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths; each term is (coefficient, arrow names)."""

    terms: tuple[tuple[int, tuple[str, ...]], ...]

    @classmethod
    def of(cls, *terms: tuple[int, Sequence[str]]) -> "Relation":
        return cls(tuple((int(c), tuple(path)) for c, path in terms))

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(path))) for c, path in self.terms))

    def validate(self, quiver: Quiver) -> tuple[str, str]:
        if not self.terms:
            raise IllFormedRelationError("Relation without terms")
        endpoints = set()
        for _, path in self.terms:
            if len(path) < 2:
                raise IllFormedRelationError(
                    f"Relation term {'.'.join(path) or '<empty>'} has length < 2"
                )
            endpoints.add(quiver.path_endpoints(path))
        if len(endpoints) != 1:
            raise IllFormedRelationError(
                f"Relation terms are not parallel: {sorted(endpoints)}"
            )
        return endpoints.pop()

    def describe(self) -> str:
        return " + ".join(f"{coeff}*{'.'.join(path)}" for coeff, path in self.terms)


__all__ = ["Arrow", "Quiver", "Relation"]
