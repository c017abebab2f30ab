"""Quivers, relations and bound quiver algebras."""

from .bound_algebra import BasisPath, BoundQuiverAlgebra, build_algebra
from .quiver import Arrow, Quiver, Relation

__all__ = ["Arrow", "BasisPath", "BoundQuiverAlgebra", "Quiver", "Relation", "build_algebra"]
