"""Exception types raised by the workbench.

Input problems derive from ``ValueError``; computation limits and failed
cross-checks derive from ``RuntimeError``.
"""

from __future__ import annotations


class AlgebraFileError(ValueError):
    """The algebra description could not be parsed or validated."""


class IllFormedRelationError(AlgebraFileError):
    """A relation mixes non-parallel paths, uses unknown arrows or is not admissible."""


class NotFiniteDimensionalError(ValueError):
    """Paths of the maximal allowed length survive reduction."""


class CornerError(ValueError):
    """A vertex subset does not cut out a full-subquiver corner algebra."""


class NotAPartitionError(ValueError):
    pass


class NotTriangularError(ValueError):
    pass


class AlgebraMismatchError(ValueError):
    pass


class NotProjectiveError(ValueError):
    pass


class NotASlotError(ValueError):
    """The requested summand or vertex is not a slot of the pair."""


class ModuleSpecError(ValueError):
    """Unknown module label or malformed module literal."""


class BudgetExceededError(RuntimeError):
    pass


class SearchSpaceTooLargeError(RuntimeError):
    pass


class DecompositionError(RuntimeError):
    pass


class VerificationError(RuntimeError):
    """Two independent computations of the same fact disagree."""


EXIT_CODES: dict[type[BaseException], int] = {
    AlgebraFileError: 2,
    NotFiniteDimensionalError: 2,
    CornerError: 2,
    ModuleSpecError: 2,
    AlgebraMismatchError: 2,
    NotProjectiveError: 2,
    NotASlotError: 2,
    BudgetExceededError: 3,
    SearchSpaceTooLargeError: 3,
    NotAPartitionError: 4,
    NotTriangularError: 4,
    VerificationError: 5,
    DecompositionError: 5,
}


def exit_code_for(exc: BaseException) -> int | None:
    for klass in type(exc).__mro__:
        if klass in EXIT_CODES:
            return EXIT_CODES[klass]
    return None


__all__ = [
    "AlgebraFileError",
    "AlgebraMismatchError",
    "BudgetExceededError",
    "CornerError",
    "DecompositionError",
    "EXIT_CODES",
    "IllFormedRelationError",
    "ModuleSpecError",
    "NotAPartitionError",
    "NotASlotError",
    "NotFiniteDimensionalError",
    "NotProjectiveError",
    "NotTriangularError",
    "SearchSpaceTooLargeError",
    "VerificationError",
    "exit_code_for",
]
