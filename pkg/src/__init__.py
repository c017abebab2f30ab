"""
Tau-tilting workbench core package.

Bound quiver algebras, their modules, support tau-tilting pairs and the
lifting of pairs along triangular matrix algebras, plus the command-line shell.
"""

__all__ = ["cli"]
