"""Exception hierarchy shared by every treebij module."""

from __future__ import annotations


class TreeBijError(Exception):
    """Base class for all library errors."""


class InputError(TreeBijError, ValueError):
    """An argument violates an operation's precondition."""


class CapacityError(TreeBijError):
    """An exhaustive operation was asked for more than the enumeration cap allows."""


class DecodeError(TreeBijError):
    """A (partition, permutation) pair is not the code of any rooted tree."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message if step is None else f"step {step}: {message}")
        self.step = step


class AssemblyError(TreeBijError):
    """Linking chains by a column matrix did not produce a tree."""


class InvariantError(TreeBijError, AssertionError):
    """An internal invariant failed. This is a bug, not bad input."""
