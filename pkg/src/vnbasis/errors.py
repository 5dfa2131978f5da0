"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["InvalidArgument", "NotProportionalError"]


class InvalidArgument(ValueError):
    """Raised when an operation receives arguments outside its domain."""


class NotProportionalError(ValueError):
    """No orthonormal unitary basis exists for the requested algebra.

    ``witness`` holds the 1-based block indices ``(i, j)`` whose ratios
    ``n_i / k_i`` and ``n_j / k_j`` differ.
    """

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        i, j = witness
        super().__init__(f"blocks {i} and {j} have different ratios n/k")
