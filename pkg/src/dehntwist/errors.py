"""Exception types shared across the package."""

from __future__ import annotations


class PreconditionError(ValueError):
    """An argument lies outside the domain where the computation is defined."""


class OrderSearchExhausted(ArithmeticError):
    """Neither a finite order nor an infinite-order certificate was found.

    Raised by :func:`dehntwist.lattice.matrix_order` instead of guessing.
    """

    def __init__(self, search_bound: int):
        super().__init__(f"order exceeds search bound {search_bound}")
        self.search_bound = search_bound
