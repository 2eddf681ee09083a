"""Homology action of the Dehn twist on a cotangent fibre.

``H_n(D*S^n, B; Z)`` is free on ``[S^n]`` (the zero section) and ``[D]``
(the fibre disc over the base point, whose boundary is ``B``).  A compactly
supported self-map fixes ``[B]``, so it acts as ``[[eps, A], [0, 1]]`` with
``eps = +-1`` its action on ``[S^n]``.

Orientations follow Arnold: ``<[D], [S^n]> = 1`` and, for even ``n``,
``<[S^n], [S^n]> = 2 (-1)^(n/2)``.  These are fixed constants, not options.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .lattice import IntMatrix, OrderResult, matrix_order

FIBRE_ZERO_SECTION_PAIRING = 1
DEFAULT_A_RANGE = 16


def zero_section_self_intersection(n: int) -> int:
    """Self-intersection of the zero section, i.e. the Euler number of TS^n."""
    if n % 2:
        raise PreconditionError("self-intersection pairing is symmetric only for even n")
    return 2 * (-1) ** (n // 2)


@dataclass(frozen=True)
class RelativeTwistAction:
    """An action ``[S^n] -> eps [S^n]``, ``[D] -> A [S^n] + [D]``."""

    n: int
    epsilon: int
    A: int

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")

    @property
    def matrix(self) -> IntMatrix:
        """Matrix in the basis ``{[S^n], [D]}`` (columns are images)."""
        return IntMatrix([[self.epsilon, self.A], [0, 1]])

    @property
    def is_identity(self) -> bool:
        return self.epsilon == 1 and self.A == 0


def _check_dimension(n: int) -> None:
    if n < 1:
        raise PreconditionError(f"sphere dimension must be >= 1, got {n}")


def twist_matrix(n: int) -> RelativeTwistAction:
    _check_dimension(n)
    return RelativeTwistAction(
        n=n,
        epsilon=(-1) ** (n + 1),
        A=(-1) ** ((n + 1) * (n + 2) // 2),
    )


def homological_order(n: int) -> OrderResult:
    """Order of the twist's action on relative homology.

    Odd ``n`` gives a nontrivial unipotent matrix, so ``matrix_order``
    certifies ``Infinite`` without searching.
    """
    return matrix_order(twist_matrix(n).matrix, search_bound=2)


def pairing_constraint(epsilon: int, A: int, n: int) -> bool:
    """Whether ``(eps, A)`` preserves ``<[D], [S^n]> = 1``."""
    if n % 2:
        raise PreconditionError("the pairing constraint is stated for even n only")
    _check_dimension(n)
    if epsilon not in (1, -1):
        raise PreconditionError(f"epsilon must be +1 or -1, got {epsilon}")
    # <A[S] + [D], eps[S]> expanded bilinearly
    image = epsilon * (A * zero_section_self_intersection(n) + FIBRE_ZERO_SECTION_PAIRING)
    return image == FIBRE_ZERO_SECTION_PAIRING


def enumerate_homology_actions(n: int, A_range: int = DEFAULT_A_RANGE) -> set[RelativeTwistAction]:
    """All ``(eps, A)`` with ``|A| <= A_range`` that preserve the pairing."""
    if n % 2:
        raise PreconditionError("enumeration is defined for even n only")
    _check_dimension(n)
    if A_range < 1:
        raise PreconditionError("A_range must be >= 1")
    return {
        RelativeTwistAction(n, eps, A)
        for eps in (1, -1)
        for A in range(-A_range, A_range + 1)
        if pairing_constraint(eps, A, n)
    }
