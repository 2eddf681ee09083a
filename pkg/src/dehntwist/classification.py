"""Order of the Dehn twist in the symplectic, smooth, topological and
homotopical compactly supported mapping class groups of T*S^n.

The inputs that are imported theorems rather than computations (status of
the Kervaire spheres, the Kauffman-Krylov extension targets, Theta_13) live
in tables that carry their citations, so callers can print provenance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import PreconditionError
from .lattice import AbelianGroup, Ambiguous, Finite, Infinite, OrderResult


class Category(enum.Enum):
    """Automorphism groups, ordered by the forgetful maps Symp -> Diff -> Homeo -> HAut.

    ``ALMOST_COMPLEX`` sits between Symp and Diff; it is handled by
    :mod:`dehntwist.bott`.
    """

    SYMP = "symp"
    DIFF = "diff"
    HOMEO = "homeo"
    HAUT = "haut"
    ALMOST_COMPLEX = "ac"


class KervaireStatus(enum.Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"
    UNKNOWN = "unknown"


HHR = "Hill-Hopkins-Ravenel, nonexistence of Kervaire invariant one elements"
KAUFFMAN_KRYLOV = "Kauffman-Krylov, mapping class group of T*S^n up to extensions"
SEIDEL_GRADED = "Seidel, graded Lagrangian submanifolds (infinite symplectic order)"
SEIDEL_KRONHEIMER = "Seidel/Kronheimer, square of the twist is smoothly trivial for n = 2"
MILNOR_SPANIER = "Milnor-Spanier, fibre homotopy trivial sphere bundles over S^m force m = 1, 3, 7"
PICARD_LEFSCHETZ = "Picard-Lefschetz action on H_n(D*S^n, B) (Arnold orientations)"
CROSS_PRODUCT_ISOTOPY = "cross-product isotopy on R^3 / R^7 (n = 2, 6)"
ALEXANDER_TRICK = "Alexander trick: disc-supported maps are topologically trivial"
OPEN_BOOK = "open book X_{tau^k} = boundary of the A_{k-1} plumbing"

# dimension -> status for the exceptional cases; every other dim = 1 mod 4 is NONTRIVIAL
KERVAIRE_EXCEPTIONS: Mapping[int, KervaireStatus] = {
    5: KervaireStatus.TRIVIAL,
    13: KervaireStatus.TRIVIAL,
    29: KervaireStatus.TRIVIAL,
    61: KervaireStatus.TRIVIAL,
    125: KervaireStatus.UNKNOWN,
}

KervaireLookup = Callable[[int], KervaireStatus]


def kervaire_status(dim: int) -> KervaireStatus:
    """Whether the Kervaire sphere of dimension ``dim`` is diffeomorphic to the standard one."""
    if dim < 5 or dim % 4 != 1:
        raise PreconditionError(f"Kervaire spheres are tabulated for dim = 1 mod 4, dim >= 5; got {dim}")
    return KERVAIRE_EXCEPTIONS.get(dim, KervaireStatus.NONTRIVIAL)


def kervaire_lookup_from_table(table: Mapping[int, KervaireStatus]) -> KervaireLookup:
    """A lookup with ``table`` overriding the default statuses (for what-if analysis)."""

    def lookup(dim: int) -> KervaireStatus:
        default = kervaire_status(dim)
        return table.get(dim, default)

    return lookup


EXCEPTIONAL_EVEN_N = frozenset({2, 6})


@dataclass(frozen=True)
class OrderVerdict:
    result: OrderResult
    rule: str
    provenance: tuple[str, ...]


def explain_twist_order(cat: Category, n: int, kervaire: KervaireLookup = kervaire_status) -> OrderVerdict:
    """:func:`twist_order` together with the rule that produced it and its sources."""
    if cat is Category.ALMOST_COMPLEX:
        raise PreconditionError("almost-complex orders are bounded by dehntwist.bott.ac_order_bounds")
    if n < 2:
        raise PreconditionError(f"n must be >= 2, got {n}")

    if n % 2:
        return OrderVerdict(Infinite(), "odd", (PICARD_LEFSCHETZ,))
    if cat is Category.SYMP:
        return OrderVerdict(Infinite(), "symp", (SEIDEL_GRADED,))

    # n in {2, 6} takes precedence over the Kervaire clause (dim 5 and 13 are trivial)
    if n in EXCEPTIONAL_EVEN_N:
        sources = (SEIDEL_KRONHEIMER, CROSS_PRODUCT_ISOTOPY)
        if cat is not Category.DIFF:
            sources += ("smooth isotopy implies topological isotopy and homotopy",)
        return OrderVerdict(Finite(2), f"{cat.value}/exceptional", sources)

    if cat is Category.DIFF:
        status = kervaire(2 * n + 1)
        sources = (KAUFFMAN_KRYLOV, HHR, OPEN_BOOK, MILNOR_SPANIER)
        if status is KervaireStatus.TRIVIAL:
            return OrderVerdict(Finite(4), "diff/kervaire-trivial", sources)
        if status is KervaireStatus.NONTRIVIAL:
            return OrderVerdict(Finite(8), "diff/kervaire-nontrivial", sources)
        return OrderVerdict(Ambiguous(frozenset({4, 8})), "diff/kervaire-unknown", sources)

    return OrderVerdict(
        Finite(4), f"{cat.value}/generic", (ALEXANDER_TRICK, OPEN_BOOK, MILNOR_SPANIER)
    )


def twist_order(cat: Category, n: int, kervaire: KervaireLookup = kervaire_status) -> OrderResult:
    return explain_twist_order(cat, n, kervaire).result


def chi_r_target(n: int) -> AbelianGroup:
    """Target of the Kauffman-Krylov homomorphism chi_r for even n >= 4."""
    if n % 2 or n < 4:
        raise PreconditionError(f"chi_r target is defined for even n >= 4, got {n}")
    if n == 6:
        return AbelianGroup.trivial()
    if n % 8 == 0:
        return AbelianGroup(torsion=(2, 2))
    return AbelianGroup(torsion=(2,))


def square_root_of_identity_is_identity(group: AbelianGroup) -> bool:
    """In a finite group, does ``2x = 0`` force ``x = 0``?

    Decided by enumerating the group, so it holds exactly for odd order.
    """
    if not group.is_finite:
        raise PreconditionError("enumeration needs a finite group")
    elements = [()]
    for d in group.torsion:
        elements = [e + (i,) for e in elements for i in range(d)]
    zero = tuple(0 for _ in group.torsion)
    for x in elements:
        doubled = tuple((2 * xi) % d for xi, d in zip(x, group.torsion))
        if doubled == zero and x != zero:
            return False
    return True


@dataclass(frozen=True)
class Theta13Fact:
    group: AbelianGroup
    square_trivial_implies_trivial: bool


def theta13_fact() -> Theta13Fact:
    """``Theta_13 = Z/3``; being of odd order, an element squaring to 0 is 0.

    For n = 6 this upgrades "tau^4 trivial" to "tau^2 trivial".
    """
    group = AbelianGroup.cyclic(3)
    return Theta13Fact(group, square_root_of_identity_is_identity(group))


def fibre_homotopy_trivial_possible(base_sphere_dim: int) -> bool:
    """Whether the unit tangent bundle of S^m can be fibre homotopy trivial."""
    if base_sphere_dim < 1:
        raise PreconditionError("base sphere dimension must be >= 1")
    return base_sphere_dim in (1, 3, 7)
