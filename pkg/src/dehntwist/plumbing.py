"""Intersection lattices of A_l chain plumbings and their boundaries.

For ``k >= 2`` the open book ``X_{tau^k}`` with page ``D*S^n`` and monodromy
``tau^k`` is the boundary of the plumbing of ``k - 1`` copies of
``D*S^(n+1)`` along an A_{k-1} chain.  Its homology follows from the long
exact sequence of the pair: ``H_n`` is the cokernel of the intersection form
and ``H_(n+1)`` its kernel.  When that boundary is a homotopy sphere, the
Arf invariant of the mod 2 quadratic refinement decides whether it is the
standard or the Kervaire sphere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .classification import KervaireLookup, KervaireStatus, kervaire_status
from .errors import PreconditionError
from .lattice import AbelianGroup, IntMatrix, coker_ker

# Brute force is the reference; beyond this many basis vectors it is refused.
ARF_MAX_RANK = 24
# q(e_i) = 1 on each vanishing cycle, as for any Milnor fibre.
VANISHING_CYCLE_Q = 1


class Symmetry(enum.Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew"


class SphereType(enum.Enum):
    NOT_A_SPHERE = "not-a-sphere"
    STANDARD = "standard"
    KERVAIRE = "kervaire"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class BilinearLattice:
    gram: IntMatrix
    symmetry: Symmetry

    def __post_init__(self):
        g = self.gram
        if not g.is_square:
            raise ValueError("Gram matrix must be square")
        if self.symmetry is Symmetry.SYMMETRIC and g != g.T:
            raise ValueError("symmetric lattice with non-symmetric Gram matrix")
        if self.symmetry is Symmetry.SKEW:
            if g != -g.T or any(g[i, i] for i in range(g.rows)):
                raise ValueError("skew lattice needs an alternating Gram matrix")

    @property
    def rank(self) -> int:
        return self.gram.rows

    def pairing(self, x, y) -> int:
        return sum(x[i] * self.gram[i, j] * y[j] for i in range(self.rank) for j in range(self.rank))

    @classmethod
    def empty(cls) -> BilinearLattice:
        """Rank-0 lattice of the empty plumbing."""
        return cls(IntMatrix.zeros(0, 0), Symmetry.SKEW)


def a_chain_lattice(l: int, m: int, chain_sign: int = 1) -> BilinearLattice:
    """Intersection form on H_m of the A_l plumbing of ``D*S^m``.

    ``<e_i, e_(i+1)> = chain_sign``.  For odd ``m`` the form is skew; for even
    ``m`` it is symmetric with diagonal ``2 (-1)^(m/2)``.
    """
    if l < 1:
        raise PreconditionError("an A_l chain needs l >= 1 (use BilinearLattice.empty for l = 0)")
    if m < 2:
        raise PreconditionError(f"plumbed sphere dimension must be >= 2, got {m}")
    if chain_sign not in (1, -1):
        raise PreconditionError("chain_sign must be +1 or -1")
    skew = m % 2 == 1
    g = [[0] * l for _ in range(l)]
    for i in range(l):
        if not skew:
            g[i][i] = 2 * (-1) ** (m // 2)
        if i + 1 < l:
            g[i][i + 1] = chain_sign
            g[i + 1][i] = -chain_sign if skew else chain_sign
    return BilinearLattice(IntMatrix(g, ncols=l), Symmetry.SKEW if skew else Symmetry.SYMMETRIC)


@dataclass(frozen=True)
class QuadraticRefinement:
    """A function ``q: (Z/2)^rank -> Z/2`` with ``q(x+y) = q(x) + q(y) + <x,y>``.

    Determined by its values ``q_basis`` on the basis vectors.
    """

    lattice: BilinearLattice
    q_basis: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q_basis", tuple(int(b) % 2 for b in self.q_basis))
        if len(self.q_basis) != self.lattice.rank:
            raise ValueError("one q value per basis vector")

    def value(self, bits) -> int:
        """q on a single vector given as a sequence of 0/1 coordinates."""
        g = self.lattice.gram
        r = self.lattice.rank
        total = sum(b * q for b, q in zip(bits, self.q_basis))
        total += sum(bits[i] * bits[j] * g[i, j] for i in range(r) for j in range(i + 1, r))
        return total % 2

    def values(self) -> np.ndarray:
        """q on all 2^rank vectors; index ``x`` has coordinate ``i`` in bit ``i``."""
        r = self.lattice.rank
        if r > ARF_MAX_RANK:
            raise PreconditionError(f"exhaustive scan limited to rank <= {ARF_MAX_RANK}, got {r}")
        xs = np.arange(1 << r, dtype=np.uint32)
        bits = [((xs >> i) & 1).astype(np.uint8) for i in range(r)]
        q = np.zeros(1 << r, dtype=np.uint8)
        for i in range(r):
            if self.q_basis[i]:
                q ^= bits[i]
        g = self.lattice.gram
        for i in range(r):
            for j in range(i + 1, r):
                if g[i, j] % 2:
                    q ^= bits[i] & bits[j]
        return q


def vanishing_cycle_refinement(lattice: BilinearLattice) -> QuadraticRefinement:
    return QuadraticRefinement(lattice, (VANISHING_CYCLE_Q,) * lattice.rank)


def is_nondegenerate_mod2(lattice: BilinearLattice) -> bool:
    """Whether the Gram matrix is invertible over Z/2 (rank by elimination)."""
    rows = [[x % 2 for x in row] for row in lattice.gram]
    n = len(rows)
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(n):
            if r != rank and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank == n


def arf(refinement: QuadraticRefinement) -> int:
    """Arf invariant by majority vote over all vectors.

    It is 0 exactly when q takes the value 0 on more than half the vectors.
    The form must be nondegenerate mod 2, otherwise no Arf invariant exists.
    """
    if not is_nondegenerate_mod2(refinement.lattice):
        raise PreconditionError("Arf invariant needs a form that is nondegenerate mod 2")
    q = refinement.values()
    ones = int(q.sum(dtype=np.int64))
    zeros = q.size - ones
    if zeros == ones:
        raise AssertionError("a nondegenerate quadratic form cannot be balanced")
    return 0 if zeros > ones else 1


def arf_a_chain(l: int, chain_sign: int = 1) -> int:
    """Arf invariant of the skew A_l form with q = 1 on the vanishing cycles."""
    if l < 2 or l % 2:
        raise PreconditionError(f"skew A_l form is unimodular only for even l >= 2, got {l}")
    return arf(vanishing_cycle_refinement(a_chain_lattice(l, 3, chain_sign)))


@dataclass(frozen=True)
class BoundaryInvariants:
    """Homology of the boundary of a plumbing, and what kind of sphere it is.

    ``sphere_type`` is ``None`` when only the homology has been computed.
    """

    h_n: AbelianGroup
    h_n_plus_1: AbelianGroup
    sphere_type: SphereType | None = None
    note: str = ""

    def __post_init__(self):
        if self.sphere_type not in (None, SphereType.NOT_A_SPHERE):
            if not (self.h_n.is_trivial and self.h_n_plus_1.is_trivial):
                raise ValueError("a sphere has trivial middle homology")

    @property
    def is_homology_sphere(self) -> bool:
        return self.h_n.is_trivial and self.h_n_plus_1.is_trivial


def open_book_boundary_homology(k: int, n: int, chain_sign: int = 1) -> BoundaryInvariants:
    """``H_n`` and ``H_(n+1)`` of ``X_{tau^k}``, the boundary of the A_{k-1} plumbing.

    Even ``n`` gives the skew case.  Odd ``n`` is also computed (symmetric
    form), but only even ``n`` is identified further by
    :func:`boundary_sphere_type`.
    """
    if k < 2:
        raise PreconditionError(f"open book description needs k >= 2, got {k}")
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    lattice = a_chain_lattice(k - 1, n + 1, chain_sign)
    coker, ker_rank = coker_ker(lattice.gram)
    return BoundaryInvariants(h_n=coker, h_n_plus_1=AbelianGroup(free_rank=ker_rank))


def boundary_sphere_type(k: int, n: int, kervaire: KervaireLookup = kervaire_status) -> BoundaryInvariants:
    if n % 2 or n < 2:
        raise PreconditionError(f"sphere-type identification needs even n >= 2, got {n}")
    hom = open_book_boundary_homology(k, n)
    if not hom.is_homology_sphere:
        return BoundaryInvariants(hom.h_n, hom.h_n_plus_1, SphereType.NOT_A_SPHERE)

    # simply connected homology sphere of dim >= 5, hence a homotopy sphere
    if arf_a_chain(k - 1) == 0:
        return BoundaryInvariants(
            hom.h_n, hom.h_n_plus_1, SphereType.STANDARD,
            f"Arf(A_{k - 1}) = 0: boundary is the standard S^{2 * n + 1}",
        )
    dim = 2 * n + 1
    status = kervaire(dim)
    if status is KervaireStatus.NONTRIVIAL:
        return BoundaryInvariants(
            hom.h_n, hom.h_n_plus_1, SphereType.KERVAIRE,
            f"Arf(A_{k - 1}) = 1: boundary is the exotic Kervaire sphere of dimension {dim}",
        )
    if status is KervaireStatus.TRIVIAL:
        return BoundaryInvariants(
            hom.h_n, hom.h_n_plus_1, SphereType.STANDARD,
            f"Arf(A_{k - 1}) = 1: Kervaire sphere, which is standard in dimension {dim}",
        )
    return BoundaryInvariants(
        hom.h_n, hom.h_n_plus_1, SphereType.UNKNOWN,
        f"Arf(A_{k - 1}) = 1: Kervaire sphere of dimension {dim}, whose smooth class is open",
    )
