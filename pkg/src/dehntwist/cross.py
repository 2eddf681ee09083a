"""Cross products on R^3 and R^7 and the identities the n = 2, 6 isotopy uses.

The R^7 product is the imaginary part of octonion multiplication, with the
Fano-plane table obtained by Cayley-Dickson doubling of the quaternions
(e1, e2, e3) with a new unit e4 and e5 = e1 e4, e6 = e2 e4, e7 = e3 e4.
Any table satisfying the identities below would do; this one is pinned by
the tests.

Identities are checked in exact rational arithmetic.  Only the rotation
check, which needs trigonometry, uses floats.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .errors import PreconditionError
from .lattice import lcm

Triple = tuple[int, int, int]

# Oriented triples (i, j, k), 1-based, meaning e_i x e_j = e_k.
CROSS3_TABLE: tuple[Triple, ...] = ((1, 2, 3),)
FANO7_TABLE: tuple[Triple, ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (2, 4, 6),
    (3, 4, 7),
    (1, 7, 6),
    (2, 5, 7),
    (3, 6, 5),
)
DEFAULT_TABLES = {3: CROSS3_TABLE, 7: FANO7_TABLE}

EXACT_IDENTITIES = (
    "bilinearity",
    "antisymmetry",
    "orthogonal-to-u",
    "orthogonal-to-v",
    "norm",
)


def structure_constants(table: Sequence[Triple], dim: int) -> dict[tuple[int, int], tuple[int, int]]:
    """``(i, j) -> (sign, k)`` with ``e_i x e_j = sign * e_k`` (0-based indices)."""
    consts: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b, c in table:
        a, b, c = a - 1, b - 1, c - 1
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            if not all(0 <= x < dim for x in (i, j, k)):
                raise ValueError(f"triple {(a + 1, b + 1, c + 1)} out of range for dim {dim}")
            consts[(i, j)] = (1, k)
            consts[(j, i)] = (-1, k)
    return consts


_CONSTANTS = {dim: structure_constants(t, dim) for dim, t in DEFAULT_TABLES.items()}


class RationalVector:
    """Exact vector in Q^3 or Q^7.

    Stored as integer numerators over one positive common denominator,
    reduced so the representation is unique; ``coords`` gives the
    coordinates as lowest-terms fractions.
    """

    __slots__ = ("nums", "den")

    def __init__(self, coords: Sequence = (), *, nums: Sequence[int] | None = None, den: int = 1):
        if nums is None:
            fracs = [Fraction(c) for c in coords]
            den = lcm(*(f.denominator for f in fracs)) if fracs else 1
            nums = [f.numerator * (den // f.denominator) for f in fracs]
        if len(nums) not in (3, 7):
            raise PreconditionError(f"vectors must live in R^3 or R^7, got dim {len(nums)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            nums, den = [-x for x in nums], -den
        g = gcd(den, *nums)
        self.nums = tuple(x // g for x in nums)
        self.den = den // g

    @classmethod
    def basis(cls, dim: int, i: int) -> RationalVector:
        """The standard unit vector ``e_i`` (1-based)."""
        return cls(nums=[int(j == i - 1) for j in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> RationalVector:
        return cls(nums=[0] * dim)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    @property
    def dim(self) -> int:
        return len(self.nums)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalVector):
            return NotImplemented
        return self.nums == other.nums and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.nums, self.den))

    def __repr__(self) -> str:
        return "RationalVector((" + ", ".join(str(c) for c in self.coords) + "))"

    def _check(self, other: RationalVector) -> None:
        if self.dim != other.dim:
            raise PreconditionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: RationalVector) -> RationalVector:
        self._check(other)
        return RationalVector(
            nums=[a * other.den + b * self.den for a, b in zip(self.nums, other.nums)],
            den=self.den * other.den,
        )

    def __sub__(self, other: RationalVector) -> RationalVector:
        return self + (-other)

    def __neg__(self) -> RationalVector:
        return RationalVector(nums=[-a for a in self.nums], den=self.den)

    def scale(self, c) -> RationalVector:
        c = Fraction(c)
        return RationalVector(nums=[c.numerator * a for a in self.nums], den=c.denominator * self.den)

    def dot(self, other: RationalVector) -> Fraction:
        self._check(other)
        return Fraction(sum(a * b for a, b in zip(self.nums, other.nums)), self.den * other.den)

    def norm2(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not any(self.nums)


def cross(u: RationalVector, v: RationalVector, table: Sequence[Triple] | None = None) -> RationalVector:
    u._check(v)
    consts = _CONSTANTS[u.dim] if table is None else structure_constants(table, u.dim)
    out = [0] * u.dim
    un, vn = u.nums, v.nums
    for (i, j), (sign, k) in consts.items():
        out[k] += sign * un[i] * vn[j]
    return RationalVector(nums=out, den=u.den * v.den)


def cross_float(u: np.ndarray, v: np.ndarray, table: Sequence[Triple] | None = None) -> np.ndarray:
    dim = len(u)
    if len(v) != dim or dim not in (3, 7):
        raise PreconditionError("float cross product needs two vectors in R^3 or R^7")
    consts = _CONSTANTS[dim] if table is None else structure_constants(table, dim)
    out = np.zeros(dim)
    for (i, j), (sign, k) in consts.items():
        out[k] += sign * u[i] * v[j]
    return out


# ---------------------------------------------------------------------------
# exact identity checks


@dataclass(frozen=True)
class Counterexample:
    dim: int
    identity: str
    vectors: tuple[RationalVector, ...]


@dataclass(frozen=True)
class CrossReport:
    samples: int
    dims: tuple[int, ...]
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def random_rational_vector(rng: random.Random, dim: int, bound: int = 9) -> RationalVector:
    return RationalVector(
        tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(dim))
    )


def _first_failure(u, v, w, a, b, table) -> str | None:
    uv = cross(u, v, table)
    lhs = cross(u.scale(a) + w.scale(b), v, table)
    rhs = uv.scale(a) + cross(w, v, table).scale(b)
    if lhs != rhs:
        return "bilinearity"
    if cross(v, u, table) != -uv:
        return "antisymmetry"
    if u.dot(uv) != 0:
        return "orthogonal-to-u"
    if v.dot(uv) != 0:
        return "orthogonal-to-v"
    if uv.norm2() != u.norm2() * v.norm2() - u.dot(v) ** 2:
        return "norm"
    return None


def verify_cross_identities(
    sample_count: int,
    seed: int,
    dims: Sequence[int] = (3, 7),
    tables: dict[int, Sequence[Triple]] | None = None,
) -> CrossReport:
    """Check the five exact identities on pseudorandom rational vectors.

    Bilinearity is tested in the first slot; together with antisymmetry that
    covers the second.  The norm identity makes ``u, v, u x v`` independent
    whenever ``u`` and ``v`` are.
    """
    if sample_count < 1:
        raise PreconditionError("sample_count must be >= 1")
    tables = tables or {}
    rng = random.Random(seed)
    for dim in dims:
        table = tables.get(dim)
        for _ in range(sample_count):
            u, v, w = (random_rational_vector(rng, dim) for _ in range(3))
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            failure = _first_failure(u, v, w, a, b, table)
            if failure:
                return CrossReport(sample_count, tuple(dims), Counterexample(dim, failure, (u, v, w)))
    return CrossReport(sample_count, tuple(dims))


def find_triple_product_failure(
    sample_count: int, seed: int, dim: int = 7, table: Sequence[Triple] | None = None
) -> Counterexample | None:
    """First sample violating ``u x (v x w) = v (u.w) - w (u.v)``, if any.

    The identity holds on R^3 and must fail on R^7.
    """
    rng = random.Random(seed)
    for _ in range(sample_count):
        u, v, w = (random_rational_vector(rng, dim) for _ in range(3))
        lhs = cross(u, cross(v, w, table), table)
        rhs = v.scale(u.dot(w)) - w.scale(u.dot(v))
        if lhs != rhs:
            return Counterexample(dim, "triple-product", (u, v, w))
    return None


# ---------------------------------------------------------------------------
# rotation check


PRECONDITION_TOL = 1e-12
FIX_TOL = 1e-9


def plane_rotation(a: np.ndarray, b: np.ndarray, theta: float) -> np.ndarray:
    """Rotation by ``theta`` of the plane spanned by ``(a, b)``, positive from a to b.

    The orthogonal complement of the plane is fixed.
    """
    e1 = a / np.linalg.norm(a)
    b_perp = b - np.dot(b, e1) * e1
    norm = np.linalg.norm(b_perp)
    if norm < PRECONDITION_TOL:
        raise PreconditionError("plane vectors are linearly dependent")
    e2 = b_perp / norm
    dim = len(a)
    return (
        np.eye(dim)
        + (np.cos(theta) - 1.0) * (np.outer(e1, e1) + np.outer(e2, e2))
        + np.sin(theta) * (np.outer(e2, e1) - np.outer(e1, e2))
    )


def rotation_fixes_orthogonal(
    u: Sequence[float], v: Sequence[float], theta: float, table: Sequence[Triple] | None = None
) -> bool:
    """Does the rotation of the plane ``(u x v, v)`` by ``theta`` fix ``u``?

    Requires ``|u| = 1``, ``u . v = 0`` and ``v != 0``.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1:
        raise PreconditionError("u and v must be vectors of the same dimension")
    if abs(np.linalg.norm(u) - 1.0) > PRECONDITION_TOL:
        raise PreconditionError("u must be a unit vector")
    if np.linalg.norm(v) < PRECONDITION_TOL:
        raise PreconditionError("v must be nonzero")
    if abs(np.dot(u, v)) > PRECONDITION_TOL:
        raise PreconditionError("u must be orthogonal to v")
    R = plane_rotation(cross_float(u, v, table), v, theta)
    return bool(np.max(np.abs(R @ u - u)) <= FIX_TOL)


def random_orthonormal_pair(rng: np.random.Generator, dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Unit ``u`` and a nonzero ``v`` orthogonal to it."""
    while True:
        u = rng.standard_normal(dim)
        w = rng.standard_normal(dim)
        u /= np.linalg.norm(u)
        v = w - np.dot(w, u) * u
        # one more pass keeps u . v well below the precondition tolerance
        v -= np.dot(v, u) * u
        scale = rng.uniform(0.1, 10.0)
        if np.linalg.norm(v) > 1e-3:
            return u, scale * v / np.linalg.norm(v)
