"""Exact integer linear algebra.

Matrices hold Python ints, so every computation is arbitrary precision.
The module provides Smith normal form with unimodular transforms, powers,
multiplicative orders and cokernel/kernel extraction, plus the small value
types (:class:`AbelianGroup`, the ``OrderResult`` family) used throughout
the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import OrderSearchExhausted, PreconditionError


class IntMatrix:
    """Immutable dense integer matrix."""

    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row width")
        else:
            width = 0 if ncols is None else ncols
        self._rows = data
        self._nrows = len(data)
        self._ncols = width

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)],
            ncols=size,
        )

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def diagonal(cls, entries: Sequence[int], nrows: int | None = None,
                 ncols: int | None = None) -> IntMatrix:
        nrows = len(entries) if nrows is None else nrows
        ncols = len(entries) if ncols is None else ncols
        rows = [[0] * ncols for _ in range(nrows)]
        for i, d in enumerate(entries):
            rows[i][i] = d
        return cls(rows, ncols=ncols)

    @property
    def rows(self) -> int:
        return self._nrows

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return self._nrows, self._ncols

    @property
    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def __str__(self) -> str:
        if not self._rows:
            return f"[] ({self._nrows}x{self._ncols})"
        cells = [[str(x) for x in r] for r in self._rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows), ncols=self._nrows) if self._rows else \
            IntMatrix.zeros(self._ncols, 0)

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def __neg__(self) -> IntMatrix:
        return IntMatrix(([-x for x in r] for r in self._rows), ncols=self._ncols)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            ([a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)),
            ncols=self._ncols,
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(
            ([a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)),
            ncols=self._ncols,
        )

    def __mul__(self, k: int) -> IntMatrix:
        if not isinstance(k, int):
            return NotImplemented
        return IntMatrix(([k * x for x in r] for r in self._rows), ncols=self._ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self._ncols != other._nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows)) if other._rows else [()] * other._ncols
        return IntMatrix(
            ([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows),
            ncols=other._ncols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_identity(self) -> bool:
        return self.is_square and self == IntMatrix.identity(self._nrows)

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not M.is_square:
        raise PreconditionError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = M.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Group and order descriptors


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/d_1 + ... + Z/d_k``.

    ``torsion`` is in invariant-factor form (each ``d_i >= 2`` divides the
    next), which makes equality structural.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def trivial(cls) -> AbelianGroup:
        return cls()

    @classmethod
    def cyclic(cls, order: int) -> AbelianGroup:
        """``Z/order``; ``order == 0`` means ``Z`` and ``order == 1`` the trivial group."""
        if order == 0:
            return cls(free_rank=1)
        return cls.from_orders([order])

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> AbelianGroup:
        """Canonical form of ``Z^free_rank + sum(Z/m)`` for arbitrary orders ``m >= 1``."""
        orders = [abs(int(m)) for m in orders]
        if any(m == 0 for m in orders):
            raise ValueError("use free_rank for infinite cyclic summands")
        _, D, _ = snf(IntMatrix.diagonal(orders)) if orders else (None, None, None)
        diag = [D[i, i] for i in range(len(orders))] if orders else []
        return cls(free_rank=free_rank, torsion=tuple(d for d in diag if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Cardinality, or ``None`` for an infinite group."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Infinite:
    def __str__(self) -> str:
        return "Infinite"


@dataclass(frozen=True)
class Finite:
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("finite order must be positive")

    def __str__(self) -> str:
        return f"Finite({self.order})"


@dataclass(frozen=True)
class Bounded:
    """The order is finite, divisible by ``lower`` and divides ``upper``."""

    lower: int
    upper: int

    def __post_init__(self):
        if self.lower < 1 or self.upper < 1:
            raise ValueError("bounds must be positive")
        if self.upper % self.lower:
            raise ValueError(f"lower bound {self.lower} does not divide {self.upper}")

    def __str__(self) -> str:
        return f"Bounded({self.lower}, {self.upper})"


@dataclass(frozen=True)
class Ambiguous:
    """The order is one of ``candidates``; which one is not known."""

    candidates: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "candidates", frozenset(int(c) for c in self.candidates))
        if len(self.candidates) < 2:
            raise ValueError("an ambiguous order needs at least two candidates")
        if min(self.candidates) < 1:
            raise ValueError("candidate orders must be positive")

    def __str__(self) -> str:
        return "Ambiguous({" + ", ".join(map(str, sorted(self.candidates))) + "})"


OrderResult = Union[Infinite, Finite, Bounded, Ambiguous]


# ---------------------------------------------------------------------------
# Smith normal form


def snf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular; ``D`` is diagonal with nonnegative
    entries ``d_1 | d_2 | ...`` (zeros last).
    """
    m, n = M.shape
    a = M.tolist()
    u = IntMatrix.identity(m).tolist()
    v = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row[dst] += k * row[src]
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def combine_rows(i, j, x, y, z, w):  # (row_i, row_j) <- (x r_i + y r_j, z r_i + w r_j)
        for mat in (a, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [x * p + y * q for p, q in zip(ri, rj)]
            mat[j] = [z * p + w * q for p, q in zip(ri, rj)]

    def combine_cols(i, j, x, y, z, w):  # (col_i, col_j) <- (x c_i + y c_j, z c_i + w c_j)
        for mat in (a, v):
            for row in mat:
                p, q = row[i], row[j]
                row[i] = x * p + y * q
                row[j] = z * p + w * q

    for t in range(min(m, n)):
        # smallest nonzero entry of the trailing block becomes the pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            # clear column t below the pivot, then row t right of it; each
            # step is a 2x2 unimodular move putting gcd(pivot, entry) on the diagonal
            for i in range(t + 1, m):
                p, b = a[t][t], a[i][t]
                if b:
                    g, x, y = _xgcd(p, b)
                    combine_rows(t, i, x, y, -b // g, p // g)
            for j in range(t + 1, n):
                p, b = a[t][t], a[t][j]
                if b:
                    g, x, y = _xgcd(p, b)
                    combine_cols(t, j, x, y, -b // g, p // g)
            if any(a[i][t] for i in range(t + 1, m)):
                continue
            p = a[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return IntMatrix(u, ncols=m), IntMatrix(a, ncols=n), IntMatrix(v, ncols=n)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``x a + y b = g``.

    When ``a`` divides ``b`` the answer is ``(|a|, sign(a), 0)`` so that
    already-reduced pivots are left untouched.
    """
    if b % a == 0:
        return abs(a), (1 if a > 0 else -1), 0
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def invariant_factors(M: IntMatrix) -> list[int]:
    """Diagonal of the Smith normal form, zeros included."""
    _, D, _ = snf(M)
    return [D[i, i] for i in range(min(D.shape))]


def is_smith_form(D: IntMatrix) -> bool:
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j and D[i, j]:
                return False
    diag = [D[i, i] for i in range(min(D.shape))]
    if any(d < 0 for d in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a and b % a:
            return False
    return True


def coker_ker(M: IntMatrix) -> tuple[AbelianGroup, int]:
    """``(Z^rows / image(M), rank of ker(M))`` via the Smith normal form."""
    diag = invariant_factors(M)
    rank = sum(1 for d in diag if d)
    coker = AbelianGroup(free_rank=M.rows - rank, torsion=tuple(d for d in diag if d > 1))
    return coker, M.cols - rank


# ---------------------------------------------------------------------------
# Powers and orders


def matrix_pow(M: IntMatrix, k: int) -> IntMatrix:
    if not M.is_square:
        raise PreconditionError(f"power of a non-square {M.rows}x{M.cols} matrix")
    if k < 0:
        raise PreconditionError("negative exponent")
    result = IntMatrix.identity(M.rows)
    base = M
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def is_nontrivial_unipotent(M: IntMatrix) -> bool:
    """True iff ``M != I`` and ``M - I`` is nilpotent, which forces infinite order."""
    N = M - IntMatrix.identity(M.rows)
    if N.is_zero():
        return False
    return matrix_pow(N, max(M.rows, 2)).is_zero()


def matrix_order(M: IntMatrix, search_bound: int = 1000) -> OrderResult:
    """Multiplicative order of a unimodular matrix.

    Returns ``Infinite()`` only on a unipotent certificate, ``Finite(m)`` for
    the least ``m <= search_bound`` with ``M**m == I``, and raises
    :class:`OrderSearchExhausted` otherwise.
    """
    if not M.is_square:
        raise PreconditionError("order of a non-square matrix")
    if search_bound < 1:
        raise PreconditionError("search_bound must be positive")
    d = det(M)
    if d not in (1, -1):
        raise PreconditionError(f"matrix is not invertible over Z (det = {d})")
    if is_nontrivial_unipotent(M):
        return Infinite()
    P = M
    for m in range(1, search_bound + 1):
        if P.is_identity():
            return Finite(m)
        P = P @ M
    raise OrderSearchExhausted(search_bound)


def is_unimodular(M: IntMatrix) -> bool:
    return M.is_square and det(M) in (1, -1)


def divides(a: int, b: int) -> bool:
    return b % a == 0 if a else b == 0


def lcm(*values: int) -> int:
    out = 1
    for x in values:
        out = out * x // gcd(out, x)
    return out
