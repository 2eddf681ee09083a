"""Reference computations that share no code with the package."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd


def det_laplace(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * det_laplace(minor)
    return total


def determinantal_invariant_factors(rows, ncols=None):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_(k-1)."""
    m = len(rows)
    n = len(rows[0]) if rows else (ncols or 0)
    factors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, det_laplace([[rows[i][j] for j in cs] for i in rs]))
        if g == 0:
            factors.extend([0] * (min(m, n) - k + 1))
            break
        factors.append(g // prev)
        prev = g
    return factors


def q_brute(gram, q_basis, bits):
    total = sum(b * q for b, q in zip(bits, q_basis))
    r = len(bits)
    total += sum(bits[i] * bits[j] * gram[i][j] for i in range(r) for j in range(i + 1, r))
    return total % 2


def arf_symplectic(gram, q_basis):
    """Arf invariant via a symplectic basis {a_i, b_i}: sum q(a_i) q(b_i) mod 2.

    Vectors are tuples over Z/2; pairing and q are recomputed from the basis data.
    """
    r = len(gram)

    def pair(x, y):
        return sum(x[i] * gram[i][j] * y[j] for i in range(r) for j in range(r)) % 2

    def q(x):
        return q_brute(gram, q_basis, x)

    def add(x, y):
        return tuple((a + b) % 2 for a, b in zip(x, y))

    pool = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    total = 0
    while pool:
        a = pool.pop(0)
        idx = next((i for i, y in enumerate(pool) if pair(a, y)), None)
        if idx is None:
            raise ValueError("degenerate form")
        b = pool.pop(idx)
        total += q(a) * q(b)
        # project the rest onto the orthogonal complement of span(a, b)
        new = []
        for y in pool:
            if pair(y, b):
                y = add(y, a)
            if pair(y, a):
                y = add(y, b)
            new.append(y)
        pool = new
    return total % 2


def divisors_trial(n):
    return [d for d in range(1, n + 1) if n % d == 0]


# octonions by Cayley-Dickson doubling of quaternions (1, i, j, k)


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _qconj(a):
    return (a[0], -a[1], -a[2], -a[3])


def octonion_mul(x, y):
    """(a, b)(c, d) = (ac - d*b, da + bc*) on 8-tuples."""
    a, b, c, d = x[:4], x[4:], y[:4], y[4:]
    left = tuple(p - q for p, q in zip(_qmul(a, c), _qmul(_qconj(d), b)))
    right = tuple(p + q for p, q in zip(_qmul(d, a), _qmul(b, _qconj(c))))
    return left + right


def octonion_basis():
    """e_0..e_7 with e5 = e1 e4, e6 = e2 e4, e7 = e3 e4."""
    e = [tuple(int(i == j) for j in range(8)) for i in range(5)]
    e.extend(octonion_mul(e[i], e[4]) for i in (1, 2, 3))
    return e


def octonion_cross(u, v):
    """Imaginary part of the product of pure imaginary octonions, in basis e1..e7."""
    basis = octonion_basis()
    x = [Fraction(0)] * 8
    y = [Fraction(0)] * 8
    for i in range(7):
        for t in range(8):
            x[t] += u[i] * basis[i + 1][t]
            y[t] += v[i] * basis[i + 1][t]
    prod = octonion_mul(tuple(x), tuple(y))
    # express the imaginary part back in e1..e7 (each basis vector is +-unit)
    out = []
    for i in range(1, 8):
        out.append(sum(prod[t] * basis[i][t] for t in range(8)))
    return tuple(out)


def all_bit_vectors(r):
    return product((0, 1), repeat=r)
