"""Almost-complex mapping class group: homotopy group tables and order bounds.

All factorials are exact Python ints.  The structures involved (the
standard complex structure on T*S^n and the space of almost-complex
structures agreeing with it at infinity) have no computational model here;
only the arithmetic they feed into does.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd

from .classification import Category, twist_order
from .errors import PreconditionError
from .lattice import AbelianGroup, Bounded, Finite, Ambiguous, lcm

# pi_i(O) for i mod 8
_BOTT_O = (
    AbelianGroup(torsion=(2,)),
    AbelianGroup(torsion=(2,)),
    AbelianGroup(),
    AbelianGroup(free_rank=1),
    AbelianGroup(),
    AbelianGroup(),
    AbelianGroup(),
    AbelianGroup(free_rank=1),
)

BOTT = "Bott periodicity for the stable orthogonal group"
HARRIS = "Harris, homotopy groups of O(2n)/U(n)"
USTILOVSKY = "Ustilovsky / Morita, almost-contact class of the Brieskorn sphere"

CONSISTENT_ORDERS_RANGE = range(4, 9)


def _require_even(n: int, minimum: int = 2) -> None:
    if n % 2 or n < minimum:
        raise PreconditionError(f"n must be even and >= {minimum}, got {n}")


def pi_O(i: int) -> AbelianGroup:
    if i < 0:
        raise PreconditionError("homotopy degree must be >= 0")
    return _BOTT_O[i % 8]


def pi_O_mod_U(i: int) -> AbelianGroup:
    """``pi_i(O/U) = pi_(i+1)(O)``, since O/U is a double loop space of Z x BO."""
    if i < 1:
        raise PreconditionError("homotopy degree must be >= 1")
    return pi_O(i + 1)


def harris_order(n: int) -> int:
    """Order of ``pi_(2n+1)(O(2n)/U(n))``: ``2 n!`` if 4 | n, else ``n!``."""
    _require_even(n)
    return 2 * factorial(n) if n % 4 == 0 else factorial(n)


def ac_pi1_bound(n: int) -> int:
    """``2 n!``, a multiple of the order of pi_1 of the almost-complex structures."""
    _require_even(n)
    return 2 * factorial(n)


def contact_modulus(n: int) -> int:
    """Order ``d`` of ``pi_(2n+1)(SO(2n+1)/U(n))``."""
    _require_even(n)
    return factorial(n) if n % 4 == 0 else factorial(n) // 2


@dataclass(frozen=True)
class ContactClass:
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} not reduced mod {self.modulus}")

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus}"


def ustilovsky_class(k: int, n: int) -> ContactClass:
    """Almost-contact class of ``X_{tau^k} = S^(2n+1)`` for ``k = +-1 mod 8``."""
    _require_even(n)
    if k < 1:
        raise PreconditionError(f"twist power must be >= 1, got {k}")
    if k % 8 not in (1, 7):
        raise PreconditionError(f"class is only known for k = +-1 mod 8, got k = {k}")
    d = contact_modulus(n)
    return ContactClass((k - 1) // 2 % d, d)


def ac_order_bounds(n: int) -> Bounded:
    """The order divides ``16 n!`` and is divisible by ``n!/4``.

    For ``n = 2`` the lower bound ``n!/4`` is not an integer; the smooth order
    2 (which the almost-complex order maps onto) is used instead.
    """
    _require_even(n)
    upper = 16 * factorial(n)
    lower = 2 if n == 2 else factorial(n) // 4
    return Bounded(lower, upper)


# ---------------------------------------------------------------------------
# divisor enumeration


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [p for p, flag in enumerate(sieve) if flag]


def legendre_exponent(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n!``."""
    e, q = 0, p
    while q <= n:
        e += n // q
        q *= p
    return e


def factorial_factorization(n: int, extra_twos: int = 0) -> dict[int, int]:
    """Prime factorization of ``2**extra_twos * n!``."""
    fact = {p: legendre_exponent(n, p) for p in primes_up_to(n)}
    if extra_twos:
        fact[2] = fact.get(2, 0) + extra_twos
    return fact


def divisors_from_factorization(fact: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in sorted(fact.items()):
        divs = [d * p ** i for d in divs for i in range(e + 1)]
    return sorted(divs)


def survives_contact_filter(m: int, d: int) -> bool:
    """Is order ``m`` compatible with ``X_tau = X_{tau^(1+jm)}`` as almost-contact manifolds?

    Only the branch ``1 + jm = 1 mod 8`` is used.  The least such ``j`` is
    ``8/gcd(m, 8)``; every other admissible ``j`` is a multiple of it.
    """
    j0 = 8 // gcd(m, 8)
    return (j0 * m // 2) % d == 0


def ac_consistent_orders(n: int) -> list[int]:
    """Even divisors of ``16 n!`` that survive the contact-class filter."""
    if n not in CONSISTENT_ORDERS_RANGE or n % 2:
        raise PreconditionError(f"enumeration is limited to even 4 <= n <= 8, got {n}")
    d = contact_modulus(n)
    candidates = divisors_from_factorization(factorial_factorization(n, extra_twos=4))
    return [m for m in candidates if m % 2 == 0 and survives_contact_filter(m, d)]


def smooth_order_lcm(n: int) -> int:
    """lcm of every possible smooth order of the twist for even ``n``."""
    result = twist_order(Category.DIFF, n)
    if isinstance(result, Finite):
        return result.order
    if isinstance(result, Ambiguous):
        return lcm(*result.candidates)
    raise PreconditionError(f"smooth order is not finite for n = {n}")
