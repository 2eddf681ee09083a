from math import factorial

import pytest

from dehntwist.bott import (
    ContactClass,
    ac_consistent_orders,
    ac_order_bounds,
    ac_pi1_bound,
    contact_modulus,
    divisors_from_factorization,
    factorial_factorization,
    harris_order,
    legendre_exponent,
    pi_O,
    pi_O_mod_U,
    primes_up_to,
    smooth_order_lcm,
    ustilovsky_class,
)
from dehntwist.errors import PreconditionError
from dehntwist.lattice import AbelianGroup, Bounded, lcm

from oracles import divisors_trial

Z = AbelianGroup(free_rank=1)
Z2 = AbelianGroup(torsion=(2,))
ZERO = AbelianGroup()


class TestBott:
    @pytest.mark.parametrize("i, expected", [(0, Z2), (1, Z2), (2, ZERO), (3, Z), (7, Z), (8, Z2), (11, Z)])
    def test_pi_O(self, i, expected):
        assert pi_O(i) == expected

    @pytest.mark.parametrize("i, expected", [(7, Z2), (9, ZERO), (15, Z2), (1, ZERO), (2, Z)])
    def test_pi_O_mod_U(self, i, expected):
        assert pi_O_mod_U(i) == expected

    def test_periodicity(self):
        for i in range(1, 65):
            assert pi_O(i + 8) == pi_O(i)
            assert pi_O_mod_U(i + 8) == pi_O_mod_U(i)

    def test_quoted_values(self):
        for n in range(2, 66, 2):
            assert pi_O_mod_U(n + 1) == (Z2 if n % 8 == 6 else ZERO)

    def test_errors(self):
        with pytest.raises(PreconditionError):
            pi_O(-1)
        with pytest.raises(PreconditionError):
            pi_O_mod_U(0)


class TestOrders:
    @pytest.mark.parametrize("n, expected", [(4, 48), (6, 720), (2, 2), (8, 80640)])
    def test_harris(self, n, expected):
        assert harris_order(n) == expected

    @pytest.mark.parametrize("n, expected", [(4, 48), (2, 4), (8, 80640)])
    def test_pi1_bound(self, n, expected):
        assert ac_pi1_bound(n) == expected

    def test_pi1_bound_covers_exact_sequence(self):
        for n in range(2, 41, 2):
            assert ac_pi1_bound(n) % (harris_order(n) * pi_O_mod_U(n + 1).order) == 0

    def test_odd_rejected(self):
        for fn in (harris_order, ac_pi1_bound, contact_modulus, ac_order_bounds):
            with pytest.raises(PreconditionError):
                fn(5)

    def test_harris_vs_contact_modulus(self):
        for n in range(2, 21, 2):
            assert harris_order(n) % contact_modulus(n) == 0
            assert harris_order(n) // contact_modulus(n) == 2

    def test_large_n_exact(self):
        assert harris_order(20) == 2 * factorial(20) == 4865804016353280000
        assert ac_order_bounds(20).upper == 16 * factorial(20)


class TestContactClass:
    @pytest.mark.parametrize(
        "k, n, expected",
        [(1, 4, ContactClass(0, 24)), (9, 4, ContactClass(4, 24)), (7, 6, ContactClass(3, 360)),
         (15, 4, ContactClass(7, 24)), (49, 4, ContactClass(0, 24)), (7, 2, ContactClass(0, 1))],
    )
    def test_examples(self, k, n, expected):
        assert ustilovsky_class(k, n) == expected

    @pytest.mark.parametrize("k", [3, 5, 2, 0, -1])
    def test_rejects_other_residues(self, k):
        with pytest.raises(PreconditionError):
            ustilovsky_class(k, 4)

    def test_periodic_in_2d(self):
        for n in range(2, 13, 2):
            d = contact_modulus(n)
            for k in range(1, 200):
                if k % 8 in (1, 7) and (k + 2 * d) % 8 in (1, 7):
                    assert ustilovsky_class(k + 2 * d, n) == ustilovsky_class(k, n)

    def test_class_validation(self):
        with pytest.raises(ValueError):
            ContactClass(24, 24)


class TestBounds:
    @pytest.mark.parametrize(
        "n, expected",
        [(4, Bounded(6, 384)), (8, Bounded(10080, 645120)), (6, Bounded(180, 11520)), (2, Bounded(2, 32))],
    )
    def test_examples(self, n, expected):
        assert ac_order_bounds(n) == expected

    def test_cross_module_consistency(self):
        for n in range(4, 21, 2):
            b = ac_order_bounds(n)
            assert b.upper % b.lower == 0
            assert b.upper % lcm(smooth_order_lcm(n), b.lower) == 0


class TestDivisors:
    def test_primes(self):
        assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
        assert primes_up_to(1) == []

    def test_legendre(self):
        for n in range(0, 30):
            for p in primes_up_to(30):
                e = 0
                f = factorial(n)
                while f % p == 0:
                    f //= p
                    e += 1
                assert legendre_exponent(n, p) == e

    @pytest.mark.parametrize("n", [4, 5, 6, 8])
    def test_divisors_match_trial_division(self, n):
        fact = factorial_factorization(n, extra_twos=4)
        assert divisors_from_factorization(fact) == divisors_trial(16 * factorial(n))


class TestConsistentOrders:
    def test_n4(self):
        orders = ac_consistent_orders(4)
        assert min(orders) % 6 == 0
        assert 384 in orders
        assert orders == [48, 96, 192, 384]

    def test_contract(self):
        for n in (4, 6, 8):
            orders = ac_consistent_orders(n)
            upper = 16 * factorial(n)
            assert orders
            assert orders == sorted(orders)
            assert all(upper % m == 0 and m % 2 == 0 for m in orders)
            assert all(m % (factorial(n) // 4) == 0 for m in orders)
            assert min(orders) >= factorial(n) // 4
            assert upper in orders

    def test_n6_multiples_of_180(self):
        assert all(m % 180 == 0 for m in ac_consistent_orders(6))

    def test_filter_by_brute_force(self):
        # every admissible j (j m = 0 mod 8), not just the least, over one period
        for n in (4, 6, 8):
            d = contact_modulus(n)
            upper = 16 * factorial(n)
            expected = [
                m for m in divisors_trial(upper) if m % 2 == 0
                and all((j * m // 2) % d == 0 for j in range(1, 65) if (j * m) % 8 == 0)
            ]
            assert ac_consistent_orders(n) == expected

    @pytest.mark.parametrize("n", [2, 3, 10, 5])
    def test_range(self, n):
        with pytest.raises(PreconditionError):
            ac_consistent_orders(n)
