import pytest

from dehntwist.errors import PreconditionError
from dehntwist.lattice import Finite, Infinite, IntMatrix, is_nontrivial_unipotent, matrix_pow
from dehntwist.twist import (
    RelativeTwistAction,
    enumerate_homology_actions,
    homological_order,
    pairing_constraint,
    twist_matrix,
    zero_section_self_intersection,
)

I2 = IntMatrix.identity(2)


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, [[1, -1], [0, 1]]),
        (2, [[-1, 1], [0, 1]]),
        (3, [[1, 1], [0, 1]]),
        (4, [[-1, -1], [0, 1]]),
    ],
)
def test_twist_matrix(n, expected):
    assert twist_matrix(n).matrix == IntMatrix(expected)


def test_twist_matrix_rejects_n0():
    with pytest.raises(PreconditionError):
        twist_matrix(0)


def test_action_fixes_fibre_boundary():
    for n in range(1, 30):
        m = twist_matrix(n).matrix
        assert (m[1, 0], m[1, 1]) == (0, 1)


@pytest.mark.parametrize("n, expected", [(3, Infinite()), (2, Finite(2)), (10, Finite(2)), (1, Infinite())])
def test_homological_order(n, expected):
    assert homological_order(n) == expected


def test_odd_n_never_returns_to_identity():
    for n in (1, 3, 5, 7):
        m = twist_matrix(n).matrix
        assert is_nontrivial_unipotent(m)
        P = m
        for _ in range(1000):
            assert not P.is_identity()
            P = P @ m


def test_self_intersection_constant():
    assert [zero_section_self_intersection(n) for n in (2, 4, 6, 8)] == [-2, 2, -2, 2]
    with pytest.raises(PreconditionError):
        zero_section_self_intersection(3)


class TestPairingConstraint:
    @pytest.mark.parametrize("n", [2, 4, 6, 100])
    def test_identity(self, n):
        assert pairing_constraint(1, 0, n)

    def test_lemma_element(self):
        assert pairing_constraint(-1, -1, 4)

    def test_rejects(self):
        assert not pairing_constraint(-1, 0, 4)
        assert not pairing_constraint(1, 1, 4)

    def test_odd_n_rejected(self):
        with pytest.raises(PreconditionError):
            pairing_constraint(1, 0, 3)

    def test_twist_preserves_pairing(self):
        for n in range(2, 101, 2):
            t = twist_matrix(n)
            assert pairing_constraint(t.epsilon, t.A, n)


class TestEnumeration:
    # brute-force outputs, checked by hand against (2(-1)^(n/2) A + 1) eps = 1
    @pytest.mark.parametrize(
        "n, nonidentity",
        [(2, [[-1, 1], [0, 1]]), (4, [[-1, -1], [0, 1]]), (6, [[-1, 1], [0, 1]])],
    )
    def test_two_elements(self, n, nonidentity):
        mats = {a.matrix for a in enumerate_homology_actions(n, 10)}
        assert mats == {I2, IntMatrix(nonidentity)}

    def test_independent_of_range(self):
        for n in range(2, 41, 2):
            ref = enumerate_homology_actions(n, 1)
            for r in (2, 5, 16, 100):
                assert enumerate_homology_actions(n, r) == ref

    def test_twist_is_the_nonidentity_element(self):
        for n in range(2, 41, 2):
            actions = enumerate_homology_actions(n)
            (other,) = [a for a in actions if not a.is_identity]
            assert other == twist_matrix(n)
            assert matrix_pow(other.matrix, 2) == I2

    def test_odd_n_rejected(self):
        with pytest.raises(PreconditionError):
            enumerate_homology_actions(5)

    def test_bad_epsilon(self):
        with pytest.raises(ValueError):
            RelativeTwistAction(2, 0, 0)
