import pytest

from asepgf.algebra import GapPolynomial, StepSeries
from asepgf.oracle import (
    endpoint_filtered_counts,
    two_type_counts,
    walk_counts,
    walk_counts_matrix,
)

import brute


def test_two_point_return_walk():
    assert walk_counts(1, 1, 4)[2][1] == 1


def test_three_point_two_steps():
    assert walk_counts(2, 2, 4)[2] == GapPolynomial({2: 1, 0: 1})


@pytest.mark.parametrize("L,u", [(0, 0), (3, 1), (5, 5)])
def test_empty_walk(L, u):
    assert walk_counts(L, u, 3)[0] == GapPolynomial.monomial(1, u)


@pytest.mark.parametrize("L", range(4))
@pytest.mark.parametrize("n", range(9))
def test_matches_sequence_listing(L, n):
    for u in range(L + 1):
        assert walk_counts(L, u, n)[n] == GapPolynomial(brute.walks(L, u, n))


@pytest.mark.parametrize("L", range(6))
def test_dp_agrees_with_matrix_powers(L):
    for u in range(L + 1):
        assert walk_counts(L, u, 20) == walk_counts_matrix(L, u, 20)


@pytest.mark.parametrize("L", range(6))
def test_reflection(L):
    for u in range(L + 1):
        assert walk_counts(L, u, 12).reflect(L) == walk_counts(L, L - u, 12)


def test_nonnegative_integer_counts():
    for poly in walk_counts(4, 2, 15):
        for _, c in poly:
            assert c.denominator == 1 and c > 0


def test_endpoint_examples():
    assert endpoint_filtered_counts(1, 1, 1, 6).scalars() == [1, 0, 1, 0, 1, 0, 1]
    assert endpoint_filtered_counts(2, 2, 0, 6).scalars() == [0, 0, 1, 0, 2, 0, 4]
    for L in range(4):
        for u in range(L + 1):
            assert endpoint_filtered_counts(L, u, u, 2)[0] == GapPolynomial.constant(1)


@pytest.mark.parametrize("L", range(5))
def test_parity(L):
    for u in range(L + 1):
        for w in range(L + 1):
            for n, c in enumerate(endpoint_filtered_counts(L, u, w, 14).scalars()):
                if c:
                    assert n % 2 == abs(u - w) % 2


def test_endpoint_rejects_bad_coordinates():
    with pytest.raises(ValueError):
        endpoint_filtered_counts(2, 3, 0, 4)


def test_two_type_small_orders():
    a = two_type_counts(1, 1)
    assert a.d0[0] == GapPolynomial({1: 1}) and a.d1[0] == GapPolynomial({1: 1})
    assert a.d0[1] == GapPolynomial.constant(2) and a.d1[1] == GapPolynomial.constant(1)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", range(7))
def test_two_type_matches_sequence_listing(m, n):
    listing = brute.two_type_walks(m, n)
    assert {d for d, _ in listing} <= {0, 1}
    got = two_type_counts(m, n)
    for g, grade in enumerate(got.grades()):
        want = GapPolynomial({a: c for (d, a), c in listing.items() if d == g})
        assert grade[n] == want


@pytest.mark.parametrize("m", [1, 2, 4])
def test_switches_disabled(m):
    a = two_type_counts(m, 12, switches=False)
    assert a.d1.is_zero()
    assert a.d0 == walk_counts(m, m, 12)


def test_two_type_requires_holes():
    with pytest.raises(ValueError):
        two_type_counts(0, 3)
