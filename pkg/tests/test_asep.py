from fractions import Fraction

import pytest

from asepgf.asep import (
    Lambda,
    LinearEntry,
    SingularChain,
    chain_walk_correspondence,
    gap_projection,
    multinomial,
    state_space,
    stationary,
    stationary_vector,
    transition_matrix,
)

F = Fraction
LAMBDAS = [(1, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0), (2, 1, 0, 0), (2, 1, 0, 0, 0), (3, 2, 1, 0)]


def test_state_space_examples():
    assert state_space(Lambda((1, 0))) == [(1, 0), (0, 1)]
    assert len(state_space(Lambda((2, 1, 0)))) == 6
    assert len(state_space(Lambda((1, 1, 0)))) == 3


@pytest.mark.parametrize("parts", LAMBDAS)
def test_state_count_is_multinomial(parts):
    assert len(state_space(Lambda(parts))) == multinomial(parts)


@pytest.mark.parametrize("parts", [(1,), (0, 1), (1, -1)])
def test_invalid_lambda(parts):
    with pytest.raises(ValueError):
        Lambda(parts)


def test_row_210():
    tm = transition_matrix(Lambda((2, 1, 0)))
    row = {nu: tm[(2, 1, 0), nu] for nu in tm.states}
    assert row[(1, 2, 0)] == LinearEntry(F(0), F(1, 3))
    assert row[(2, 0, 1)] == LinearEntry(F(0), F(1, 3))
    assert row[(0, 1, 2)] == LinearEntry(F(1, 3), F(0))
    assert row[(2, 1, 0)] == LinearEntry(F(2, 3), F(-2, 3))
    assert not row[(1, 0, 2)] and not row[(0, 2, 1)]


def test_row_100():
    tm = transition_matrix(Lambda((1, 0, 0)))
    assert tm[(1, 0, 0), (0, 1, 0)] == LinearEntry(F(0), F(1, 3))
    assert tm[(1, 0, 0), (0, 0, 1)] == LinearEntry(F(1, 3), F(0))
    assert tm[(1, 0, 0), (1, 0, 0)] == LinearEntry(F(2, 3), F(-1, 3))


def test_two_site_ring_accumulates():
    tm = transition_matrix(Lambda((1, 0)))
    assert tm[(1, 0), (0, 1)] == LinearEntry(F(1, 2), F(1, 2))


@pytest.mark.parametrize("parts", LAMBDAS)
def test_stochastic_for_all_t(parts):
    tm = transition_matrix(Lambda(parts))
    assert all(s == LinearEntry(F(1), F(0)) for s in tm.row_sums())
    for t in (F(0), F(1)):
        P = tm.evaluate(t)
        assert all(v >= 0 for row in P for v in row)


@pytest.mark.parametrize("parts", LAMBDAS)
def test_symmetric_and_uniform_at_t1(parts):
    lam = Lambda(parts)
    P = transition_matrix(lam).evaluate(1)
    assert all(P[i][j] == P[j][i] for i in range(len(P)) for j in range(len(P)))
    pi = stationary(lam, 1)
    assert set(pi.values()) == {F(1, len(P))}


@pytest.mark.parametrize("t", [F(0), F(1, 5), F(1, 2), F(1)])
def test_one_species_uniform(t):
    assert list(stationary(Lambda((1, 0, 0)), t).values()) == [F(1, 3)] * 3


@pytest.mark.parametrize("parts", LAMBDAS)
@pytest.mark.parametrize("t", [F(0), F(1, 3)])
def test_stationary_is_fixed_point(parts, t):
    lam = Lambda(parts)
    tm = transition_matrix(lam)
    pi = stationary(lam, t)
    vec = [pi[w] for w in tm.states]
    P = tm.evaluate(t)
    assert sum(vec) == 1
    assert [sum(vec[i] * P[i][j] for i in range(len(vec))) for j in range(len(vec))] == vec


def test_singular_chain():
    one, zero = F(1), F(0)
    reducible = [[one, zero], [zero, one]]
    with pytest.raises(SingularChain):
        stationary_vector(reducible)
    assert stationary_vector([[F(1, 2), F(1, 2)], [F(1, 4), F(3, 4)]]) == [F(1, 3), F(2, 3)]


def test_t_out_of_range():
    with pytest.raises(ValueError):
        stationary(Lambda((1, 0)), F(3, 2))


def test_gap_projection_examples():
    assert gap_projection((2, 1, 0)) == (1, 0)
    assert gap_projection((2, 0, 1)) == (0, 1)
    with pytest.raises(ValueError):
        gap_projection((1, 1, 0))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_gap_projection_rotation_invariant(m):
    for w in state_space(Lambda.two_type(m)):
        u, v = gap_projection(w)
        assert u + v == m
        for k in range(len(w)):
            assert gap_projection(w[k:] + w[:k]) == (u, v)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_correspondence(m):
    report = chain_walk_correspondence(m)
    assert report.hop_edges == {(k, k + 1) for k in range(m)}
    assert report.switch_states == {(m, 0), (0, m)}
    assert set(report.fiber_sizes.values()) == {m + 2}
    assert report.states == (m + 2) * (m + 1)
