"""Brute-force walk enumeration used as ground truth for the closed forms.

Walks live on the path graph ``0 - 1 - ... - L``. A walk's endpoint is
marked by ``x^a``; every unit step costs one ``t``. Counts are exact
integers obtained by dynamic programming over step sequences.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .algebra import GapPolynomial, MarkedSeries, StepSeries

__all__ = [
    "TwoTypeState",
    "walk_counts",
    "walk_counts_matrix",
    "endpoint_filtered_counts",
    "two_type_counts",
]


def _check_point(L: int, a: int, name: str) -> None:
    if L < 0:
        raise ValueError(f"L must be >= 0, got {L}")
    if not 0 <= a <= L:
        raise ValueError(f"{name}={a} outside [0, {L}]")


def _count_table(L: int, start_u: int, order: int) -> list[list[int]]:
    """Row n holds the number of n-step walks from start_u to each point."""
    row = [0] * (L + 1)
    row[start_u] = 1
    table = [row]
    for _ in range(order):
        nxt = [0] * (L + 1)
        for a, c in enumerate(row):
            if c:
                if a > 0:
                    nxt[a - 1] += c
                if a < L:
                    nxt[a + 1] += c
        row = nxt
        table.append(row)
    return table


def walk_counts(L: int, start_u: int, order: int) -> StepSeries:
    """Walk counts from ``start_u`` on ``[0, L]``, endpoint marked by ``x``."""
    _check_point(L, start_u, "start_u")
    table = _count_table(L, start_u, order)
    return StepSeries([GapPolynomial(enumerate(row)) for row in table], order,
                      homogeneous_degree=L)


def walk_counts_matrix(L: int, start_u: int, order: int) -> StepSeries:
    """Same counts as :func:`walk_counts`, via powers of the adjacency matrix."""
    _check_point(L, start_u, "start_u")
    size = L + 1
    adj = [[1 if abs(i - j) == 1 else 0 for j in range(size)] for i in range(size)]
    power = [[int(i == j) for j in range(size)] for i in range(size)]
    coeffs = []
    for _ in range(order + 1):
        coeffs.append(GapPolynomial(enumerate(power[start_u])))
        power = [[sum(power[i][k] * adj[k][j] for k in range(size))
                  for j in range(size)] for i in range(size)]
    return StepSeries(coeffs, order, homogeneous_degree=L)


def endpoint_filtered_counts(L: int, start_u: int, end_u: int, order: int) -> StepSeries:
    """x-free series counting walks from ``start_u`` to ``end_u``."""
    _check_point(L, start_u, "start_u")
    _check_point(L, end_u, "end_u")
    table = _count_table(L, start_u, order)
    return StepSeries.from_scalars([row[end_u] for row in table], order)


@dataclass(frozen=True, order=True)
class TwoTypeState:
    """Lattice coordinate plus the parity of switches performed so far."""

    a: int
    sigma: int


def two_type_counts(m: int, order: int, switches: bool = True) -> MarkedSeries:
    """Switch-marked walk counts for the two-type model, started at ``(m, 0)``.

    Hops ``a -> a +- 1`` cost one ``t``. Switches are free: ``(m, 0) -> (m, 1)``
    is marked ``d`` and ``(0, 1) -> (0, 0)`` is marked ``1/d``. The endpoint is
    marked ``x^a`` whatever the parity. The net power of ``d`` is tracked
    separately from ``sigma`` and checked to lie in ``{0, 1}``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    def switch_closure(layer):
        # Two switches in a row are impossible for m >= 1, so one pass suffices.
        out = defaultdict(int, layer)
        for (state, dpow), c in layer.items():
            if not switches:
                continue
            if state.a == m and state.sigma == 0:
                out[(TwoTypeState(m, 1), dpow + 1)] += c
            elif state.a == 0 and state.sigma == 1:
                out[(TwoTypeState(0, 0), dpow - 1)] += c
        return out

    def hop(layer):
        out = defaultdict(int)
        for (state, dpow), c in layer.items():
            for b in (state.a - 1, state.a + 1):
                if 0 <= b <= m:
                    out[(TwoTypeState(b, state.sigma), dpow)] += c
        return out

    layer = switch_closure({(TwoTypeState(m, 0), 0): 1})
    grades: tuple[list, list] = ([], [])
    for n in range(order + 1):
        if n:
            layer = switch_closure(hop(layer))
        buckets = ({}, {})
        for (state, dpow), c in layer.items():
            if dpow not in (0, 1) or dpow != state.sigma:
                raise AssertionError(f"net d-power {dpow} at state {state}")
            bucket = buckets[dpow]
            bucket[state.a] = bucket.get(state.a, 0) + c
        for g in (0, 1):
            grades[g].append(GapPolynomial(buckets[g]))
    return MarkedSeries(StepSeries(grades[0], order, homogeneous_degree=m),
                        StepSeries(grades[1], order, homogeneous_degree=m))
