"""Multispecies ASEP on a ring: state space, exact transition matrix and the
gap-coordinate projection for the two-type case ``lambda = (2, 1, 0^m)``.

Transition entries are kept symbolic as ``c0 + c1 * t``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial, prod
from typing import Sequence

from .algebra import as_rational

__all__ = [
    "SingularChain",
    "CorrespondenceViolation",
    "Lambda",
    "Word",
    "LinearEntry",
    "TransitionMatrix",
    "CorrespondenceReport",
    "state_space",
    "transition_matrix",
    "stationary",
    "stationary_vector",
    "gap_projection",
    "chain_walk_correspondence",
    "multinomial",
]

Word = tuple[int, ...]


class SingularChain(ArithmeticError):
    pass


class CorrespondenceViolation(AssertionError):
    pass


@dataclass(frozen=True)
class Lambda:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) < 2:
            raise ValueError("a ring needs n >= 2 sites")
        if any(p < 0 for p in parts):
            raise ValueError("parts must be nonnegative")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError("parts must be weakly decreasing")

    @classmethod
    def parse(cls, text: str) -> Lambda:
        return cls(tuple(int(s) for s in text.replace(" ", "").split(",") if s))

    @classmethod
    def two_type(cls, m: int) -> Lambda:
        return cls((2, 1) + (0,) * m)

    @property
    def n(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class LinearEntry:
    """The affine polynomial ``c0 + c1 t``."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)

    def __add__(self, other: LinearEntry) -> LinearEntry:
        return LinearEntry(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other: LinearEntry) -> LinearEntry:
        return LinearEntry(self.c0 - other.c0, self.c1 - other.c1)

    def __call__(self, t) -> Fraction:
        return self.c0 + self.c1 * as_rational(t)

    def __bool__(self):
        return bool(self.c0 or self.c1)

    def __str__(self):
        if not self.c1:
            return str(self.c0)
        if not self.c0:
            return f"{self.c1}*t"
        return f"{self.c0} + {self.c1}*t"


@dataclass(frozen=True)
class TransitionMatrix:
    states: tuple[Word, ...]
    entries: tuple[tuple[LinearEntry, ...], ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {w: i for i, w in enumerate(self.states)})

    def __getitem__(self, key: tuple[Word, Word]) -> LinearEntry:
        mu, nu = key
        return self.entries[self.index[mu]][self.index[nu]]

    def evaluate(self, t) -> list[list[Fraction]]:
        t = as_rational(t)
        return [[e(t) for e in row] for row in self.entries]

    def row_sums(self) -> list[LinearEntry]:
        out = []
        for row in self.entries:
            acc = LinearEntry()
            for e in row:
                acc = acc + e
            out.append(acc)
        return out


def multinomial(parts: Sequence[int]) -> int:
    return factorial(len(parts)) // prod(factorial(c) for c in Counter(parts).values())


def state_space(lam: Lambda) -> list[Word]:
    """Distinct arrangements of ``lam``, lexicographically descending."""
    return sorted(set(permutations(lam.parts)), reverse=True)


def _swap(word: Word, i: int, j: int) -> Word:
    w = list(word)
    w[i], w[j] = w[j], w[i]
    return tuple(w)


def transition_matrix(lam: Lambda) -> TransitionMatrix:
    """Exact transition matrix of ASEP(lambda).

    Interior pairs ``...ij...`` swap with weight ``t/n`` when ``i > j`` and
    ``1/n`` otherwise. The wrap pair (last letter ``j``, first letter ``i``)
    swaps with ``t/n`` when ``j > i`` and ``1/n`` otherwise. Contributions
    landing on the same target word add up. Equal letters never swap.
    """
    n = lam.n
    states = state_space(lam)
    index = {w: k for k, w in enumerate(states)}
    slow = LinearEntry(Fraction(0), Fraction(1, n))
    fast = LinearEntry(Fraction(1, n), Fraction(0))
    rows = []
    for mu in states:
        row = [LinearEntry()] * len(states)
        for pos in range(n - 1):
            i, j = mu[pos], mu[pos + 1]
            if i != j:
                k = index[_swap(mu, pos, pos + 1)]
                row[k] = row[k] + (slow if i > j else fast)
        i, j = mu[0], mu[-1]
        if i != j:
            k = index[_swap(mu, 0, n - 1)]
            row[k] = row[k] + (slow if j > i else fast)
        me = index[mu]
        off = LinearEntry()
        for k, e in enumerate(row):
            if k != me:
                off = off + e
        row[me] = LinearEntry(Fraction(1)) - off
        rows.append(tuple(row))
    return TransitionMatrix(tuple(states), tuple(rows))


def _nullspace(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right null space by exact Gauss-Jordan elimination."""
    rows = [list(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def stationary_vector(P: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Solve ``pi P = pi``, ``sum(pi) = 1`` exactly for a stochastic matrix."""
    size = len(P)
    # pi P = pi  <=>  (P^T - I) pi^T = 0
    system = [[P[j][i] - (1 if i == j else 0) for j in range(size)] for i in range(size)]
    basis = _nullspace(system)
    if len(basis) != 1:
        raise SingularChain(f"fixed-point space has dimension {len(basis)}")
    vec = basis[0]
    total = sum(vec)
    if total == 0:
        raise SingularChain("fixed-point vector cannot be normalized")
    return [v / total for v in vec]


def stationary(lam: Lambda, t_value) -> dict[Word, Fraction]:
    """Exact stationary distribution of ASEP(lambda) at ``t = t_value``.

    Raises :class:`SingularChain` if the fixed-point space is not one
    dimensional.
    """
    t_value = as_rational(t_value)
    if not 0 <= t_value <= 1:
        raise ValueError(f"t must lie in [0, 1], got {t_value}")
    tm = transition_matrix(lam)
    return dict(zip(tm.states, stationary_vector(tm.evaluate(t_value))))


def gap_projection(word: Sequence[int]) -> tuple[int, int]:
    """Hole counts ``(u, v)`` on the two arcs between the 1 and the 2.

    ``u`` counts the zeros met reading clockwise (increasing index, cyclically)
    from the 1 until the 2.
    """
    word = tuple(word)
    counts = Counter(word)
    if counts[2] != 1 or counts[1] != 1 or counts[0] < 1 or len(counts) != 3:
        raise ValueError(f"{word} is not an arrangement of (2, 1, 0, ..., 0)")
    n = len(word)
    one = word.index(1)
    u = 0
    k = (one + 1) % n
    while word[k] != 2:
        u += 1
        k = (k + 1) % n
    return u, word.count(0) - u


@dataclass
class CorrespondenceReport:
    m: int
    states: int
    hop_edges: set[tuple[int, int]]
    switch_states: set[tuple[int, int]]
    fiber_sizes: dict[int, int]

    def summary(self) -> str:
        return (f"m={self.m}: {self.states} words, hop edges "
                f"{sorted(self.hop_edges)}, switch gap states "
                f"{sorted(self.switch_states)}")


def chain_walk_correspondence(m: int) -> CorrespondenceReport:
    """Check that ASEP(2,1,0^m) projects onto the (m+1)-point path graph.

    Particle-hole swaps must move ``u`` by one, 2-1 swaps must only occur
    with the particles adjacent and exchange ``(u, 0)`` with ``(0, u)``, and
    the hop edges in gap coordinates must be exactly ``{k, k+1}``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    lam = Lambda.two_type(m)
    tm = transition_matrix(lam)
    hop_edges: set[tuple[int, int]] = set()
    switch_states: set[tuple[int, int]] = set()
    for mu in tm.states:
        gu, gv = gap_projection(mu)
        for nu in tm.states:
            if nu == mu or not tm[mu, nu]:
                continue
            moved = [k for k in range(lam.n) if mu[k] != nu[k]]
            letters = {mu[k] for k in moved}
            hu, hv = gap_projection(nu)
            if 0 in letters:
                if (hu - gu, hv - gv) not in ((1, -1), (-1, 1)):
                    raise CorrespondenceViolation(
                        f"hop {mu} -> {nu} moves gap {(gu, gv)} -> {(hu, hv)}")
                hop_edges.add((min(gu, hu), max(gu, hu)))
            else:
                if gu != 0 and gv != 0:
                    raise CorrespondenceViolation(
                        f"2-1 swap {mu} -> {nu} at non-adjacent gap {(gu, gv)}")
                if (hu, hv) != (gv, gu):
                    raise CorrespondenceViolation(
                        f"2-1 swap {mu} -> {nu} maps {(gu, gv)} to {(hu, hv)}")
                switch_states.add((gu, gv))
    expected = {(k, k + 1) for k in range(m)}
    if hop_edges != expected:
        raise CorrespondenceViolation(
            f"hop edges {sorted(hop_edges)} differ from path graph {sorted(expected)}")
    fibers = Counter(gap_projection(w)[0] for w in tm.states)
    if set(fibers) != set(range(m + 1)) or any(c != lam.n for c in fibers.values()):
        raise CorrespondenceViolation(f"fiber sizes {dict(fibers)}")
    # every adjacent configuration must admit a switch
    if switch_states != {(m, 0), (0, m)}:
        raise CorrespondenceViolation(f"switch states {sorted(switch_states)}")
    return CorrespondenceReport(m, len(tm.states), hop_edges, switch_states, dict(fibers))
