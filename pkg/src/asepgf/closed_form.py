"""Closed-form generating functions for walks on the linear simplex.

Everything is evaluated at ``y = 1``; results carry ``homogeneous_degree``
so the ``y`` exponents can be restored. ``G(L, u)`` below means the series of
walks on ``[0, L]`` started at ``u``, with the endpoint marked by ``x``.

The return and crossing series restore the factor ``t`` for each hop into
and out of an excursion:

    G(m+1, m+1) = (x^(m+1) + t G(m, m)) / (1 - t^2 R_m)
    G(m+1, m+1) = (x G(m, m) + t Q_m G(m, 0)) / (1 - t^2 Q_m^2)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    AlgebraError,
    GapPolynomial,
    MarkedSeries,
    StepSeries,
    series_shift_down,
    series_sqrt,
)

__all__ = [
    "XDependenceViolation",
    "LatticeWalkSpec",
    "TwoTypeSpec",
    "p_series",
    "kernel_gf",
    "return_gf",
    "return_ratio",
    "return_gf_recursive",
    "crossing_gf",
    "crossing_quotient",
    "crossing_residual",
    "two_type_gf",
    "Q0",
]

# Crossing series of the one-point lattice: only the empty walk.
Q0 = 1


class XDependenceViolation(AlgebraError):
    """A series that must be free of x has a coefficient depending on x."""


@dataclass(frozen=True)
class LatticeWalkSpec:
    L: int
    u: int

    def __post_init__(self):
        if self.L < 0:
            raise ValueError(f"L must be >= 0, got {self.L}")
        if not 0 <= self.u <= self.L:
            raise ValueError(f"u={self.u} outside [0, {self.L}]")

    @property
    def v(self) -> int:
        return self.L - self.u


@dataclass(frozen=True)
class TwoTypeSpec:
    m: int
    order: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.order < 0:
            raise ValueError("order must be nonnegative")


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")


def _t(order: int) -> StepSeries:
    return StepSeries([0, 1], order) if order >= 1 else StepSeries.zero(order)


def _power(s: StepSeries, k: int) -> StepSeries:
    out = StepSeries.one(s.order)
    base = s
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


def _require_x_free(s: StepSeries, what: str) -> StepSeries:
    for n, c in enumerate(s):
        if not c.is_constant():
            raise XDependenceViolation(f"{what}: t^{n} coefficient {c} depends on x")
    return s


@lru_cache(maxsize=None)
def p_series(order: int) -> StepSeries:
    """``(1 - sqrt(1 - 4t^2)) / (2t)`` truncated at ``t^order``."""
    _check_order(order)
    radicand = StepSeries.from_scalars([1, 0, -4], order + 1)
    numerator = StepSeries.one(order + 1) - series_sqrt(radicand)
    return series_shift_down(numerator, 1).scale(Fraction(1, 2))


@lru_cache(maxsize=None)
def _kernel(L: int, u: int, order: int) -> StepSeries:
    v = L - u
    p = p_series(order)
    one = StepSeries.one(order)
    x = GapPolynomial.monomial(1, 1)
    x_inv = GapPolynomial.monomial(1, -1)
    denom = one - _t(order) * StepSeries([x + x_inv], order)
    bottom = one - _power(p, 2 * L + 4)
    upper = (_power(p, v + 1) * (one - _power(p, 2 * u + 2))).shift_x(L + 1) / bottom
    lower = (_power(p, u + 1) * (one - _power(p, 2 * v + 2))).shift_x(-1) / bottom
    bracket = StepSeries([GapPolynomial.monomial(1, u)], order) - upper - lower
    return (bracket / denom).with_degree(L)


def kernel_gf(spec: LatticeWalkSpec, order: int) -> StepSeries:
    """Walks from ``spec.u`` on ``[0, spec.L]`` by the kernel-method formula.

    The prefactor ``1/(1 - (x/y + y/x)/(p + 1/p))`` is used in its reduced
    form ``1/(1 - t(x + 1/x))``. Intermediate coefficients span ``[-n, n]``;
    the result is checked to lie in ``[0, L]``.
    """
    _check_order(order)
    return _kernel(spec.L, spec.u, order)


def _g(L: int, u: int, order: int) -> StepSeries:
    return kernel_gf(LatticeWalkSpec(L, u), order)


def return_ratio(m: int, order: int) -> StepSeries:
    """``(x^(m+1) + t G(m, m)) / G(m+1, m+1)``, which equals ``1 - t^2 R_m``."""
    _check_order(order)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    head = StepSeries([GapPolynomial.monomial(1, m + 1)], order)
    ratio = (head + _t(order) * _g(m, m, order)) / _g(m + 1, m + 1, order)
    return _require_x_free(ratio, "return ratio")


def return_gf(m: int, order: int) -> StepSeries:
    """Walks on ``[0, m]`` that start and end at ``m``."""
    ratio = return_ratio(m, order + 2)
    return series_shift_down(StepSeries.one(order + 2) - ratio, 2)


def return_gf_recursive(m: int, order: int) -> StepSeries:
    """Same series by excursion decomposition: ``R_m = 1 / (1 - t^2 R_(m-1))``."""
    _check_order(order)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    one = StepSeries.one(order)
    t2 = StepSeries.from_scalars([0, 0, 1], order)
    r = one
    for _ in range(m):
        r = one / (one - t2 * r)
    return r


def _crossing_numerator(m: int, order: int) -> tuple[StepSeries, StepSeries]:
    big = _g(m + 1, m + 1, order)
    start = _g(m, m, order)
    far = _g(m, 0, order)
    disc = far * far + (big * (big - start.shift_x(1))).scale(4)
    return series_sqrt(disc) - far, big


def crossing_quotient(m: int, order: int) -> StepSeries:
    """``t Q_m``, the root of the segment quadratic with zero constant term."""
    _check_order(order)
    numerator, big = _crossing_numerator(m, order)
    return numerator / big.scale(2)


def crossing_gf(m: int, order: int) -> StepSeries:
    """Walks on ``[0, m]`` from ``m`` to ``0``; requires ``m >= 1``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    _check_order(order)
    numerator, big = _crossing_numerator(m, order + 1)
    q = series_shift_down(numerator, 1) / big.truncate(order).scale(2)
    return _require_x_free(q, "crossing quotient")


def crossing_residual(m: int, q: StepSeries) -> StepSeries:
    """``G(m+1) t^2 Q^2 + t G(m,0) Q + x G(m,m) - G(m+1)``; zero when ``q`` is right."""
    order = q.order
    big = _g(m + 1, m + 1, order)
    t = _t(order)
    return (big * t * t * q * q + t * _g(m, 0, order) * q
            + _g(m, m, order).shift_x(1) - big)


def two_type_gf(spec: TwoTypeSpec) -> MarkedSeries:
    """Switch-marked series of the two-type model with ``m`` holes.

    ``A = G(m,m) + R_m (d G(m,m) + Q_m G(m,0)) / (1 - Q_m^2)``, split by
    the power of ``d``.
    """
    m, order = spec.m, spec.order
    g_near = _g(m, m, order)
    g_far = _g(m, 0, order)
    r = return_gf(m, order)
    q = crossing_gf(m, order)
    cycle = StepSeries.one(order) - q * q
    d0 = g_near + r * q * g_far / cycle
    d1 = r * g_near / cycle
    return MarkedSeries(d0.with_degree(m), d1.with_degree(m))
