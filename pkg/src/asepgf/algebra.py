"""Exact coefficient arithmetic.

Three layers: :class:`~fractions.Fraction` for scalars, :class:`GapPolynomial`
(sparse Laurent polynomials in the position marker ``x``) and
:class:`StepSeries` (dense truncated power series in the step marker ``t``
whose coefficients are gap polynomials). A :class:`MarkedSeries` holds the
``d^0`` and ``d^1`` components of a switch-marked series.

All values are immutable; every operation returns a new object.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Mapping, Sequence

__all__ = [
    "AlgebraError",
    "NonInvertibleLeadingTerm",
    "NotASquare",
    "NonzeroLowOrderTerm",
    "SupportViolation",
    "GapPolynomial",
    "StepSeries",
    "MarkedSeries",
    "as_rational",
    "series_add",
    "series_sub",
    "series_mul",
    "series_div",
    "series_sqrt",
    "series_shift_down",
]


class AlgebraError(ArithmeticError):
    pass


class NonInvertibleLeadingTerm(AlgebraError):
    pass


class NotASquare(AlgebraError):
    pass


class NonzeroLowOrderTerm(AlgebraError):
    pass


class SupportViolation(AlgebraError):
    """A coefficient has x-exponents outside the lattice range [0, L]."""


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _rational_sqrt(c: Fraction) -> Fraction | None:
    if c < 0:
        return None
    num, den = c.numerator, c.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


class GapPolynomial:
    """Laurent polynomial in ``x`` with exact rational coefficients.

    ``y`` is eliminated by setting it to 1. When ``homogeneous_degree`` is
    ``L`` the monomial ``x^a`` stands for ``x^a y^(L-a)``.
    """

    __slots__ = ("_terms", "homogeneous_degree")

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = (),
                 homogeneous_degree: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for exp, coeff in items:
            c = as_rational(coeff)
            if c:
                acc[int(exp)] = acc.get(int(exp), Fraction(0)) + c
        object.__setattr__(self, "_terms",
                           {e: acc[e] for e in sorted(acc) if acc[e] != 0})
        if homogeneous_degree is not None and homogeneous_degree < 0:
            raise ValueError("homogeneous_degree must be nonnegative")
        object.__setattr__(self, "homogeneous_degree", homogeneous_degree)

    def __setattr__(self, name, value):
        raise AttributeError("GapPolynomial is immutable")

    @classmethod
    def monomial(cls, coeff=1, exp: int = 0) -> GapPolynomial:
        return cls({exp: coeff})

    @classmethod
    def constant(cls, coeff=1) -> GapPolynomial:
        return cls({0: coeff})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GapPolynomial.constant(other)
        if not isinstance(other, GapPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"GapPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                parts.append(f"{head}x^{e}" if e != 1 else f"{head}x")
        return " + ".join(parts).replace("+ -", "- ")

    @property
    def min_exponent(self) -> int | None:
        return next(iter(self._terms), None)

    @property
    def max_exponent(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __neg__(self):
        return GapPolynomial({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GapPolynomial.constant(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return GapPolynomial(acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GapPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GapPolynomial({e: c * other for e, c in self._terms.items()})
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + c1 * c2
        return GapPolynomial(acc)

    __rmul__ = __mul__

    def shift(self, k: int) -> GapPolynomial:
        """Multiply by ``x^k``."""
        return GapPolynomial({e + k: c for e, c in self._terms.items()})

    def reflect(self, L: int) -> GapPolynomial:
        """Swap the roles of x and y on a lattice of size L (a -> L - a)."""
        return GapPolynomial({L - e: c for e, c in self._terms.items()},
                             homogeneous_degree=self.homogeneous_degree)

    def div_monomial(self, mono: GapPolynomial) -> GapPolynomial:
        if not mono.is_monomial():
            raise NonInvertibleLeadingTerm(f"{mono} is not a monomial")
        (k, c), = mono._terms.items()
        return GapPolynomial({e - k: v / c for e, v in self._terms.items()})

    def evaluate(self, x=1) -> Fraction:
        x = as_rational(x)
        return sum((c * x ** e for e, c in self._terms.items()), Fraction(0))

    def with_degree(self, L: int) -> GapPolynomial:
        """Tag as homogeneous of degree L, checking every exponent is in [0, L]."""
        if self._terms and (self.min_exponent < 0 or self.max_exponent > L):
            raise SupportViolation(
                f"exponents {sorted(self._terms)} outside [0, {L}]")
        return GapPolynomial(self._terms, homogeneous_degree=L)

    def bihomogeneous(self) -> dict[tuple[int, int], Fraction]:
        """Terms keyed by (x-exponent, y-exponent); needs a homogeneous degree."""
        if self.homogeneous_degree is None:
            raise ValueError("homogeneous_degree is not set")
        L = self.homogeneous_degree
        return {(e, L - e): c for e, c in self._terms.items()}


def _coerce_poly(value) -> GapPolynomial:
    if isinstance(value, GapPolynomial):
        return value
    if isinstance(value, Mapping):
        return GapPolynomial(value)
    return GapPolynomial.constant(value)


class StepSeries:
    """Truncated power series in ``t`` modulo ``t^(order+1)``."""

    __slots__ = ("_coeffs", "order", "homogeneous_degree")

    def __init__(self, coefficients: Sequence, order: int | None = None,
                 homogeneous_degree: int | None = None):
        coeffs = [_coerce_poly(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [GapPolynomial()] * (order + 1 - len(coeffs))
        if homogeneous_degree is not None:
            coeffs = [c.with_degree(homogeneous_degree) for c in coeffs]
        object.__setattr__(self, "_coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "homogeneous_degree", homogeneous_degree)

    def __setattr__(self, name, value):
        raise AttributeError("StepSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> StepSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> StepSeries:
        return cls([1], order)

    @classmethod
    def from_scalars(cls, values: Sequence, order: int | None = None) -> StepSeries:
        return cls([GapPolynomial.constant(v) for v in values], order)

    @property
    def coefficients(self) -> tuple[GapPolynomial, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> GapPolynomial:
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, StepSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.order, self._coeffs))

    def __repr__(self):
        shown = " + ".join(f"({c})*t^{n}" for n, c in enumerate(self._coeffs) if c)
        return f"StepSeries({shown or '0'}, order={self.order})"

    def truncate(self, order: int) -> StepSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return StepSeries(self._coeffs[: order + 1], order)

    def with_degree(self, L: int) -> StepSeries:
        return StepSeries(self._coeffs, self.order, homogeneous_degree=L)

    def valuation(self) -> int | None:
        """Smallest t-power with a nonzero coefficient, None for the zero series."""
        return next((n for n, c in enumerate(self._coeffs) if c), None)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def scalars(self) -> list[Fraction]:
        """Coefficients as rationals; each must be free of x."""
        out = []
        for n, c in enumerate(self._coeffs):
            if not c.is_constant():
                raise ValueError(f"t^{n} coefficient {c} depends on x")
            out.append(c[0])
        return out

    def at_x(self, x=1) -> list[Fraction]:
        return [c.evaluate(x) for c in self._coeffs]

    def reflect(self, L: int) -> StepSeries:
        return StepSeries([c.reflect(L) for c in self._coeffs], self.order,
                          homogeneous_degree=self.homogeneous_degree)

    def shift_x(self, k: int) -> StepSeries:
        return StepSeries([c.shift(k) for c in self._coeffs], self.order)

    def scale(self, factor) -> StepSeries:
        factor = as_rational(factor)
        return StepSeries([c * factor for c in self._coeffs], self.order)

    def __neg__(self):
        return StepSeries([-c for c in self._coeffs], self.order)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return series_div(self, other)


class MarkedSeries:
    """Series graded by the switch marker ``d``: ``d0 + d * d1``."""

    __slots__ = ("d0", "d1")

    def __init__(self, d0: StepSeries, d1: StepSeries):
        if d0.order != d1.order:
            raise ValueError(f"grade orders differ: {d0.order} vs {d1.order}")
        object.__setattr__(self, "d0", d0)
        object.__setattr__(self, "d1", d1)

    def __setattr__(self, name, value):
        raise AttributeError("MarkedSeries is immutable")

    @property
    def order(self) -> int:
        return self.d0.order

    def grades(self) -> tuple[StepSeries, StepSeries]:
        return self.d0, self.d1

    def __eq__(self, other):
        if not isinstance(other, MarkedSeries):
            return NotImplemented
        return self.d0 == other.d0 and self.d1 == other.d1

    def __hash__(self):
        return hash((self.d0, self.d1))

    def __repr__(self):
        return f"MarkedSeries(d0={self.d0!r}, d1={self.d1!r})"


def series_add(a: StepSeries, b: StepSeries) -> StepSeries:
    order = min(a.order, b.order)
    return StepSeries([a[n] + b[n] for n in range(order + 1)], order)


def series_sub(a: StepSeries, b: StepSeries) -> StepSeries:
    order = min(a.order, b.order)
    return StepSeries([a[n] - b[n] for n in range(order + 1)], order)


def series_mul(a: StepSeries, b: StepSeries) -> StepSeries:
    order = min(a.order, b.order)
    out = []
    for n in range(order + 1):
        acc = GapPolynomial()
        for i in range(n + 1):
            if a[i] and b[n - i]:
                acc = acc + a[i] * b[n - i]
        out.append(acc)
    return StepSeries(out, order)


def series_div(a: StepSeries, b: StepSeries) -> StepSeries:
    """Quotient ``q`` with ``q * b == a`` modulo ``t^(order+1)``.

    The constant coefficient of ``b`` must be a single monomial ``c x^k``.
    """
    lead = b[0]
    if not lead.is_monomial():
        raise NonInvertibleLeadingTerm(
            f"constant coefficient {lead} of the divisor is not a unit monomial")
    order = min(a.order, b.order)
    q: list[GapPolynomial] = []
    for n in range(order + 1):
        acc = a[n]
        for i in range(n):
            if q[i] and b[n - i]:
                acc = acc - q[i] * b[n - i]
        q.append(acc.div_monomial(lead))
    return StepSeries(q, order)


def series_sqrt(a: StepSeries) -> StepSeries:
    """Square root with positive leading rational, by term recursion.

    Solves ``2 s_0 s_n = a_n - sum_{0<i<n} s_i s_{n-i}`` one coefficient at
    a time.
    """
    lead = a[0]
    if not lead.is_monomial():
        raise NotASquare(f"constant coefficient {lead} is not a monomial")
    (k, c), = lead.terms.items()
    root = _rational_sqrt(c)
    if k % 2 or root is None:
        raise NotASquare(f"constant coefficient {lead} is not a rational square")
    s0 = GapPolynomial.monomial(root, k // 2)
    two_s0 = s0 * 2
    s = [s0]
    for n in range(1, a.order + 1):
        acc = a[n]
        for i in range(1, n):
            if s[i] and s[n - i]:
                acc = acc - s[i] * s[n - i]
        s.append(acc.div_monomial(two_s0))
    return StepSeries(s, a.order)


def series_shift_down(a: StepSeries, k: int) -> StepSeries:
    """Divide by ``t^k``; the order drops by ``k``."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if k > a.order:
        raise ValueError(f"cannot shift order-{a.order} series down by {k}")
    for n in range(k):
        if a[n]:
            raise NonzeroLowOrderTerm(f"t^{n} coefficient {a[n]} is nonzero")
    return StepSeries(a.coefficients[k:], a.order - k)
