"""Coefficientwise comparison of closed forms against the walk oracle."""
from __future__ import annotations

from dataclasses import dataclass

from . import closed_form as cf
from . import oracle
from .algebra import StepSeries


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


def first_mismatch(a: StepSeries, b: StepSeries) -> str | None:
    if a.order != b.order:
        return f"orders differ ({a.order} vs {b.order})"
    for n in range(a.order + 1):
        if a[n] != b[n]:
            return f"t^{n}: {a[n]} != {b[n]}"
    return None


def _compare(label: str, got: StepSeries, want: StepSeries) -> Check:
    bad = first_mismatch(got, want)
    return Check(label, bad is None, bad or "")


def verify_kernel(max_L: int, order: int) -> list[Check]:
    checks = []
    for L in range(max_L + 1):
        for u in range(L + 1):
            got = cf.kernel_gf(cf.LatticeWalkSpec(L, u), order)
            checks.append(_compare(f"G L={L} u={u}", got, oracle.walk_counts(L, u, order)))
    return checks


def verify_return(max_m: int, order: int) -> list[Check]:
    checks = []
    for m in range(max_m + 1):
        want = oracle.endpoint_filtered_counts(m, m, m, order)
        checks.append(_compare(f"R m={m}", cf.return_gf(m, order), want))
        checks.append(_compare(f"R recursive m={m}", cf.return_gf_recursive(m, order), want))
    return checks


def verify_crossing(max_m: int, order: int) -> list[Check]:
    checks = []
    for m in range(1, max_m + 1):
        q = cf.crossing_gf(m, order)
        checks.append(_compare(f"Q m={m}", q, oracle.endpoint_filtered_counts(m, m, 0, order)))
        residual = cf.crossing_residual(m, q)
        checks.append(Check(f"Q residual m={m}", residual.is_zero(),
                            "" if residual.is_zero() else repr(residual)))
    return checks


def verify_two_type(max_m: int, order: int) -> list[Check]:
    checks = []
    for m in range(1, max_m + 1):
        got = cf.two_type_gf(cf.TwoTypeSpec(m, order))
        want = oracle.two_type_counts(m, order)
        checks.append(_compare(f"A m={m} d^0", got.d0, want.d0))
        checks.append(_compare(f"A m={m} d^1", got.d1, want.d1))
    return checks


THEOREMS = {
    1: (verify_kernel, 0),
    2: (verify_return, 0),
    3: (verify_crossing, 1),
    4: (verify_two_type, 1),
}
