import sys
from fractions import Fraction

from hypothesis import strategies as st

from asepgf.algebra import GapPolynomial, StepSeries

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def gap_polys(draw, max_terms=3, exps=(-3, 3)):
    items = draw(st.lists(st.tuples(st.integers(*exps), small_rationals), max_size=max_terms))
    return GapPolynomial(items)


@st.composite
def step_series(draw, order=None, max_order=12):
    if order is None:
        order = draw(st.integers(0, max_order))
    coeffs = draw(st.lists(gap_polys(), min_size=order + 1, max_size=order + 1))
    return StepSeries(coeffs, order)


@st.composite
def unit_series(draw, order=None, max_order=12):
    """Series whose constant coefficient is a single nonzero monomial."""
    s = draw(step_series(order=order, max_order=max_order))
    c = draw(small_rationals.filter(bool))
    k = draw(st.integers(-2, 2))
    return StepSeries([GapPolynomial.monomial(c, k)] + list(s.coefficients[1:]), s.order)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for result in sorted(module.RESULTS):
        terminalreporter.write_line(module.format_line(*result))
