"""JSON and CSV encodings of step series.

JSON layout of one series::

    {"kind": ..., "order": N, "homogeneous_degree": L,
     "coefficients": [{"t": n, "terms": [{"x": a, "value": "num/den"}]}]}

A marked series is a list of two such objects, each with a ``d_grade`` key.
CSV rows are ``t,x,d,value``; unmarked series use ``d = 0``.
"""
from __future__ import annotations

import csv
import io
from fractions import Fraction

from .algebra import GapPolynomial, MarkedSeries, StepSeries


def rational_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def series_to_dict(series: StepSeries, kind: str, d_grade: int | None = None) -> dict:
    out = {
        "kind": kind,
        "order": series.order,
        "homogeneous_degree": series.homogeneous_degree,
        "coefficients": [
            {"t": n, "terms": [{"x": a, "value": rational_str(c)} for a, c in poly]}
            for n, poly in enumerate(series)
        ],
    }
    if d_grade is not None:
        out["d_grade"] = d_grade
    return out


def series_from_dict(data: dict) -> StepSeries:
    order = data["order"]
    coeffs = [GapPolynomial()] * (order + 1)
    for entry in data["coefficients"]:
        coeffs[entry["t"]] = GapPolynomial(
            (term["x"], Fraction(term["value"])) for term in entry["terms"])
    return StepSeries(coeffs, order, homogeneous_degree=data.get("homogeneous_degree"))


def to_json_obj(series: StepSeries | MarkedSeries, kind: str):
    if isinstance(series, MarkedSeries):
        return [series_to_dict(s, kind, g) for g, s in enumerate(series.grades())]
    return series_to_dict(series, kind)


def from_json_obj(data) -> StepSeries | MarkedSeries:
    if isinstance(data, list):
        by_grade = {d["d_grade"]: series_from_dict(d) for d in data}
        return MarkedSeries(by_grade[0], by_grade[1])
    return series_from_dict(data)


def to_csv(series: StepSeries | MarkedSeries) -> str:
    grades = series.grades() if isinstance(series, MarkedSeries) else (series,)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "x", "d", "value"])
    for g, s in enumerate(grades):
        for n, poly in enumerate(s):
            for a, c in poly:
                writer.writerow([n, a, g, rational_str(c)])
    return buf.getvalue()


def from_csv(text: str, order: int, marked: bool = False,
             homogeneous_degree: int | None = None) -> StepSeries | MarkedSeries:
    grids = [[{} for _ in range(order + 1)] for _ in range(2 if marked else 1)]
    for row in csv.DictReader(io.StringIO(text)):
        grids[int(row["d"])][int(row["t"])][int(row["x"])] = Fraction(row["value"])
    series = [StepSeries([GapPolynomial(c) for c in grid], order,
                         homogeneous_degree=homogeneous_degree) for grid in grids]
    return MarkedSeries(*series) if marked else series[0]
