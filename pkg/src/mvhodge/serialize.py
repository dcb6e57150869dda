"""Lossless JSON / CSV encodings for the exact objects.

Rationals are "num/den" strings, Gaussian rationals {"re", "im"}, series
{"minExp", "order", "coeffs"} with one tau-ascending list per exponent,
partition series a map from "a.b.c" keys in canonical order.  Output is
deterministic: no sets, no key sorting that would break canonical order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, is_dataclass

from .exact import Gaussian, Rational, format_rational, parse_rational
from .identities import IdentityReport
from .partitions import Partition
from .poly import TauPolynomial
from .pseries import PartitionSeries
from .series import LambdaSeries

__all__ = [
    "to_jsonable",
    "dumps",
    "gaussian_from_json",
    "series_from_json",
    "pseries_from_json",
    "report_to_dict",
    "reports_csv",
    "hurwitz_csv",
    "hurwitz_json",
]

_RATIONAL_TYPES = (type(Rational(0)),)


def _is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES) or (hasattr(x, "denominator") and not isinstance(x, (int, bool)))


def _gaussian(g: Gaussian) -> dict:
    return {"re": format_rational(g.re), "im": format_rational(g.im)}


def _series(s: LambdaSeries) -> dict:
    coeffs = []
    for e in range(s.min_exp, s.order + 1):
        coeffs.append([_gaussian(c) for c in s.coeff(e).coefficients])
    return {"minExp": s.min_exp, "order": s.order, "coeffs": coeffs}


def to_jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Partition):
        return list(x)
    if _is_rational(x):
        return format_rational(x)
    if isinstance(x, Gaussian):
        return _gaussian(x)
    if isinstance(x, TauPolynomial):
        return [_gaussian(c) for c in x.coefficients]
    if isinstance(x, LambdaSeries):
        return _series(x)
    if isinstance(x, PartitionSeries):
        return {str(mu): _series(s) for mu, s in x.items()}
    if isinstance(x, IdentityReport):
        return report_to_dict(x)
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if is_dataclass(x):
        return to_jsonable(asdict(x))
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(x) -> str:
    return json.dumps(to_jsonable(x), indent=2, ensure_ascii=False) + "\n"


def report_to_dict(r: IdentityReport) -> dict:
    out = {
        "name": r.name,
        "suite": r.extra.get("suite"),
        "params": to_jsonable(r.params),
        "passed": bool(r.passed),
        "left": to_jsonable(r.left),
        "right": to_jsonable(r.right),
        "provenance": {"left": r.provenance[0], "right": r.provenance[1]},
    }
    if r.detail:
        out["detail"] = r.detail
    return out


# -- decoding ----------------------------------------------------------------------


def gaussian_from_json(d) -> Gaussian:
    if isinstance(d, str):
        return Gaussian(parse_rational(d))
    return Gaussian(parse_rational(d["re"]), parse_rational(d["im"]))


def series_from_json(d: dict) -> LambdaSeries:
    coeffs = [TauPolynomial([gaussian_from_json(c) for c in cs]) for cs in d["coeffs"]]
    return LambdaSeries(int(d["minExp"]), coeffs, int(d["order"]))


def pseries_from_json(d: dict, weight_bound: int) -> PartitionSeries:
    return PartitionSeries(weight_bound, {Partition.parse(k): series_from_json(v) for k, v in d.items()})


# -- CSV ------------------------------------------------------------------------------


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def reports_csv(reports) -> str:
    rows = []
    for r in reports:
        d = report_to_dict(r)
        rows.append([
            d["suite"] or "",
            d["name"],
            json.dumps(d["params"], separators=(",", ":")),
            "pass" if d["passed"] else "FAIL",
            json.dumps(d["left"], separators=(",", ":")),
            json.dumps(d["right"], separators=(",", ":")),
            d.get("detail", ""),
        ])
    return _csv(rows, ["suite", "name", "params", "result", "left", "right", "detail"])


def hurwitz_csv(table, include_zero: bool = True) -> str:
    rows = [
        [g, str(mu), r, format_rational(h), m]
        for g, mu, r, h, m in table.rows()
        if include_zero or h != 0
    ]
    return _csv(rows, ["g", "mu", "r", "H", "method"])


def hurwitz_json(table, include_zero: bool = True, diff: bool = False) -> str:
    rows = [
        {"g": g, "mu": list(mu), "r": r, "H": format_rational(h), "method": m}
        for g, mu, r, h, m in table.rows()
        if include_zero or h != 0
    ]
    out = {"rows": rows}
    if diff:
        out["crossCheck"] = {
            "disagreements": [
                {"g": g, "mu": list(mu), "values": {k: format_rational(v) for k, v in vals.items()}}
                for (g, mu), vals in table.disagreements()
            ],
            "infeasible": [
                {"g": g, "mu": list(mu), "method": "oracle", "reason": why}
                for (g, mu), why in sorted(table.infeasible.items(), key=lambda kv: (sum(kv[0][1]), [-p for p in kv[0][1]], kv[0][0]))
            ],
        }
    return json.dumps(out, indent=2) + "\n"
