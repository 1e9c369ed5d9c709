"""CSV and JSON renderings of run results.

CSV output is UTF-8 with LF line endings and unquoted fields; summary rows
start with ``#``.  Every function returns text so results can be cached and
compared byte for byte.
"""

from __future__ import annotations

import json

from .census import CensusRecord, PatternEntry

CENSUS_HEADER = ("p", "k", "t", "pattern", "splittable", "D", "witness", "Q_witness")


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return "-".join(map(str, value))
    return str(value)


def csv_text(header, rows) -> str:
    lines = [",".join(header)] if header else []
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "".join(line + "\n" for line in lines)


def _emitted(rec: CensusRecord, all_patterns: bool) -> list[PatternEntry]:
    return [e for e in rec.per_pattern if all_patterns or e.splittable]


def census_csv(records: list[CensusRecord], all_patterns: bool = False) -> str:
    rows = []
    for rec in records:
        for e in _emitted(rec, all_patterns):
            rows.append((rec.p, rec.k, rec.t, e.pattern, e.splittable, e.D, e.witness, e.Q_witness))
        rows.append(("#N", rec.N, rec.bound_leading, rec.nontrivial))
    return csv_text(CENSUS_HEADER, rows)


def census_object(rec: CensusRecord, all_patterns: bool = False) -> dict:
    return {
        "p": rec.p,
        "k": rec.k,
        "t": rec.t,
        "N": rec.N,
        "bound_leading": rec.bound_leading,
        "nontrivial": rec.nontrivial,
        "per_pattern": [
            {"pattern": list(e.pattern), "splittable": e.splittable, "D": e.D,
             "witness": list(e.witness) if e.witness else None, "Q_witness": e.Q_witness}
            for e in _emitted(rec, all_patterns)
        ],
    }


def json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def census_json(records: list[CensusRecord], all_patterns: bool = False) -> str:
    objs = [census_object(r, all_patterns) for r in records]
    return json_text(objs[0] if len(objs) == 1 else objs)


def _ints(field: str):
    return [int(x) for x in field.split("-")] if field else None


def parse_census_csv(text: str) -> list[dict]:
    """Read census CSV back into the JSON object layout."""
    lines = text.splitlines()
    if tuple(lines[0].split(",")) != CENSUS_HEADER:
        raise ValueError("not a census CSV")
    out, pending = [], []
    for line in lines[1:]:
        f = line.split(",")
        if f[0] == "#N":
            p, k, t = pending[0][:3] if pending else (None, None, None)
            out.append({"p": p, "k": k, "t": t, "N": int(f[1]), "bound_leading": float(f[2]),
                        "nontrivial": f[3] == "true",
                        "per_pattern": [row[3] for row in pending]})
            pending = []
            continue
        pending.append((int(f[0]), int(f[1]), int(f[2]), {
            "pattern": _ints(f[3]), "splittable": f[4] == "true", "D": int(f[5]),
            "witness": _ints(f[6]), "Q_witness": int(f[7]) if f[7] else None}))
    return out
