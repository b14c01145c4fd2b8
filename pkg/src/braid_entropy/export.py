"""CSV and JSON serialization of traces, fits and survey tables.

Every document starts with the effective configuration: a ``config`` key in
JSON, a ``# config: {...}`` comment line in CSV. Floats are written with
``repr`` and exact integers as decimal strings, so output is byte-stable
and lossless.
"""

from __future__ import annotations

import csv
import io
import json
import math

from .analysis import ConvergenceFit
from .entropy import OrbitTrace
from .search import SurveyTable


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _config_line(config: dict) -> str:
    return "# config: " + json.dumps(config, sort_keys=True) + "\n"


def _fmt_coords(coords) -> str:
    return json.dumps([str(x) if isinstance(x, int) else repr(x) for x in coords])


def trace_rows(trace: OrbitTrace, factor: float = 1.0) -> list[dict]:
    """One dict per iteration; log-valued fields divided by ``factor``."""
    rows = []
    for k, e in enumerate(trace.entries):
        row = {
            "m": e.m,
            "log_count": e.log_count / factor,
            "cesaro": e.cesaro / factor,
            "ratio": e.ratio / factor,
        }
        if trace.counts is not None:
            row["count"] = str(trace.counts[k])
        if trace.coords is not None:
            row["coords"] = [str(x) if isinstance(x, int) else repr(x) for x in trace.coords[k]]
        rows.append(row)
    return rows


def trace_to_json(trace: OrbitTrace, config: dict, log_base: float = math.e) -> str:
    factor = math.log(log_base)
    doc = {
        "config": config,
        "braid": str(trace.braid),
        "strands": trace.n,
        "mode": trace.mode,
        "log_count0": trace.log_count0 / factor,
        "period": trace.period,
        "entries": trace_rows(trace, factor),
    }
    return dumps(doc)


def trace_to_csv(trace: OrbitTrace, config: dict, log_base: float = math.e) -> str:
    factor = math.log(log_base)
    buf = io.StringIO()
    buf.write(_config_line(config))
    w = csv.writer(buf, lineterminator="\n")
    header = ["m", "log_count", "cesaro", "ratio"]
    if trace.counts is not None:
        header.append("count")
    if trace.coords is not None:
        header.append("coords")
    w.writerow(header)
    for k, e in enumerate(trace.entries):
        row = [e.m, repr(e.log_count / factor), repr(e.cesaro / factor), repr(e.ratio / factor)]
        if trace.counts is not None:
            row.append(str(trace.counts[k]))
        if trace.coords is not None:
            row.append(_fmt_coords(trace.coords[k]))
        w.writerow(row)
    return buf.getvalue()


def fit_to_json(fit: ConvergenceFit, config: dict, extra: dict | None = None) -> str:
    summary = fit.summary()
    if extra:
        summary.update(extra)
    norm = dict(fit.normalized())
    series = [
        {"m": m, "error": err, "normalized_error": norm.get(m)} for m, err in fit.per_m_errors
    ]
    return dumps({"config": config, "summary": summary, "series": series})


def fit_to_csv(fit: ConvergenceFit, config: dict, extra: dict | None = None) -> str:
    summary = fit.summary()
    if extra:
        summary.update(extra)
    return _config_line(config) + "# summary: " + json.dumps(summary, sort_keys=True) + "\n" + fit.to_csv()


SURVEY_COLUMNS = [
    "length", "rank", "word", "strands", "strand_counts", "entropy", "coarse_entropy",
    "converged", "alternating", "orbit_alternating", "is_max", "examined", "pruned",
]


def survey_to_json(table: SurveyTable, config: dict, log_base: float = math.e) -> str:
    factor = math.log(log_base)
    doc = table.to_dict()
    doc["config"] = config
    for row in doc["rows"]:
        row["best_entropy"] /= factor
        for rec in row["records"]:
            rec["entropy"] /= factor
            if rec["coarse_entropy"] is not None:
                rec["coarse_entropy"] /= factor
    return dumps(doc)


def survey_to_csv(table: SurveyTable, config: dict, log_base: float = math.e) -> str:
    factor = math.log(log_base)
    buf = io.StringIO()
    buf.write(_config_line(config))
    for msg in table.warnings:
        buf.write(f"# warning: {msg}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SURVEY_COLUMNS)
    for row in table.rows:
        maxi = {id(r) for r in row.maximizers}
        for rank, rec in enumerate(row.records, start=1):
            w.writerow([
                row.length,
                rank,
                str(rec.word),
                rec.strands,
                ";".join(str(s) for s in rec.strand_counts),
                repr(rec.entropy / factor),
                "" if rec.coarse_entropy is None else repr(rec.coarse_entropy / factor),
                int(rec.converged),
                int(rec.alternating),
                int(rec.orbit_alternating),
                int(id(rec) in maxi),
                row.examined,
                row.pruned,
            ])
    return buf.getvalue()
