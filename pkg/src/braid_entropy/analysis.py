"""Convergence-rate experiments for the Cesaro estimator.

For each m >= 2 the Cesaro error |c_m - h| is normalized by ln(m) / m. A
bounded normalized error is what an envelope |c_m - h| <= C ln(m) / m
predicts; the supremum is reported per braid and is descriptive only.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .entropy import EntropyEstimate, OrbitTrace, estimate_ratio
from .errors import InsufficientData, NonConvergence
from .words import BraidWord

MIN_TRACE = 10
REFERENCE_EPS = 1e-9
REFERENCE_M_MAX = 5000


@dataclass
class ConvergenceFit:
    braid: BraidWord
    h_ref: float
    c_sup: float
    per_m_errors: list[tuple[int, float]]  # (m, |c_m - h_ref|) for every m in the trace

    def normalized(self) -> list[tuple[int, float]]:
        """(m, |c_m - h_ref| * m / ln m) for m >= 2."""
        return [(m, err * m / math.log(m)) for m, err in self.per_m_errors if m >= 2]

    def sup_over(self, m_lo: int, m_hi: int) -> float:
        vals = [v for m, v in self.normalized() if m_lo <= m <= m_hi]
        if not vals:
            raise InsufficientData(f"no trace entries in [{m_lo}, {m_hi}]")
        return max(vals)

    def spread_over(self, m_lo: int, m_hi: int) -> float:
        """max / min of the normalized error over [m_lo, m_hi]; inf if the min is 0."""
        vals = [v for m, v in self.normalized() if m_lo <= m <= m_hi]
        if not vals:
            raise InsufficientData(f"no trace entries in [{m_lo}, {m_hi}]")
        lo = min(vals)
        if lo == 0.0:
            return 0.0 if max(vals) == 0.0 else math.inf
        return max(vals) / lo

    def summary(self) -> dict:
        return {
            "braid": str(self.braid),
            "strands": self.braid.strands,
            "h_ref": self.h_ref,
            "c_sup": self.c_sup,
            "m_max": self.per_m_errors[-1][0] if self.per_m_errors else 0,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "error", "normalized_error"])
        norm = dict(self.normalized())
        for m, err in self.per_m_errors:
            w.writerow([m, repr(err), repr(norm[m]) if m in norm else ""])
        return buf.getvalue()


def fit_envelope(trace: OrbitTrace, h_ref: float) -> ConvergenceFit:
    if len(trace.entries) < MIN_TRACE:
        raise InsufficientData(
            f"need at least {MIN_TRACE} trace entries, got {len(trace.entries)}"
        )
    if h_ref < 0:
        raise ValueError("reference entropy must be nonnegative")
    errors = [(e.m, abs(e.cesaro - h_ref)) for e in trace.entries]
    c_sup = max((err * m / math.log(m) for m, err in errors if m >= 2), default=0.0)
    return ConvergenceFit(trace.braid, h_ref, c_sup, errors)


def reference_estimate(word: BraidWord, mode: str = "exact") -> EntropyEstimate:
    return estimate_ratio(word, eps=REFERENCE_EPS, window=5, m_max=REFERENCE_M_MAX, mode=mode)


def reference_entropy(word: BraidWord, mode: str = "exact") -> float:
    """Tight ratio-estimator value used as the target for envelope fits."""
    est = reference_estimate(word, mode)
    if not est.converged:
        raise NonConvergence(
            f"ratio estimator did not reach eps={REFERENCE_EPS} within {REFERENCE_M_MAX} iterations"
        )
    return est.value
