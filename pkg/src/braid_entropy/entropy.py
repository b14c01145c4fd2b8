"""Entropy estimation from the growth of intersection counts.

Starting from the reference lamination l0(n), the braid is applied over and
over and the log of the reduced intersection count is recorded. Two
estimators read the resulting sequence:

* ``cesaro``: c_m = log_count(m) / m, stopped once |c_{m+1} - c_m| < eps.
  Converges slowly, with an error of order ln(m) / m.
* ``ratio``: r_m = log_count(m) - log_count(m - 1), averaged over a
  trailing window once the window's spread drops below eps. Converges
  geometrically for pseudo-Anosov braids.

Both report natural-log units. Neither can certify zero entropy: linear
count growth drives both to zero only like ln(m) / m or 1 / m. A caveat
flag marks results whose growth is indistinguishable from polynomial.
An orbit that returns exactly to its starting lamination is periodic, has
bounded counts and therefore entropy exactly zero; that case is detected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from . import dynnikov, float_orbit
from .errors import ResourceLimit
from .words import BraidWord, flip, free_reduce, inverse, mirror, rotate

MODES = ("exact", "float")
ESTIMATORS = ("cesaro", "ratio")

DEFAULT_EPS = 1e-4
DEFAULT_M_MAX = 10_000
DEFAULT_WINDOW = 5
DEFAULT_DIGIT_CAP = 10**6

# log_count(m) - log_count(0) <= POLY_DEGREE * ln(m + 1) reads as polynomial growth
POLY_DEGREE = 3
_LOG2_10 = math.log2(10)


@dataclass(frozen=True)
class OrbitStep:
    m: int
    log_count: float
    ratio: float
    count: int | None  # exact mode only
    coords: tuple | None
    returned: bool  # orbit is back at l0(n)


@dataclass(frozen=True)
class TraceEntry:
    m: int
    log_count: float
    cesaro: float
    ratio: float


@dataclass
class OrbitTrace:
    braid: BraidWord
    n: int
    mode: str
    log_count0: float
    entries: list[TraceEntry] = field(default_factory=list)
    counts: list[int] | None = None
    coords: list[tuple] | None = None
    period: int | None = None

    def log_counts(self) -> list[float]:
        return [e.log_count for e in self.entries]

    def cesaro(self, m: int) -> float:
        return self.entries[m - 1].cesaro


@dataclass(frozen=True)
class EntropyEstimate:
    value: float
    iterations_used: int
    converged: bool
    estimator: str
    epsilon: float
    caveat: bool = False
    periodic: bool = False

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "iterations_used": self.iterations_used,
            "converged": self.converged,
            "estimator": self.estimator,
            "epsilon": self.epsilon,
            "caveat": self.caveat,
            "periodic": self.periodic,
        }


def iter_orbit(
    word: BraidWord,
    mode: str = "exact",
    strands: int | None = None,
    digit_cap: int = DEFAULT_DIGIT_CAP,
    threshold: float = float_orbit.DEFAULT_THRESHOLD,
    keep_coords: bool = False,
) -> Iterator[OrbitStep]:
    """Endless stream of orbit steps m = 1, 2, ... of ``word`` acting on l0(n)."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    n = word.strands if strands is None else strands
    word = free_reduce(word)
    start = dynnikov.l0(n)
    dynnikov.check_word_fits(n, word)
    m = 0
    if mode == "exact":
        bit_cap = digit_cap * _LOG2_10
        v = list(start.coords)
        prev = dynnikov.count_of(v)
        while True:
            m += 1
            dynnikov.apply_letters(v, word)
            count = dynnikov.count_of(v)
            if count.bit_length() > bit_cap:
                raise ResourceLimit(
                    f"intersection count exceeded {digit_cap} decimal digits at m={m}"
                )
            yield OrbitStep(
                m,
                math.log(count),
                math.log(count / prev),
                count,
                tuple(v) if keep_coords else None,
                tuple(v) == start.coords,
            )
            prev = count
    else:
        S0 = float_orbit.from_exact(start)
        S = S0
        prev = float_orbit.log_reduced_count(S)
        while True:
            m += 1
            S = float_orbit.apply_word_scaled(S, word, threshold)
            lc = float_orbit.log_reduced_count(S)
            yield OrbitStep(m, lc, lc - prev, None, S.coords if keep_coords else None, S == S0)
            prev = lc


def orbit(
    word: BraidWord,
    m_max: int,
    mode: str = "exact",
    strands: int | None = None,
    keep_coords: bool = False,
    digit_cap: int = DEFAULT_DIGIT_CAP,
    threshold: float = float_orbit.DEFAULT_THRESHOLD,
) -> OrbitTrace:
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    n = word.strands if strands is None else strands
    trace = OrbitTrace(
        braid=word,
        n=n,
        mode=mode,
        log_count0=math.log(n),
        counts=[] if mode == "exact" else None,
        coords=[] if keep_coords else None,
    )
    for step in iter_orbit(word, mode, n, digit_cap, threshold, keep_coords):
        trace.entries.append(TraceEntry(step.m, step.log_count, step.log_count / step.m, step.ratio))
        if trace.counts is not None:
            trace.counts.append(step.count)
        if trace.coords is not None:
            trace.coords.append(step.coords)
        if step.returned and trace.period is None:
            trace.period = step.m
        if step.m >= m_max:
            break
    return trace


def _looks_polynomial(log_count: float, log_count0: float, m: int) -> bool:
    return log_count - log_count0 <= POLY_DEGREE * math.log(m + 1)


def estimate_cesaro(
    word: BraidWord,
    eps: float = DEFAULT_EPS,
    m_max: int = DEFAULT_M_MAX,
    mode: str = "exact",
    strands: int | None = None,
    **orbit_kw,
) -> EntropyEstimate:
    """Iterate until two consecutive Cesaro averages differ by less than ``eps``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = word.strands if strands is None else strands
    lc0 = math.log(n)
    prev_c = None
    c = 0.0
    m = 0
    lc = lc0
    for step in iter_orbit(word, mode, n, **orbit_kw):
        m = step.m
        if step.returned:
            return EntropyEstimate(0.0, m, True, "cesaro", eps, caveat=False, periodic=True)
        lc = step.log_count
        c = lc / m
        if prev_c is not None and abs(c - prev_c) < eps:
            value = max(c, 0.0)
            caveat = value < 10 * eps or _looks_polynomial(lc, lc0, m)
            return EntropyEstimate(value, m, True, "cesaro", eps, caveat=caveat)
        prev_c = c
        if m >= m_max:
            break
    value = max(c, 0.0)
    caveat = value < 10 * eps or _looks_polynomial(lc, lc0, m)
    return EntropyEstimate(value, m, False, "cesaro", eps, caveat=caveat)


def estimate_ratio(
    word: BraidWord,
    eps: float = DEFAULT_EPS,
    window: int = DEFAULT_WINDOW,
    m_max: int = DEFAULT_M_MAX,
    mode: str = "exact",
    strands: int | None = None,
    **orbit_kw,
) -> EntropyEstimate:
    """Mean of the last ``window`` log-ratios once their spread is below ``eps``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    if window < 1:
        raise ValueError("window must be >= 1")
    n = word.strands if strands is None else strands
    lc0 = math.log(n)
    # the spread always spans at least two ratios, otherwise window=1 stops at m=1
    span = max(window, 2)
    recent: list[float] = []
    m = 0
    lc = lc0
    for step in iter_orbit(word, mode, n, **orbit_kw):
        m = step.m
        if step.returned:
            return EntropyEstimate(0.0, m, True, "ratio", eps, caveat=False, periodic=True)
        lc = step.log_count
        recent.append(step.ratio)
        if len(recent) > span:
            del recent[0]
        if len(recent) == span and max(recent) - min(recent) < eps:
            value = max(math.fsum(recent[-window:]) / window, 0.0)
            caveat = value < 10 * eps or _looks_polynomial(lc, lc0, m)
            return EntropyEstimate(value, m, True, "ratio", eps, caveat=caveat)
        if m >= m_max:
            break
    tail = recent[-window:]
    value = max(math.fsum(tail) / len(tail), 0.0) if tail else 0.0
    caveat = value < 10 * eps or _looks_polynomial(lc, lc0, m)
    return EntropyEstimate(value, m, False, "ratio", eps, caveat=caveat)


def estimate(
    word: BraidWord,
    estimator: str = "cesaro",
    eps: float = DEFAULT_EPS,
    m_max: int = DEFAULT_M_MAX,
    mode: str = "exact",
    window: int = DEFAULT_WINDOW,
    strands: int | None = None,
    **orbit_kw,
) -> EntropyEstimate:
    if estimator == "cesaro":
        return estimate_cesaro(word, eps, m_max, mode, strands, **orbit_kw)
    if estimator == "ratio":
        return estimate_ratio(word, eps, window, m_max, mode, strands, **orbit_kw)
    raise ValueError(f"unknown estimator {estimator!r}")


@dataclass
class SymmetryReport:
    braid: BraidWord
    estimates: dict[str, EntropyEstimate]
    max_deviation: float
    square: EntropyEstimate
    power_defect: float  # |h(w^2) - 2 h(w)|

    def to_dict(self) -> dict:
        return {
            "braid": str(self.braid),
            "strands": self.braid.strands,
            "estimates": {k: e.to_dict() for k, e in self.estimates.items()},
            "max_deviation": self.max_deviation,
            "square": self.square.to_dict(),
            "power_defect": self.power_defect,
        }


def symmetry_check(
    word: BraidWord,
    eps: float = 1e-6,
    estimator: str = "ratio",
    m_max: int = DEFAULT_M_MAX,
    mode: str = "exact",
) -> SymmetryReport:
    """Estimate entropy across the pruning symmetries and one extra strand.

    The search assumes these images all share the entropy of ``word``; the
    report's ``max_deviation`` is the largest pairwise gap actually seen.
    """
    word = free_reduce(word)
    variants = {
        "original": word,
        "inverse": inverse(word),
        "mirror": mirror(word),
        "flip": flip(word),
        "rotate1": rotate(word, 1 if len(word) else 0),
        "embed": word.with_strands(word.strands + 1),
    }
    estimates = {
        name: estimate(w, estimator, eps, m_max, mode) for name, w in variants.items()
    }
    values = [e.value for e in estimates.values()]
    square = estimate(word**2, estimator, eps, m_max, mode)
    return SymmetryReport(
        braid=word,
        estimates=estimates,
        max_deviation=max(values) - min(values),
        square=square,
        power_defect=abs(square.value - 2 * estimates["original"].value),
    )
