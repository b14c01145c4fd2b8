"""Renormalized floating-point orbit engine.

The generator action is positively homogeneous of degree one, so a
lamination can be stored as ``exp(log_scale) * coords`` with ``coords``
kept near unit size. Whenever an entry reaches the threshold ``R`` the
vector is divided by its largest magnitude and the log of that magnitude
is added to ``log_scale``. The exact engine remains the source of truth;
rounding can flip a max/min branch when a quantity sits close to a
breakpoint and nothing here tries to detect that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dynnikov import LaminationCoords, act, check_word_fits, count_of
from .errors import EmptyLamination, FloatOverflow
from .words import BraidWord

DEFAULT_THRESHOLD = 2.0**512


@dataclass(frozen=True)
class ScaledCoords:
    coords: tuple[float, ...]
    log_scale: float = 0.0

    @property
    def n(self) -> int:
        return len(self.coords) // 2

    def is_zero(self) -> bool:
        return not any(self.coords)


def _normalize(v: list[float], log_scale: float) -> tuple[tuple[float, ...], float]:
    if not all(math.isfinite(x) for x in v):
        raise FloatOverflow("non-finite coordinate; renormalization threshold too large")
    top = max(abs(x) for x in v)
    if top == 0.0:
        return tuple(v), log_scale
    return tuple(x / top for x in v), log_scale + math.log(top)


def from_exact(L: LaminationCoords) -> ScaledCoords:
    """Convert exact coordinates, dividing by the largest magnitude.

    Integer true division is correctly rounded for any size, so vectors far
    beyond the double range convert without overflow.
    """
    top = max(abs(x) for x in L.coords)
    if top == 0:
        return ScaledCoords(tuple(0.0 for _ in L.coords), 0.0)
    return ScaledCoords(tuple(x / top for x in L.coords), math.log(top))


def renormalize(S: ScaledCoords) -> ScaledCoords:
    coords, log_scale = _normalize(list(S.coords), S.log_scale)
    return ScaledCoords(coords, log_scale)


def apply_word_scaled(
    S: ScaledCoords, word: BraidWord, threshold: float = DEFAULT_THRESHOLD
) -> ScaledCoords:
    check_word_fits(S.n, word)
    v = list(S.coords)
    log_scale = S.log_scale
    for index, sign in word.letters:
        act(v, index, sign)
        k = 2 * index - 2
        # only the four touched entries can have crossed the threshold
        if (
            not abs(v[k]) < threshold
            or not abs(v[k + 1]) < threshold
            or not abs(v[k + 2]) < threshold
            or not abs(v[k + 3]) < threshold
        ):
            coords, log_scale = _normalize(v, log_scale)
            v = list(coords)
    if any(x != x for x in v):
        raise FloatOverflow("NaN in coordinates")
    return ScaledCoords(tuple(v), log_scale)


def log_reduced_count(S: ScaledCoords) -> float:
    """Natural log of the reduced intersection count represented by ``S``."""
    if S.is_zero():
        raise EmptyLamination("the empty lamination has count 0")
    count = count_of(S.coords)
    if not math.isfinite(count):
        raise FloatOverflow("non-finite intersection count")
    return S.log_scale + math.log(count)
