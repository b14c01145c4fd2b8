"""Exact Dynnikov coordinates and the braid group action on them.

An integral lamination of the punctured disc model is coded by the vector
(a_1, b_1, ..., a_n, b_n) of integers. The generator sigma_i acts on the
four entries (a_i, b_i, a_{i+1}, b_{i+1}) by a piecewise-linear map built
from x^+ = max(x, 0) and x^- = min(x, 0). Python integers make every step
exact regardless of how large the orbit grows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import IndexOutOfRange, InvalidPunctureCount, InvalidScale
from .words import BraidWord


@dataclass(frozen=True)
class LaminationCoords:
    """Coordinates (a_1, b_1, ..., a_n, b_n) of an integral lamination."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        if len(coords) % 2 or len(coords) < 4:
            raise InvalidPunctureCount(
                f"coordinate vector must have even length >= 4, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords) // 2

    @property
    def a(self) -> tuple[int, ...]:
        return self.coords[0::2]

    @property
    def b(self) -> tuple[int, ...]:
        return self.coords[1::2]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> str:
        return json.dumps([str(x) for x in self.coords])

    @classmethod
    def from_json(cls, text: str) -> LaminationCoords:
        return cls(tuple(int(s) for s in json.loads(text)))


def l0(n: int) -> LaminationCoords:
    """The reference lamination with coordinates (0, 1, 0, 1, ..., 0, 1)."""
    if n < 2:
        raise InvalidPunctureCount(f"need n >= 2 punctures, got {n}")
    return LaminationCoords((0, 1) * n)


def act(v: list, i: int, sign: int) -> None:
    """Apply sigma_i^sign to the coordinate list ``v`` in place.

    ``i`` is 1-based. Works for any numeric type with max/min, which lets
    the floating-point engine share this code.
    """
    k = 2 * i - 2
    a1, b1, a2, b2 = v[k], v[k + 1], v[k + 2], v[k + 3]
    b1p = b1 if b1 > 0 else 0
    b1m = b1 if b1 < 0 else 0
    b2p = b2 if b2 > 0 else 0
    b2m = b2 if b2 < 0 else 0
    if sign > 0:
        c = a1 - b1m - a2 + b2p
        cp = c if c > 0 else 0
        t = b2p - c
        s = b1m + c
        v[k] = a1 + b1p + (t if t > 0 else 0)
        v[k + 1] = b2 - cp
        v[k + 2] = a2 + b2m + (s if s < 0 else 0)
        v[k + 3] = b1 + cp
    else:
        d = a1 + b1m - a2 - b2p
        dm = d if d < 0 else 0
        t = b2p + d
        s = b1m - d
        v[k] = a1 - b1p - (t if t > 0 else 0)
        v[k + 1] = b2 + dm
        v[k + 2] = a2 - b2m - (s if s < 0 else 0)
        v[k + 3] = b1 - dm


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator sigma_{i} does not act on {n} punctures")


def apply_generator(L: LaminationCoords, i: int, sign: int) -> LaminationCoords:
    _check_index(L.n, i)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    v = list(L.coords)
    act(v, i, sign)
    return LaminationCoords(tuple(v))


def check_word_fits(n: int, word: BraidWord) -> None:
    if word.strands > n:
        raise IndexOutOfRange(
            f"a word of B_{word.strands} cannot act on coordinates for {n} punctures"
        )


def apply_letters(v: list, word: BraidWord) -> None:
    """In-place left-to-right action of ``word`` on a coordinate list."""
    for index, sign in word.letters:
        act(v, index, sign)


def apply_word(L: LaminationCoords, word: BraidWord) -> LaminationCoords:
    """Act by ``word`` on ``L``; the first letter acts first."""
    check_word_fits(L.n, word)
    v = list(L.coords)
    apply_letters(v, word)
    return LaminationCoords(tuple(v))


def count_of(v: Sequence) -> int:
    """Reduced intersection count of a raw coordinate sequence."""
    a = v[0::2]
    total = sum(abs(x) for x in v[1::2])
    total += sum(abs(y - x) for x, y in zip(a, a[1:]))
    return total + abs(a[0]) + abs(a[-1])


def reduced_intersection_count(L: LaminationCoords) -> int:
    """Crossings of ``L`` with the real axis, minus the two constant boundary terms.

    sum |b_i| + sum |a_{i+1} - a_i| + |a_1| + |a_n|
    """
    return count_of(L.coords)


def scale(L: LaminationCoords, lam: int) -> LaminationCoords:
    """``lam`` parallel copies of every curve of ``L``."""
    if lam <= 0:
        raise InvalidScale(f"scale factor must be a positive integer, got {lam}")
    return LaminationCoords(tuple(lam * x for x in L.coords))
