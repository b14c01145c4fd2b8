"""Braid words over the standard Artin generators.

A word in B_n is a finite sequence of letters sigma_i^{+1} or sigma_i^{-1}
with 1 <= i <= n - 1. Text form is a list of signed integers: ``"1 -2"``
stands for sigma_1 sigma_2^{-1}.

Besides parsing and free reduction, this module provides the four
entropy-preserving symmetries used to prune searches (inverse, mirror,
flip, cyclic rotation) and a canonical representative for each orbit of
the group they generate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import IndexOutOfRange, MalformedWord

_SEPARATOR = re.compile(r"[\s,]+")
_TOKEN = re.compile(r"[+-]?\d+")


class Letter(NamedTuple):
    index: int
    sign: int  # +1 or -1

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)

    def to_int(self) -> int:
        return self.index * self.sign


def letter_key(letter: Letter) -> tuple[int, int]:
    """Total order on letters: index ascending, then +1 before -1."""
    return (letter.index, 0 if letter.sign > 0 else 1)


def word_key(letters: Sequence[Letter]) -> tuple[tuple[int, int], ...]:
    return tuple(letter_key(x) for x in letters)


@dataclass(frozen=True)
class BraidWord:
    """An immutable braid word with its strand count.

    Attributes:
        strands: number of strands n (n >= 2).
        letters: tuple of ``Letter``; every index lies in 1..n-1.
    """

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise IndexOutOfRange(f"a braid needs at least 2 strands, got {self.strands}")
        letters = tuple(Letter(int(x.index), int(x.sign)) for x in self.letters)
        for x in letters:
            if x.sign not in (1, -1):
                raise MalformedWord(f"letter sign must be +1 or -1, got {x.sign}")
            if not 1 <= x.index <= self.strands - 1:
                raise IndexOutOfRange(
                    f"generator sigma_{x.index} does not exist in B_{self.strands}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, ints: Iterable[int], strands: int) -> BraidWord:
        letters = []
        for k in ints:
            if k == 0:
                raise MalformedWord("0 is not a generator")
            letters.append(Letter(abs(k), 1 if k > 0 else -1))
        return cls(strands, tuple(letters))

    def to_ints(self) -> list[int]:
        return [x.to_int() for x in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.to_ints())

    def with_strands(self, strands: int) -> BraidWord:
        """The same letters read in a braid group with another strand count."""
        return BraidWord(strands, self.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return inverse(self) ** (-k)
        return BraidWord(self.strands, self.letters * k)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse ``"1 -2, 3"`` style text into a word of B_strands."""
    if strands < 2:
        raise IndexOutOfRange(f"a braid needs at least 2 strands, got {strands}")
    text = text.strip().strip(",").strip()
    if not text:
        return BraidWord(strands)
    ints = []
    for tok in _SEPARATOR.split(text):
        if not _TOKEN.fullmatch(tok):
            raise MalformedWord(f"not an integer: {tok!r}")
        ints.append(int(tok))
    for k in ints:
        if k != 0 and abs(k) >= strands:
            raise IndexOutOfRange(f"generator sigma_{abs(k)} does not exist in B_{strands}")
    return BraidWord.from_ints(ints, strands)


def format_braid(word: BraidWord) -> str:
    return str(word)


def free_reduce(word: BraidWord) -> BraidWord:
    out: list[Letter] = []
    for x in word.letters:
        if out and out[-1].index == x.index and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return BraidWord(word.strands, tuple(out))


def is_freely_reduced(letters: Sequence[Letter]) -> bool:
    return all(
        not (p.index == q.index and p.sign == -q.sign) for p, q in zip(letters, letters[1:])
    )


def inverse(word: BraidWord) -> BraidWord:
    return BraidWord(word.strands, tuple(x.inverse() for x in reversed(word.letters)))


def mirror(word: BraidWord) -> BraidWord:
    return BraidWord(word.strands, tuple(x.inverse() for x in word.letters))


def flip(word: BraidWord) -> BraidWord:
    """Relabel sigma_i as sigma_{n-i} (turn the braid upside down)."""
    n = word.strands
    return BraidWord(n, tuple(Letter(n - x.index, x.sign) for x in word.letters))


def rotate(word: BraidWord, k: int) -> BraidWord:
    """Move the first k letters to the end, i.e. conjugate by that prefix."""
    if not 0 <= k <= len(word):
        raise ValueError(f"rotation amount {k} outside 0..{len(word)}")
    return BraidWord(word.strands, word.letters[k:] + word.letters[:k])


def translate(word: BraidWord, shift: int, strands: int | None = None) -> BraidWord:
    """Shift every generator index by ``shift``."""
    n = word.strands if strands is None else strands
    return BraidWord(n, tuple(Letter(x.index + shift, x.sign) for x in word.letters))


def symmetry_orbit(word: BraidWord) -> set[tuple[Letter, ...]]:
    """All letter sequences reachable by inverse, mirror, flip and rotations.

    Each of the three involutions commutes with the others and maps the set
    of rotations of a word onto the rotations of its image, so the orbit is
    the union of rotation classes of the eight involution images.
    """
    bases = [word, flip(word)]
    bases += [inverse(w) for w in bases]
    bases += [mirror(w) for w in bases]
    orbit: set[tuple[Letter, ...]] = set()
    for w in bases:
        ls = w.letters
        for k in range(max(len(ls), 1)):
            orbit.add(ls[k:] + ls[:k])
    return orbit


def canonical_form(word: BraidWord) -> BraidWord:
    """Lexicographically smallest freely reduced word in the symmetry orbit.

    Rotations of a freely reduced word need not be freely reduced (``1 2 -1``
    rotates to ``-1 1 2``); such members are skipped so the representative
    keeps the written length. If no member is freely reduced, the minimum
    over the whole orbit is returned.
    """
    orbit = symmetry_orbit(word)
    reduced = [ls for ls in orbit if is_freely_reduced(ls)]
    best = min(reduced or orbit, key=word_key)
    return BraidWord(word.strands, best)


def is_alternating(word: BraidWord) -> bool:
    """Consecutive letters have adjacent indices and opposite signs."""
    return all(
        abs(p.index - q.index) == 1 and p.sign == -q.sign
        for p, q in zip(word.letters, word.letters[1:])
    )


def support_normalize(word: BraidWord) -> BraidWord:
    """Translate so the smallest index is 1 and shrink to the fewest strands.

    Used to compare words read in different braid groups; the empty word
    maps to the empty word of B_2.
    """
    if not word.letters:
        return BraidWord(2)
    lo = min(x.index for x in word.letters)
    hi = max(x.index for x in word.letters)
    return translate(word, 1 - lo, strands=hi - lo + 2)
