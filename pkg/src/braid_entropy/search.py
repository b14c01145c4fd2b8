"""Exhaustive, symmetry-pruned survey of short braid words.

Words are stratified by written length. For each strand count, one
representative per symmetry orbit (inverse, mirror, flip, rotation) is
estimated coarsely with the ratio estimator; the best ``refine_top`` per
(length, strands) are then re-estimated at a tight tolerance. Results
from different strand counts are merged up to index translation, so a
braid such as ``1 -2`` is reported once together with every strand count
it was seen in.

Work is split into chunks keyed by (strands, length, first letters).
Chunks are pure and can run in worker processes; the merge sorts by
(entropy descending, canonical word ascending) so output does not depend
on scheduling.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .entropy import estimate_ratio
from .words import (
    BraidWord,
    Letter,
    canonical_form,
    is_alternating,
    is_freely_reduced,
    letter_key,
    symmetry_orbit,
    support_normalize,
    word_key,
)

log = logging.getLogger(__name__)

COARSE_EPS = 1e-3
REFINE_EPS = 1e-6
COARSE_M_MAX = 2000
REFINE_M_MAX = 5000
REFINE_TOP = 20
WINDOW = 5
PREFIX_LEN = 2


def strand_bound(length: int) -> int:
    """Strand count that holds a representative of every word of this length.

    A word of length L uses at most L distinct indices; after translating
    its support to start at 1 it lives in B_{L+1}.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    return length + 1


def _alphabet(strands: int) -> list[Letter]:
    return sorted(
        (Letter(i, s) for i in range(1, strands) for s in (1, -1)), key=letter_key
    )


def reduced_words(strands: int, length: int, prefix: tuple[Letter, ...] = ()) -> Iterator[tuple[Letter, ...]]:
    """Freely reduced letter sequences in lexicographic order, optionally with a fixed prefix."""
    alphabet = _alphabet(strands)
    if not is_freely_reduced(prefix) or len(prefix) > length:
        return

    def extend(word: tuple[Letter, ...]) -> Iterator[tuple[Letter, ...]]:
        if len(word) == length:
            yield word
            return
        for x in alphabet:
            if word and word[-1].index == x.index and word[-1].sign == -x.sign:
                continue
            yield from extend(word + (x,))

    yield from extend(tuple(prefix))


def enumerate_words(strands: int, length: int, prefix: tuple[Letter, ...] = ()) -> Iterator[BraidWord]:
    """One canonical representative per symmetry orbit of freely reduced words."""
    for letters in reduced_words(strands, length, prefix):
        w = BraidWord(strands, letters)
        if canonical_form(w).letters == letters:
            yield w


def prefixes(strands: int, length: int) -> list[tuple[Letter, ...]]:
    k = min(PREFIX_LEN, length)
    return list(reduced_words(strands, k))


@dataclass
class SearchRecord:
    word: BraidWord
    length: int
    strands: int
    entropy: float
    alternating: bool
    converged: bool
    orbit_alternating: bool = False
    strand_counts: list[int] = field(default_factory=list)
    coarse_entropy: float | None = None

    def sort_key(self):
        return (-self.entropy, word_key(self.word.letters), self.strands)

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "length": self.length,
            "strands": self.strands,
            "strand_counts": list(self.strand_counts),
            "entropy": self.entropy,
            "coarse_entropy": self.coarse_entropy,
            "converged": self.converged,
            "alternating": self.alternating,
            "orbit_alternating": self.orbit_alternating,
        }


def orbit_alternating(word: BraidWord) -> bool:
    """Whether some freely reduced word in the symmetry orbit is alternating."""
    return any(
        is_freely_reduced(ls) and is_alternating(BraidWord(word.strands, ls))
        for ls in symmetry_orbit(word)
    )


@dataclass
class SurveyRow:
    length: int
    records: list[SearchRecord]
    examined: int
    pruned: int
    tolerance: float

    @property
    def best_entropy(self) -> float:
        return self.records[0].entropy if self.records else 0.0

    @property
    def maximizers(self) -> list[SearchRecord]:
        top = self.best_entropy
        return [r for r in self.records if r.entropy >= top - self.tolerance]

    def to_dict(self) -> dict:
        maxi = self.maximizers
        return {
            "length": self.length,
            "examined": self.examined,
            "pruned": self.pruned,
            "best_entropy": self.best_entropy,
            "maximizers": [str(r.word) for r in maxi],
            "maximizers_in_b3_b4": all(r.strands <= 4 for r in maxi),
            "maximizers_alternating": all(r.orbit_alternating for r in maxi),
            "records": [r.to_dict() for r in self.records],
        }


@dataclass
class SurveyTable:
    rows: list[SurveyRow]
    config: dict
    warnings: list[str] = field(default_factory=list)

    def row(self, length: int) -> SurveyRow:
        for r in self.rows:
            if r.length == length:
                return r
        raise KeyError(length)

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "rows": [r.to_dict() for r in self.rows],
            "warnings": list(self.warnings),
        }


# -- work units ------------------------------------------------------------

def _coarse_chunk(job: tuple) -> dict:
    strands, length, prefix_ints, eps, m_max, mode = job
    prefix = tuple(Letter(abs(k), 1 if k > 0 else -1) for k in prefix_ints)
    examined = 0
    results = []
    for letters in reduced_words(strands, length, prefix):
        examined += 1
        w = BraidWord(strands, letters)
        if canonical_form(w).letters != letters:
            continue
        est = estimate_ratio(w, eps=eps, window=WINDOW, m_max=m_max, mode=mode)
        results.append([w.to_ints(), est.value, est.converged])
    return {"examined": examined, "results": results}


def _refine_one(job: tuple) -> list:
    strands, ints, eps, m_max, mode = job
    est = estimate_ratio(
        BraidWord.from_ints(ints, strands), eps=eps, window=WINDOW, m_max=m_max, mode=mode
    )
    return [est.value, est.converged]


def _run_jobs(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=1))


class _Checkpoints:
    """JSON files keyed by work unit; reused only when the parameters match."""

    def __init__(self, directory: str | os.PathLike | None):
        self.dir = Path(directory) if directory else None
        if self.dir:
            self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.dir / f"{key}.json"

    def load(self, key: str, params: list):
        if not self.dir or not self._path(key).exists():
            return None
        data = json.loads(self._path(key).read_text())
        if data.get("params") != params:
            return None
        return data["result"]

    def save(self, key: str, params: list, result) -> None:
        if self.dir:
            tmp = self._path(key).with_suffix(".tmp")
            tmp.write_text(json.dumps({"params": params, "result": result}, sort_keys=True))
            tmp.replace(self._path(key))


def _cached_map(fn, jobs: list, keys: list[str], ckpt: _Checkpoints, workers: int) -> list:
    out: list = [None] * len(jobs)
    todo = []
    for k, (job, key) in enumerate(zip(jobs, keys)):
        hit = ckpt.load(key, list(job))
        if hit is not None:
            out[k] = hit
        else:
            todo.append(k)
    fresh = _run_jobs(fn, [jobs[k] for k in todo], workers)
    for k, res in zip(todo, fresh):
        out[k] = res
        ckpt.save(keys[k], list(jobs[k]), res)
    return out


def _prefix_tag(ints) -> str:
    return "_".join(("p" if k > 0 else "m") + str(abs(k)) for k in ints) or "none"


def max_entropy_survey(
    max_length: int,
    strands_min: int = 3,
    strands_max: int | None = None,
    eps: float = COARSE_EPS,
    refine_top: int = REFINE_TOP,
    refine_eps: float = REFINE_EPS,
    coarse_m_max: int = COARSE_M_MAX,
    refine_m_max: int = REFINE_M_MAX,
    mode: str = "exact",
    workers: int = 1,
    min_length: int = 1,
    checkpoint_dir: str | os.PathLike | None = None,
) -> SurveyTable:
    """Survey the highest-entropy words for every length up to ``max_length``.

    ``strands_max=None`` means "all strand counts": the sweep is capped at
    ``strand_bound(max_length)``.
    """
    if strands_max is None:
        strands_max = max(strands_min, strand_bound(max_length))
    if not 3 <= strands_min <= strands_max:
        raise ValueError("need 3 <= strands_min <= strands_max")
    if max_length < 1 or min_length < 1:
        raise ValueError("lengths must be >= 1")
    config = {
        "max_length": max_length,
        "min_length": min_length,
        "strands_min": strands_min,
        "strands_max": strands_max,
        "eps": eps,
        "refine_eps": refine_eps,
        "refine_top": refine_top,
        "coarse_m_max": coarse_m_max,
        "refine_m_max": refine_m_max,
        "window": WINDOW,
        "mode": mode,
    }
    ckpt = _Checkpoints(checkpoint_dir)
    lengths = range(min_length, max_length + 1)
    strand_range = range(strands_min, strands_max + 1)

    jobs, keys, owners = [], [], []
    for length in lengths:
        for s in strand_range:
            for pre in prefixes(s, length):
                ints = [x.to_int() for x in pre]
                jobs.append((s, length, ints, eps, coarse_m_max, mode))
                keys.append(f"coarse_s{s}_L{length}_{_prefix_tag(ints)}")
                owners.append((length, s))
    log.info("coarse pass: %d chunks", len(jobs))
    chunks = _cached_map(_coarse_chunk, jobs, keys, ckpt, workers)

    coarse: dict[tuple[int, int], list] = {}
    examined: dict[tuple[int, int], int] = {}
    for owner, chunk in zip(owners, chunks):
        coarse.setdefault(owner, []).extend(chunk["results"])
        examined[owner] = examined.get(owner, 0) + chunk["examined"]

    refine_jobs, refine_keys, refine_meta = [], [], []
    for (length, s), results in sorted(coarse.items()):
        results.sort(key=lambda r: (-r[1], word_key(BraidWord.from_ints(r[0], s).letters)))
        for ints, value, _ in results[:refine_top]:
            refine_jobs.append((s, ints, refine_eps, refine_m_max, mode))
            refine_keys.append(f"refine_s{s}_L{length}_{_prefix_tag(ints)}")
            refine_meta.append((length, s, ints, value))
    log.info("refine pass: %d words", len(refine_jobs))
    refined = _cached_map(_refine_one, refine_jobs, refine_keys, ckpt, workers)

    classes: dict[int, dict[tuple, SearchRecord]] = {length: {} for length in lengths}
    for (length, s, ints, coarse_value), (value, converged) in zip(refine_meta, refined):
        word = BraidWord.from_ints(ints, s)
        key = canonical_form(support_normalize(word)).letters
        rec = classes[length].get(key)
        if rec is None:
            classes[length][key] = SearchRecord(
                word=word,
                length=length,
                strands=s,
                entropy=value,
                alternating=is_alternating(word),
                converged=converged,
                orbit_alternating=orbit_alternating(word),
                strand_counts=[s],
                coarse_entropy=coarse_value,
            )
        elif s not in rec.strand_counts:
            # strand counts arrive in increasing order; the smallest stays the representative
            rec.strand_counts.append(s)

    rows = []
    for length in lengths:
        recs = sorted(classes[length].values(), key=SearchRecord.sort_key)
        n_examined = sum(examined.get((length, s), 0) for s in strand_range)
        n_emitted = sum(len(coarse.get((length, s), [])) for s in strand_range)
        rows.append(SurveyRow(length, recs, n_examined, n_examined - n_emitted, 2 * refine_eps))

    warnings = []
    best = {r.length: r.best_entropy for r in rows}
    for length in lengths:
        if length - 2 in best and best[length] < best[length - 2] - 2 * refine_eps:
            warnings.append(
                f"best entropy at length {length} ({best[length]:.9f}) is below "
                f"length {length - 2} ({best[length - 2]:.9f})"
            )
    for w in warnings:
        log.warning(w)
    return SurveyTable(rows, config, warnings)
