import math

import pytest

from braid_entropy import dynnikov
from braid_entropy.dynnikov import LaminationCoords, l0, scale
from braid_entropy.errors import EmptyLamination, FloatOverflow
from braid_entropy.float_orbit import (
    ScaledCoords,
    apply_word_scaled,
    from_exact,
    log_reduced_count,
    renormalize,
)
from braid_entropy.words import BraidWord, parse_braid

TEST_BRAIDS = [
    ("1 -2", 3),
    ("1 1 -2", 3),
    ("1 -2 3", 4),
    ("1 -2 3 -2", 4),
    ("1 2 -3 -4", 5),
]


def test_from_exact_small():
    S = from_exact(l0(3))
    assert S.coords == (0.0, 1.0, 0.0, 1.0, 0.0, 1.0)
    assert S.log_scale == 0.0


def test_from_exact_zero():
    S = from_exact(LaminationCoords((0,) * 4))
    assert S.coords == (0.0,) * 4
    assert S.log_scale == 0.0


def test_from_exact_huge():
    S = from_exact(scale(l0(2), 10**40))
    assert S.coords == (0.0, 1.0, 0.0, 1.0)
    assert S.log_scale == pytest.approx(40 * math.log(10), rel=1e-15)


def test_from_exact_beyond_double_range():
    L = LaminationCoords((3 * 10**500, -(10**500), 0, 10**499))
    S = from_exact(L)
    assert max(abs(x) for x in S.coords) == 1.0
    assert log_reduced_count(S) == pytest.approx(
        math.log(dynnikov.reduced_intersection_count(L)), rel=1e-14
    )


def test_sigma1_matches_exact():
    S = apply_word_scaled(from_exact(LaminationCoords((0, 1, 0, 1))), parse_braid("1", 2))
    assert S.coords == (1.0, 0.0, 0.0, 2.0)
    assert S.log_scale == 0.0


def test_identity_word():
    S = from_exact(LaminationCoords((5, -3, 2, 8, 1, 1)))
    assert apply_word_scaled(S, BraidWord(3)) == S


def test_log_count_examples():
    assert log_reduced_count(from_exact(LaminationCoords((0, 1, 0, 1, 0, 1)))) == pytest.approx(
        math.log(3), abs=1e-15
    )
    assert log_reduced_count(from_exact(LaminationCoords((1, 0, 0, 2)))) == pytest.approx(
        math.log(4), abs=1e-15
    )


@pytest.mark.parametrize("L", [l0(3), LaminationCoords((7, -2, 3, 11, -4, 0))])
def test_log_count_scaled(L):
    S = from_exact(scale(L, 10**40))
    expected = 40 * math.log(10) + math.log(dynnikov.reduced_intersection_count(L))
    assert abs(log_reduced_count(S) - expected) <= 1e-9 * expected


def test_empty_lamination():
    with pytest.raises(EmptyLamination):
        log_reduced_count(from_exact(LaminationCoords((0,) * 6)))


@pytest.mark.parametrize("lam", [2, 3, 10, 12345, 10**40])
def test_homogeneity(lam):
    L = LaminationCoords((7, -2, 3, 11, -4, 1))
    a, b = from_exact(L), from_exact(scale(L, lam))
    assert a.coords == b.coords
    assert abs((b.log_scale - a.log_scale) - math.log(lam)) <= 1e-12


def _orbit_logs(word, n, m_max, threshold=2.0**512):
    exact = l0(n).coords
    v = list(exact)
    S = from_exact(l0(n))
    out = []
    for _ in range(m_max):
        dynnikov.apply_letters(v, word)
        S = apply_word_scaled(S, word, threshold)
        out.append((math.log(dynnikov.count_of(v)), log_reduced_count(S)))
    return out


@pytest.mark.parametrize("text, n", TEST_BRAIDS)
def test_agrees_with_exact_engine(text, n):
    for ex, fl in _orbit_logs(parse_braid(text, n), n, 100):
        assert abs(fl - ex) / ex <= 1e-9


def test_fifty_powers_of_golden_braid():
    word = parse_braid("1 -2", 3) ** 50
    L = dynnikov.apply_word(l0(3), word)
    S = apply_word_scaled(from_exact(l0(3)), word)
    ex = math.log(dynnikov.reduced_intersection_count(L))
    assert abs(log_reduced_count(S) - ex) / ex <= 1e-9


@pytest.mark.parametrize("text, n", TEST_BRAIDS)
def test_renormalization_transparent(text, n):
    word = parse_braid(text, n)
    lo = _orbit_logs(word, n, 300, threshold=2.0**64)
    hi = _orbit_logs(word, n, 300, threshold=2.0**512)
    for (_, a), (_, b) in zip(lo, hi):
        assert abs(a - b) <= 1e-12


def test_renormalized_range():
    R = 2.0**64
    word = parse_braid("1 -2", 3)
    S = from_exact(l0(3))
    renormalized = False
    for _ in range(200):
        before = S.log_scale
        S = apply_word_scaled(S, word, R)
        assert math.isfinite(S.log_scale)
        if S.log_scale != before:
            renormalized = True
            assert S.log_scale > before
        assert max(abs(x) for x in S.coords) < R
    assert renormalized


def test_renormalize_helper():
    S = renormalize(ScaledCoords((0.0, 4.0, -8.0, 2.0), 1.0))
    assert S.coords == (0.0, 0.5, -1.0, 0.25)
    assert S.log_scale == pytest.approx(1.0 + math.log(8.0))


def test_overflow_detected():
    # a threshold past the double range lets entries reach infinity
    S = from_exact(l0(3))
    with pytest.raises(FloatOverflow):
        for _ in range(2000):
            S = apply_word_scaled(S, parse_braid("1 -2", 3), threshold=math.inf)
