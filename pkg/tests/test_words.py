import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braid_entropy.errors import IndexOutOfRange, MalformedWord
from braid_entropy.words import (
    BraidWord,
    Letter,
    canonical_form,
    flip,
    format_braid,
    free_reduce,
    inverse,
    is_alternating,
    mirror,
    parse_braid,
    rotate,
    support_normalize,
)

from oracles import brute_canonical, brute_orbit


def w(text, n=3):
    return parse_braid(text, n)


@st.composite
def words(draw, min_strands=2, max_strands=6, max_len=8):
    n = draw(st.integers(min_strands, max_strands))
    ks = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return BraidWord.from_ints(ks, n)


class TestParse:
    def test_basic(self):
        assert w("1 -2").letters == (Letter(1, 1), Letter(2, -1))

    def test_empty(self):
        assert w("") == BraidWord(3)
        assert len(w("   ")) == 0

    def test_separators(self):
        assert w("1,-2").to_ints() == [1, -2]
        assert w("1 ,  -2,2").to_ints() == [1, -2, 2]
        assert w("+1 -2").to_ints() == [1, -2]

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            w("3")
        with pytest.raises(IndexOutOfRange):
            w("1 -5", 4)

    @pytest.mark.parametrize("text", ["0", "1 0", "a", "1.5", "1 - 2", "1;2", "--1"])
    def test_malformed(self, text):
        with pytest.raises(MalformedWord):
            w(text, 5)

    def test_strands_too_small(self):
        with pytest.raises(IndexOutOfRange):
            parse_braid("", 1)

    @given(words())
    def test_left_inverse_of_serializer(self, word):
        assert parse_braid(format_braid(word), word.strands) == word


class TestFreeReduce:
    @pytest.mark.parametrize(
        "text, expected",
        [("1 -1 2", "2"), ("1 2 -2 -1", ""), ("1 2 1", "1 2 1"), ("-2 2 1 1 -1", "1")],
    )
    def test_examples(self, text, expected):
        assert str(free_reduce(w(text))) == expected

    @given(words())
    def test_idempotent(self, word):
        once = free_reduce(word)
        assert free_reduce(once) == once

    @given(words())
    def test_no_cancelling_pair_left(self, word):
        ls = free_reduce(word).letters
        assert all(not (p.index == q.index and p.sign == -q.sign) for p, q in zip(ls, ls[1:]))


class TestSymmetries:
    def test_examples(self):
        assert str(inverse(w("1 -2"))) == "2 -1"
        assert str(mirror(w("1 -2"))) == "-1 2"
        assert str(flip(w("1 -2"))) == "2 -1"
        assert str(rotate(w("1 -2"), 1)) == "-2 1"
        assert rotate(w("1 -2"), 0) == w("1 -2")
        assert rotate(w("1 -2"), 2) == w("1 -2")

    def test_rotate_bounds(self):
        with pytest.raises(ValueError):
            rotate(w("1 -2"), 3)

    @given(words())
    def test_involutions(self, word):
        assert inverse(inverse(word)) == word
        assert mirror(mirror(word)) == word
        assert flip(flip(word)) == word

    @given(words())
    def test_inverse_cancels(self, word):
        prod = BraidWord(word.strands, word.letters + inverse(word).letters)
        assert free_reduce(prod) == BraidWord(word.strands)


class TestCanonicalForm:
    def test_examples(self):
        assert str(canonical_form(w("-2 1"))) == "1 -2"
        assert str(canonical_form(w(""))) == ""
        assert str(canonical_form(w("1"))) == "1"
        for text in ("1", "-1", "2", "-2"):
            assert str(canonical_form(w(text))) == "1"

    def test_example_by_brute_force(self):
        # the frozen values above agree with an independent orbit enumeration
        assert brute_canonical((-2, 1), 3) == (1, -2)
        assert brute_canonical((2,), 3) == (1,)

    def test_skips_non_reduced_rotations(self):
        # a plain orbit minimum would be "1 -1 2", which is not freely reduced
        assert str(canonical_form(w("-1 2 1"))) != "1 -1 2"
        assert str(canonical_form(w("-1 2 1"))) == str(canonical_form(w("1 2 -1")))

    @settings(max_examples=200)
    @given(words(max_len=6))
    def test_matches_brute_force(self, word):
        word = free_reduce(word)
        assert tuple(canonical_form(word).to_ints()) == brute_canonical(word.to_ints(), word.strands)

    @given(words(max_len=6))
    def test_idempotent(self, word):
        c = canonical_form(free_reduce(word))
        assert canonical_form(c) == c

    @settings(max_examples=200)
    @given(words(max_len=6), st.lists(st.integers(0, 3), max_size=8), st.integers(0, 10))
    def test_orbit_invariant(self, word, ops, k):
        word = free_reduce(word)
        other = word
        for op in ops:
            if op == 0:
                other = inverse(other)
            elif op == 1:
                other = mirror(other)
            elif op == 2:
                other = flip(other)
            else:
                other = rotate(other, k % (len(other) + 1))
        assert canonical_form(other) == canonical_form(word)

    @given(words(max_len=6))
    def test_result_in_orbit(self, word):
        word = free_reduce(word)
        c = canonical_form(word)
        assert tuple(c.to_ints()) in brute_orbit(word.to_ints(), word.strands)


class TestAlternating:
    @pytest.mark.parametrize(
        "text, n, expected",
        [
            ("1 -2 1 -2", 3, True),
            ("1 2", 3, False),
            ("1 -3", 4, False),
            ("1", 3, True),
            ("", 3, True),
            ("-2 1 -2 3", 4, True),
            ("1 -1", 3, False),
        ],
    )
    def test_examples(self, text, n, expected):
        assert is_alternating(parse_braid(text, n)) is expected

    @given(words())
    def test_preserved_by_inverse_mirror_flip(self, word):
        a = is_alternating(word)
        assert is_alternating(inverse(word)) == a
        assert is_alternating(mirror(word)) == a
        assert is_alternating(flip(word)) == a


def test_support_normalize():
    assert support_normalize(parse_braid("3 -4", 6)) == parse_braid("1 -2", 3)
    assert support_normalize(parse_braid("2 4", 6)) == parse_braid("1 3", 4)
    assert support_normalize(BraidWord(5)) == BraidWord(2)


def test_power():
    assert (w("1 -2") ** 2).to_ints() == [1, -2, 1, -2]
    assert (w("1 -2") ** -1) == inverse(w("1 -2"))
    assert len(w("1 -2") ** 0) == 0
