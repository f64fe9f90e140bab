import pytest

from redwords.errors import PreconditionError, TooLargeError
from redwords.perms import Perm, all_perms, descending, identity, symmetry
from redwords.words import (
    apply_word,
    count_words,
    is_reduced,
    iter_words,
    parse_word,
    word_str,
    words_of,
)

P = Perm.parse


def test_apply_word_steps():
    # 12321 builds 4231 one position swap at a time
    word = [1, 2, 3, 2, 1]
    expect = ["2134", "2314", "2341", "2431", "4231"]
    for k in range(1, 6):
        assert apply_word(word[:k], 4) == P(expect[k - 1])


def test_apply_word_basics():
    assert apply_word([], 5) == identity(5)
    assert apply_word([1, 1], 3) == identity(3)
    assert not is_reduced([1, 1], 3)
    with pytest.raises(PreconditionError):
        apply_word([3], 3)


def test_is_reduced_examples():
    assert is_reduced([1, 2, 3, 2, 1], 4)
    assert is_reduced([1, 2, 1], 3)
    assert not is_reduced([1, 2, 2], 3)
    for w in words_of(P("4231")):
        assert is_reduced(w, 4)


def test_enumerate_4231():
    words = {word_str(w) for w in words_of(P("4231"))}
    assert words == {"12321", "31231", "13231", "31213", "13213", "32123"}


def test_enumerate_basics():
    assert [word_str(w) for w in words_of(P("321"))] == ["121", "212"]
    assert words_of(identity(4)) == (b"",)
    assert count_words(P("4321")) == 16
    assert len(words_of(P("4321"))) == 16
    assert count_words(descending(5)) == 768


def test_cap():
    with pytest.raises(TooLargeError):
        words_of(P("4321"), cap=10)
    # counting alone stays cheap far beyond the enumeration cap
    assert count_words(descending(7)) == 1100742656


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_words_reach_their_permutation(n):
    for p in all_perms(n):
        ws = words_of(p)
        assert len(ws) == count_words(p)
        assert len(set(ws)) == len(ws)
        for w in ws:
            assert apply_word(w, n) == p
            assert len(w) == p.length()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_word_count_symmetry(n):
    for p in all_perms(n):
        for op in ("R180", "R1", "RM1"):
            assert count_words(p) == count_words(symmetry(p, op))


def test_word_text_round_trip():
    assert word_str(b"") == "e"
    assert parse_word("e") == b""
    assert word_str(bytes([1, 2, 3, 2, 1])) == "12321"
    assert parse_word("12321") == bytes([1, 2, 3, 2, 1])
    long_word = bytes([10, 2, 11])
    assert parse_word(word_str(long_word)) == long_word
