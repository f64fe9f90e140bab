import pytest
from hypothesis import given, strategies as st

from redwords.errors import InvalidPermutationError, PreconditionError
from redwords.perms import (
    Perm,
    all_perms,
    contains_pattern,
    count_321,
    decompose_231,
    decompose_312,
    descending,
    identity,
    inflate,
    inversions,
    symmetry,
)

P = Perm.parse


def test_from_one_line():
    assert Perm([4, 2, 3, 1]) == P("4231")
    assert Perm([1]) == P("1")
    assert Perm(()) == Perm([])
    with pytest.raises(InvalidPermutationError):
        Perm([4, 2, 2, 1])
    with pytest.raises(InvalidPermutationError):
        Perm([1, 3])  # gap
    with pytest.raises(InvalidPermutationError):
        Perm([0, 1])  # zero


def test_parse_and_str():
    assert str(P("4231")) == "4231"
    big = Perm(list(range(2, 11)) + [1])
    assert str(big) == "2,3,4,5,6,7,8,9,10,1"
    assert Perm.parse(str(big)) == big
    assert Perm.parse("e") == Perm(())
    assert Perm.parse("") == Perm(())
    assert str(Perm(())) == "e"


def test_inversions_examples():
    assert inversions(P("4231")) == [(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]
    assert P("4231").length() == 5
    assert inversions(identity(5)) == []
    assert inversions(P("4312")) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]


def test_contains_pattern_examples():
    assert contains_pattern(P("142635"), P("231"))  # via 463
    assert not contains_pattern(P("142635"), P("321"))
    for sigma in all_perms(3):
        assert contains_pattern(sigma, sigma)


def test_count_321():
    assert count_321(P("4312")) == 2
    assert count_321(identity(6)) == 0
    # brute force over all triples of the longest permutation
    from itertools import combinations

    d4 = descending(4)
    brute = sum(
        1
        for i, j, k in combinations(range(4), 3)
        if d4[i] > d4[j] > d4[k]
    )
    assert brute == 4
    assert count_321(d4) == 4


def test_inflate_examples():
    assert inflate(P("231"), [P("21"), Perm(()), P("213")]) == P("54213")
    alpha = P("321")
    assert inflate(P("12"), [alpha, Perm(())]) == alpha
    for n in range(1, 6):
        assert inflate(P("21"), [descending(n), P("1")]) == descending(n + 1)
    with pytest.raises(PreconditionError):
        inflate(P("12"), [P("1")])


def test_decompose_312():
    left, right, m = decompose_312(P("2314"))
    assert (left, right, m) == (P("12"), P("1"), 3)
    assert inflate(P("12"), [inflate(P("21"), [left, P("1")]), right]) == P("2314")
    assert decompose_312(P("1")) == (Perm(()), Perm(()), 1)
    with pytest.raises(PreconditionError):
        decompose_312(P("3124"))


def test_decompose_231():
    left, right, m = decompose_231(P("1432"))
    assert (left, right, m) == (P("1"), P("21"), 2)
    assert inflate(P("12"), [left, inflate(P("21"), [P("1"), right])]) == P("1432")
    assert decompose_231(P("1")) == (Perm(()), Perm(()), 1)
    with pytest.raises(PreconditionError):
        decompose_231(P("231"))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_decompose_round_trips(n):
    for p in all_perms(n):
        if p.avoids(P("312")):
            left, right, m = decompose_312(p)
            rebuilt = inflate(
                P("12"), [inflate(P("21"), [left, P("1")]), right]
            )
            assert rebuilt == p
        if p.avoids(P("231")):
            left, right, m = decompose_231(p)
            rebuilt = inflate(
                P("12"), [left, inflate(P("21"), [P("1"), right])]
            )
            assert rebuilt == p


def test_symmetry_examples():
    p = P("3241")
    assert symmetry(p, "R180") == P("4132")
    assert symmetry(p, "R1") == P("4213")
    assert symmetry(p, "RM1") == P("2431")
    with pytest.raises(PreconditionError):
        symmetry(p, "R90")


@given(st.permutations(list(range(1, 7))))
def test_symmetry_involutions(entries):
    p = Perm(entries)
    for op in ("R180", "R1", "RM1"):
        assert symmetry(symmetry(p, op), op) == p
    assert symmetry(symmetry(p, "R1"), "R180") == symmetry(p, "RM1")


@given(st.permutations(list(range(1, 8))))
def test_count_321_r180_invariant(entries):
    p = Perm(entries)
    assert count_321(p) == count_321(symmetry(p, "R180"))
