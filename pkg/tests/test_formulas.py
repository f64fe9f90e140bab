import pytest

from redwords.errors import PreconditionError
from redwords.formulas import (
    DiameterTriple,
    ZERO_TRIPLE,
    bounds_21_iota,
    delta_recursion,
    diam_12,
    diam_21_single,
    diam_231_avoiding,
    diam_312_avoiding,
    diam_low_family,
    low_family_forms,
    low_family_perm,
    twelve_splits,
    twentyone_iota_forms,
)
from redwords.oracle import brute_triple
from redwords.perms import Perm, all_perms, descending, identity, inflate

P = Perm.parse


def test_diam_12_examples():
    d_2143 = DiameterTriple(1, 0, 1)
    d_312 = DiameterTriple(0, 0, 0)
    assert diam_12(d_2143, d_312, 2, 2) == DiameterTriple(5, 0, 5)
    # identity block contributes nothing
    some = DiameterTriple(3, 1, 2)
    assert diam_12(some, ZERO_TRIPLE, 4, 0) == some
    assert diam_12(ZERO_TRIPLE, some, 0, 4) == some


def test_diam_12_against_brute_force_fig3():
    assert brute_triple(P("2143756")) == DiameterTriple(5, 0, 5)


def test_bounds_21_iota_example():
    bd = bounds_21_iota(ZERO_TRIPLE, la=1, a=2, b=3)
    assert (bd.g_lower, bd.g_upper) == (6, 9)
    assert bd.c_exact == 3
    assert (bd.b_lower, bd.b_upper) == (3, 6)
    assert bd.contains(brute_triple(P("54123")))


def test_bounds_collapse_at_b1():
    d = DiameterTriple(1, 1, 0)
    bd = bounds_21_iota(d, la=3, a=3, b=1)
    assert bd.g_lower == bd.g_upper
    assert bd.b_lower == bd.b_upper
    single = diam_21_single(d, la=3, a=3)
    assert (bd.g_lower, bd.c_exact, bd.b_lower) == (single.g, single.c, single.b)


def test_bounds_identity_alpha():
    from math import comb

    for a in range(2, 5):
        for b in range(2, 4):
            bd = bounds_21_iota(ZERO_TRIPLE, la=0, a=a, b=b)
            gap = comb(a, 2) * comb(b, 2)
            assert (bd.g_lower, bd.g_upper) == (gap, 2 * gap)
    with pytest.raises(PreconditionError):
        bounds_21_iota(ZERO_TRIPLE, 0, 0, 2)


def test_diam_21_single_examples():
    assert diam_21_single(DiameterTriple(1, 1, 0), la=3, a=3) == DiameterTriple(7, 4, 3)
    assert brute_triple(P("4321")) == DiameterTriple(7, 4, 3)
    assert diam_21_single(ZERO_TRIPLE, la=0, a=1) == ZERO_TRIPLE
    assert diam_21_single(ZERO_TRIPLE, la=1, a=2) == DiameterTriple(1, 1, 0)
    assert brute_triple(P("321")) == DiameterTriple(1, 1, 0)


def test_delta_recursion_values():
    assert delta_recursion(1) == ZERO_TRIPLE
    assert delta_recursion(2) == ZERO_TRIPLE
    assert delta_recursion(3) == DiameterTriple(1, 1, 0)
    assert delta_recursion(4) == DiameterTriple(7, 4, 3)
    assert delta_recursion(5) == DiameterTriple(25, 10, 15)
    assert delta_recursion(6) == DiameterTriple(65, 20, 45)
    with pytest.raises(PreconditionError):
        delta_recursion(0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_delta_recursion_vs_brute(n):
    assert brute_triple(descending(n)) == delta_recursion(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_avoider_recursions_match_delta(n):
    d = delta_recursion(n)
    assert diam_312_avoiding(descending(n)) == d
    assert diam_231_avoiding(descending(n)) == d


def test_avoider_guards():
    assert diam_312_avoiding(identity(5)) == ZERO_TRIPLE
    assert diam_231_avoiding(identity(5)) == ZERO_TRIPLE
    with pytest.raises(PreconditionError):
        diam_312_avoiding(P("4231"))  # 423 is a 312 pattern
    with pytest.raises(PreconditionError):
        diam_231_avoiding(P("231"))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_avoider_recursions_vs_brute(n):
    for p in all_perms(n):
        if p.avoids(P("312")):
            assert diam_312_avoiding(p) == brute_triple(p), p
        if p.avoids(P("231")):
            assert diam_231_avoiding(p) == brute_triple(p), p


def test_low_family():
    assert diam_low_family(2, 2) == 1
    assert low_family_perm(2, 2) == P("3412")
    assert brute_triple(P("3412")).g == 1

    assert diam_low_family(3, 2) == 3
    assert low_family_perm(3, 2) == P("34512")
    assert brute_triple(P("34512")).g == 3

    assert diam_low_family(2, 2, 1, 1) == 1
    assert low_family_perm(2, 2, 1, 1) == P("145236")
    assert brute_triple(P("145236")).g == 1

    with pytest.raises(PreconditionError):
        diam_low_family(1, 2)


def test_low_family_wrappers_do_not_change_g():
    for a, b in [(2, 2), (3, 2), (2, 3)]:
        base = brute_triple(low_family_perm(a, b)).g
        for c, d in [(1, 0), (0, 1), (1, 1)]:
            assert brute_triple(low_family_perm(a, b, c, d)).g == base


def test_twelve_splits():
    assert twelve_splits(P("2143756")) == [
        (P("21"), P("21534")),
        (P("2143"), P("312")),
    ]
    assert twelve_splits(P("123")) == [
        (P("1"), P("12")),
        (P("12"), P("1")),
    ]
    assert twelve_splits(P("4231")) == []
    assert twelve_splits(P("1")) == []


def test_twentyone_iota_forms():
    assert twentyone_iota_forms(descending(4)) == [(P("321"), 1)]
    forms = dict(
        (b, alpha) for alpha, b in twentyone_iota_forms(P("53412"))
    )
    assert forms == {2: P("312")}
    assert twentyone_iota_forms(P("45123")) == [(P("12"), 3)]
    assert twentyone_iota_forms(identity(4)) == []


def test_low_family_forms():
    assert (2, 2, 0, 0) in low_family_forms(P("3412"))
    assert (2, 2, 1, 1) in low_family_forms(P("145236"))
    assert low_family_forms(P("4231")) == []


def test_formula_vs_brute_12_inflations_s5():
    for p in all_perms(5):
        for alpha, beta in twelve_splits(p):
            expect = diam_12(
                brute_triple(alpha),
                brute_triple(beta),
                alpha.length(),
                beta.length(),
            )
            assert brute_triple(p) == expect, (p, alpha, beta)


def test_bounds_vs_brute_21_iota_s5():
    for p in all_perms(5):
        for alpha, b in twentyone_iota_forms(p):
            bd = bounds_21_iota(brute_triple(alpha), alpha.length(), len(alpha), b)
            assert bd.contains(brute_triple(p)), (p, alpha, b)
