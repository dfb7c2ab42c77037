from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from schubpuzzle.strings import BitString, all_strings, lattice_leq


def words(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, 1), min_size=n, max_size=n)
    ).map(lambda b: BitString(tuple(b)))


def test_parse_and_reject():
    assert BitString.parse("0101").bits == (0, 1, 0, 1)
    with pytest.raises(ValueError, match="at 2"):
        BitString.parse("01a1")


def test_special_words():
    assert str(BitString.identity(5, 2)) == "00011"
    assert str(BitString.divisor(5, 2)) == "00101"
    assert str(BitString.top(5, 2)) == "11000"
    assert BitString.divisor(5, 2).length() == 1
    assert BitString.top(5, 2).length() == 6


def test_inversions_small():
    assert BitString.parse("1001").inversions() == {(1, 2), (1, 3)}
    assert BitString.parse("0011").inversions() == frozenset()


@given(words())
def test_length_matches_inversions(lam):
    assert lam.length() == len(lam.inversions())


@given(words())
def test_dual_is_involution(lam):
    assert lam.dual().dual() == lam
    assert lam.dual().k == lam.n - lam.k
    assert lam.dual().length() == lam.length()


def _leq_by_ones(lam, mu):
    # lam <= mu iff the i-th one of mu is weakly left of the i-th one of lam
    return all(b <= a for a, b in zip(lam.ones(), mu.ones()))


def test_lattice_order_against_positions():
    for n in range(1, 7):
        for k in range(n + 1):
            S = all_strings(n, k)
            for lam in S:
                for mu in S:
                    assert lattice_leq(lam, mu) == _leq_by_ones(lam, mu)


def test_covers_are_length_one_steps():
    for n in range(2, 7):
        for k in range(n + 1):
            S = all_strings(n, k)
            for lam in S:
                up = {mu for mu in S if lattice_leq(lam, mu) and mu.length() == lam.length() + 1}
                assert up == lam.covers_up()
                for mu in lam.covers_up():
                    assert lam in mu.covers_down()


def test_mismatched_lattice_raises():
    with pytest.raises(ValueError):
        lattice_leq(BitString.parse("01"), BitString.parse("011"))


def test_all_strings_count():
    from math import comb
    for n in range(7):
        for k in range(n + 1):
            S = all_strings(n, k)
            assert len(S) == comb(n, k) == len(set(S))
            assert list(S) == sorted(S)
    assert all_strings(3, 5) == ()


def test_identity_and_top_extremes():
    S = all_strings(5, 2)
    assert all(lattice_leq(BitString.identity(5, 2), lam) for lam in S)
    assert all(lattice_leq(lam, BitString.top(5, 2)) for lam in S)
    assert BitString.identity(5, 2).reverse() == BitString.top(5, 2)


def test_reverse_is_longest_permutation():
    # inversions of the reversed word are the complement set of pairs
    lam = BitString.parse("10110")
    n = lam.n
    pairs = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if lam[i] != lam[j]}
    rev = {(n + 1 - j, n + 1 - i) for (i, j) in lam.reverse().inversions()}
    assert rev | lam.inversions() == pairs
    assert not rev & lam.inversions()
