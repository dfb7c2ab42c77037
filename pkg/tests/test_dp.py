from schubpuzzle.dp import count_dp, frontier_sums
from schubpuzzle.gkm import inversion_product
from schubpuzzle.poly import Poly
from schubpuzzle.puzzle import enumerate_puzzles, product_via_puzzles, puzzle_weight
from schubpuzzle.strings import all_strings


def test_dp_equals_enumeration():
    for n in range(1, 6):
        for k in range(n + 1):
            S = all_strings(n, k)
            for lam in S:
                for mu in S:
                    assert frontier_sums(lam, mu) == product_via_puzzles(lam, mu).entries


def test_dp_single_boundary():
    for lam in all_strings(5, 2):
        assert count_dp(lam, lam, lam) == inversion_product(lam)
    assert count_dp("1010", "0110", "1100") == sum(
        (puzzle_weight(P) for P in enumerate_puzzles("1010", "0110", "1100")), Poly())
    assert count_dp("0101", "0011", "0011") == Poly()
    assert count_dp("0101", "0011", "0101") == Poly.const(1)
