from schubpuzzle.gkm import structure_constants_gkm
from schubpuzzle.mspuzzle import (
    enumerate_ms, molev_sagan_constants, ms_boundary, ms_weight, z_to_y,
)
from schubpuzzle.poly import Poly
from schubpuzzle.puzzle import puzzle_counts
from schubpuzzle.strings import BitString, all_strings

y, z = Poly.y, Poly.z
B = BitString.parse


def test_small_example():
    assert molev_sagan_constants("10", "01") == {B("10"): Poly.const(1), B("01"): y(1) - z(1)}


def test_four_by_two_example():
    e = molev_sagan_constants("0101", "0101")
    assert e == {B("0101"): (y(3) - z(1)) + (y(1) - z(2)), B("1001"): Poly.const(1), B("0110"): Poly.const(1)}
    Ps = enumerate_ms("0101", "0101")
    assert len(Ps) == 4
    eq = sorted(str(ms_weight(P)) for P in Ps if not P.is_ordinary())
    assert eq == sorted([str(y(3) - z(1)), str(y(1) - z(2))])


def test_trivial_k():
    for n in range(1, 5):
        for k in (0, n):
            S = all_strings(n, k)
            assert len(enumerate_ms(S[0], S[0])) == 1


def test_specializations():
    for n in range(1, 5):
        for k in range(n + 1):
            S = all_strings(n, k)
            for theta in S:
                for mu in S:
                    e = molev_sagan_constants(theta, mu)
                    spec = {nu: z_to_y(p, n) for nu, p in e.items()}
                    assert {nu: p for nu, p in spec.items() if p} == structure_constants_gkm(theta, mu).entries
                    ordinary = puzzle_counts(theta, mu, ordinary_only=True)
                    for nu in S:
                        if nu.length() == theta.length() + mu.length():
                            assert e.get(nu, Poly()).constant_term() == ordinary.get(nu, 0)


def test_boundary_read_back():
    for P in enumerate_ms("0110", "0101"):
        theta, mu, _ = ms_boundary(P)
        assert (theta, mu) == (B("0110"), B("0101"))
    assert enumerate_ms("01", "11") == []
