from schubpuzzle.gash import Gash, dv_step, enumerate_gashed, gash_sites, gash_sums, gash_sums_by_nu
from schubpuzzle.poly import Poly, is_graham_positive
from schubpuzzle.puzzle import product_via_puzzles
from schubpuzzle.strings import BitString, all_strings

B = BitString.parse


def test_sites():
    sites = list(gash_sites(3))
    assert Gash("SWNE", 1, 1) in sites and Gash("SWNE", 2, 2) in sites
    assert Gash("EW", 3, 2, 2) in sites
    assert Gash("EW", 3, 1, 3) not in sites  # boundary gashes have length 2
    assert Gash("EW", 2, 1, 2) in sites
    assert all(g.length == 2 or g.orientation == "EW" for g in sites)


def test_boundary_gash_changes_lambda():
    # removing a NW gash turns lambda into a cover of it
    for G in enumerate_gashed("1010", "0110", "1100"):
        if G.left_ext:
            assert G.gash.t == 1
    sums = gash_sums(enumerate_gashed("1010", "0110", "1100"))
    want = product_via_puzzles("1100", "0110").get("1100")
    assert sums.left_ext == want


def test_identities_exhaustive_small():
    z = Poly()
    for n in range(2, 5):
        for k in range(1, n):
            S = all_strings(n, k)
            tab = {(a, b): product_via_puzzles(a, b) for a in S for b in S}
            for lam in S:
                for mu in S:
                    by_nu = gash_sums_by_nu(lam, mu)
                    for nu in S:
                        g = by_nu.get(nu)
                        if g is None:
                            g = gash_sums([])
                        c = tab[(lam, mu)].get(nu)
                        assert g.left_ext == sum((tab[(l2, mu)].get(nu) for l2 in lam.covers_up()), z)
                        assert g.right_ext == sum((tab[(lam, mu)].get(n2) for n2 in nu.covers_down()), z)
                        assert g.right_int - g.left_int == c * dv_step(lam, nu)
                        assert g.right == g.left


def test_fixed_south_matches_free():
    lam, mu = B("01011"), B("01101")
    by_nu = gash_sums_by_nu(lam, mu)
    for nu in all_strings(5, 3):
        got = gash_sums(enumerate_gashed(lam, mu, nu))
        if nu in by_nu:
            assert got == by_nu[nu]
        else:
            assert got.count == 0


def test_classes_overlap_only_left_ext_right_int():
    for G in enumerate_gashed("01011", "01101"):
        assert not (G.left_ext and G.left_int)
        assert not (G.right_ext and G.right_int)
        assert is_graham_positive(G.weight())
