import pytest

from schubpuzzle.gkm import (
    Class, divided_difference, divisor_closed_form, expand_in_basis, forgetful,
    inversion_product, is_class, schubert_class, schubert_divisor, si_action,
    structure_constants_gkm,
)
from schubpuzzle.poly import NonzeroRemainder, Poly, is_graham_positive
from schubpuzzle.strings import BitString, all_strings, lattice_leq

y = Poly.y
B = BitString.parse


def cases(max_n):
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            yield n, k


def test_constant_and_linear_lists_are_classes():
    assert is_class(Class.constant(4, 2))[0]
    lin = Class(4, 2, {lam: sum((y(i) for i in lam.ones()), Poly()) for lam in all_strings(4, 2)})
    assert is_class(lin)[0]


def test_non_class_reported():
    bad = Class(4, 2, {B("0101"): y(1)})
    ok, report = is_class(bad)
    assert not ok
    assert (B("0101"), B("1001"), 1, 2) in report


def test_schubert_class_characterization():
    # support above lam, homogeneous of degree l(lam), normalized, GKM
    for n, k in cases(5):
        for lam in all_strings(n, k):
            cls = schubert_class(lam)
            assert is_class(cls)[0]
            assert cls[lam] == inversion_product(lam)
            for mu, p in cls.restrictions.items():
                if p:
                    assert lattice_leq(lam, mu)
                    assert p.is_homogeneous() and p.degree() == lam.length()


def test_schubert_extremes():
    assert schubert_class(BitString.identity(4, 2)) == Class.constant(4, 2)
    top = BitString.top(4, 2)
    assert schubert_class(top).support() == [top]
    assert schubert_class(B("0101"))[B("1010")] == y(4) - y(1)


def test_si_action():
    cls = schubert_class(B("01011"))
    for i in range(1, 5):
        assert si_action(i, si_action(i, cls)) == cls
    const = Class.constant(5, 3, 7)
    assert si_action(2, const) == const
    # s_i fixes S_lam when lam_i <= lam_{i+1}
    for lam in all_strings(4, 2):
        for i in range(1, 4):
            if lam[i] <= lam[i + 1]:
                assert si_action(i, schubert_class(lam)) == schubert_class(lam)


def test_divided_differences_on_schubert_classes():
    for n, k in cases(5):
        for lam in all_strings(n, k):
            for i in range(1, n):
                dd = divided_difference(i, schubert_class(lam))
                if lam[i] > lam[i + 1]:
                    assert dd == schubert_class(lam.swap(i, i + 1))
                else:
                    assert dd.is_zero()
    assert divided_difference(1, Class.constant(3, 1)).is_zero()


def test_divided_difference_rejects_non_class():
    bad = Class(3, 1, {B("010"): y(3)})
    with pytest.raises(NonzeroRemainder):
        divided_difference(1, bad)


def test_divisor_closed_form():
    for n in range(2, 7):
        for k in range(1, n):
            cls = schubert_divisor(n, k)
            dv = BitString.divisor(n, k)
            assert cls[BitString.identity(n, k)] == Poly()
            assert cls[dv] == inversion_product(dv)
            for lam in all_strings(n, k):
                assert cls[lam] == divisor_closed_form(lam)
    assert divisor_closed_form(B("1010")) == y(4) - y(1)


def test_expand_in_basis():
    lam = B("0110")
    assert expand_in_basis(schubert_class(lam)) == {lam: Poly.const(1)}
    assert expand_in_basis(Class(4, 2, {})) == {}
    prod = schubert_class(B("0101")) * schubert_class(B("1010"))
    assert expand_in_basis(prod) == {B("1010"): y(4) - y(1), B("1100"): Poly.const(1)}
    with pytest.raises(NonzeroRemainder):
        expand_in_basis(Class(4, 2, {B("0101"): y(1)}))


def test_worked_products():
    assert structure_constants_gkm("010", "100").entries == {B("100"): y(3) - y(1)}
    t = structure_constants_gkm("0101", "0101")
    assert t.entries == {B("0101"): y(3) - y(2), B("1001"): Poly.const(1), B("0110"): Poly.const(1)}
    assert forgetful(t) == {B("1001"): 1, B("0110"): 1}
    assert t.format() == "0101: y3 - y2 | 0110: 1 | 1001: 1"
    big = forgetful(structure_constants_gkm("010101", "010101"))
    assert big == {B("110001"): 1, B("101010"): 2, B("011100"): 1}


def test_identity_multiplies_trivially():
    for lam in all_strings(5, 2):
        assert structure_constants_gkm(BitString.identity(5, 2), lam).entries == {lam: Poly.const(1)}


def test_table_laws_exhaustive():
    for n, k in cases(4):
        S = all_strings(n, k)
        for lam in S:
            for mu in S:
                t = structure_constants_gkm(lam, mu)
                assert t.entries == structure_constants_gkm(mu, lam).entries
                assert t.get(lam) == schubert_class(mu)[lam]
                for nu, p in t.entries.items():
                    assert lattice_leq(lam, nu) and lattice_leq(mu, nu)
                    assert p.is_homogeneous()
                    assert p.degree() == lam.length() + mu.length() - nu.length()
                    assert is_graham_positive(p)


def test_structured_round_trip():
    from schubpuzzle.gkm import StructureTable
    t = structure_constants_gkm("0101", "0101")
    assert StructureTable.from_structured(t.to_structured()) == t
