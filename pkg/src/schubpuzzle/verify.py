"""
Named verification suites.  Each runs one family of identities over every
index of a fixed n choose k (or a seeded random sample once the triple
count gets large) and reports the cases that fail, with both sides.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .dp import frontier_sums
from .gash import dv_step, gash_sums_by_nu
from .gkm import (
    divisor_closed_form, forgetful, inversion_product, is_class, schubert_class,
    structure_constants_gkm,
)
from .mspuzzle import enumerate_ms, molev_sagan_constants, ms_boundary, ms_weight, z_to_y
from .poly import Poly, conjugate, is_graham_positive
from .puzzle import (
    dual_puzzle, enumerate_free_south, enumerate_puzzles, flux_diagnostics,
    product_via_puzzles, puzzle_counts, puzzle_weight, rotate_puzzle,
    rotated_boundary, unique_diagonal_puzzle,
)
from .strings import BitString, all_strings, lattice_leq

SUITES = (
    "gkm", "pieri", "c-identities", "oracle-equality", "positivity", "duality",
    "flux", "gash-identities", "ordinary", "ms", "dp-equivalence",
)

EXHAUSTIVE_MAX_N = 6
SAMPLE_SIZE = 500
SAMPLE_SEED = 20061016


class UnknownSuite(KeyError):
    pass


@dataclass
class SuiteReport:
    name: str
    n: int
    k: int
    cases: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    sampled: bool = False

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def check(self, ok: bool, inputs, lhs, rhs, what=""):
        self.cases += 1
        if not ok:
            self.failures.append({
                "inputs": [str(x) for x in inputs],
                "identity": what,
                "lhs": str(lhs),
                "rhs": str(rhs),
            })

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = " (sampled)" if self.sampled else ""
        where = " n=%d k=%d" % (self.n, self.k) if self.n else ""
        return "%s %s%s: %d cases, %d failures, %.2fs%s" % (
            status, self.name, where, self.cases, len(self.failures), self.wall_time, extra)

    def to_structured(self) -> dict:
        return {
            "suite": self.name, "n": self.n, "k": self.k, "cases": self.cases,
            "failures": self.failures, "wall_time": round(self.wall_time, 3),
            "sampled": self.sampled, "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_structured(), indent=1, sort_keys=True)


@lru_cache(maxsize=None)
def _puzzle_table(lam, mu):
    return product_via_puzzles(lam, mu)


def _triples(n, k, report):
    S = all_strings(n, k)
    if n <= EXHAUSTIVE_MAX_N:
        return list(product(S, S, S))
    report.sampled = True
    rng = random.Random(SAMPLE_SEED + 1000 * n + k)
    return [(rng.choice(S), rng.choice(S), rng.choice(S)) for _ in range(SAMPLE_SIZE)]


def _pairs(n, k, report):
    seen = []
    for lam, mu, _ in _triples(n, k, report):
        if (lam, mu) not in seen:
            seen.append((lam, mu))
    return seen


def _has_divisor(n, k):
    return 0 < k < n


def _suite_gkm(rep, n, k):
    for lam in all_strings(n, k):
        cls = schubert_class(lam)
        ok, bad = is_class(cls)
        rep.check(ok, [lam], bad, [], "GKM divisibility")
        rep.check(cls[lam] == inversion_product(lam), [lam], cls[lam], inversion_product(lam), "normalization")
        for mu, p in cls.restrictions.items():
            if p:
                rep.check(lattice_leq(lam, mu) and p.is_homogeneous() and p.degree() == lam.length(),
                          [lam, mu], p, "degree %d above lam" % lam.length(), "support and degree")


def _pieri_rhs(lam):
    out = {lam: divisor_closed_form(lam)}
    for up in lam.covers_up():
        out[up] = Poly.const(1)
    return {nu: p for nu, p in out.items() if p}


def _suite_pieri(rep, n, k):
    if not _has_divisor(n, k):
        return
    dv = BitString.divisor(n, k)
    for lam in all_strings(n, k):
        rhs = _pieri_rhs(lam)
        g = structure_constants_gkm(dv, lam).entries
        p = _puzzle_table(dv, lam).entries
        rep.check(g == rhs, [dv, lam], g, rhs, "equivariant Pieri (GKM)")
        rep.check(p == rhs, [dv, lam], p, rhs, "equivariant Pieri (puzzles)")


def _suite_c_identities(rep, n, k):
    S = all_strings(n, k)

    def d(lam, mu, nu):
        return _puzzle_table(lam, mu).get(nu)

    for lam in S:
        rep.check(d(lam, lam, lam) == inversion_product(lam), [lam, lam, lam],
                  d(lam, lam, lam), inversion_product(lam), "c1")
    if not _has_divisor(n, k):
        return
    for lam in S:
        for mu in S:
            lhs = (divisor_closed_form(lam) - divisor_closed_form(mu)) * d(lam, mu, lam)
            rhs = sum((d(lam, m2, lam) for m2 in mu.covers_up()), Poly())
            rep.check(lhs == rhs, [lam, mu, lam], lhs, rhs, "c2")
    for lam, mu, nu in _triples(n, k, rep):
        lhs = dv_step(lam, nu) * d(lam, mu, nu)
        rhs = sum((d(l2, mu, nu) for l2 in lam.covers_up()), Poly()) \
            - sum((d(lam, mu, n2) for n2 in nu.covers_down()), Poly())
        rep.check(lhs == rhs, [lam, mu, nu], lhs, rhs, "c3")


def _suite_oracle_equality(rep, n, k):
    for lam, mu, nu in _triples(n, k, rep):
        a = _puzzle_table(lam, mu).get(nu)
        b = structure_constants_gkm(lam, mu).get(nu)
        rep.check(a == b, [lam, mu, nu], a, b, "puzzles = GKM")


def _suite_positivity(rep, n, k):
    for lam, mu, nu in _triples(n, k, rep):
        p = _puzzle_table(lam, mu).get(nu)
        rep.check(is_graham_positive(p), [lam, mu, nu], p, "Graham-positive", "positivity")


def _suite_duality(rep, n, k):
    for lam, mu, nu in _triples(n, k, rep):
        a = structure_constants_gkm(lam, mu).get(nu)
        b = conjugate(structure_constants_gkm(mu.dual(), lam.dual()).get(nu.dual()), n)
        rep.check(a == b, [lam, mu, nu], a, b, "c = conj(c*)")


def _suite_flux(rep, n, k):
    one = {i: 1 for i in range(1, n + 1)}
    ident = {i: i for i in range(1, n + 1)}
    for lam, mu in _pairs(n, k, rep):
        for P in enumerate_free_south(lam, mu):
            f = flux_diagnostics(P)
            nu = P.nu
            inputs = [lam, mu, nu, "".join(P.codes)]
            rep.check(f.disc_sum == f.expected, inputs, f.disc_sum, f.expected, "disc sum")
            rep.check(f.scab_flux == f.expected, inputs, f.scab_flux, f.expected, "scab flux")
            rep.check(f.swne_count == nu.length() - lam.length(), inputs, f.swne_count,
                      nu.length() - lam.length(), "SW-NE count")
            rep.check(f.disc_sum.evaluate(one) == 0, inputs, f.disc_sum.evaluate(one), 0, "disc at y=1")
            rep.check(f.disc_sum.evaluate(ident) == f.swne_count, inputs, f.disc_sum.evaluate(ident),
                      f.swne_count, "disc at y=i")
            D = dual_puzzle(P)
            rep.check(D.boundary == (mu.dual(), lam.dual(), nu.dual()) and dual_puzzle(D) == P
                      and puzzle_weight(D) == conjugate(puzzle_weight(P), n),
                      inputs, D.boundary, (mu.dual(), lam.dual(), nu.dual()), "dual puzzle")
            if P.is_ordinary():
                R = rotate_puzzle(P)
                rep.check(R.boundary == rotated_boundary(lam, mu, nu) and rotate_puzzle(rotate_puzzle(R)) == P,
                          inputs, R.boundary, rotated_boundary(lam, mu, nu), "rotation")


def _suite_gash(rep, n, k):
    z = Poly()
    sums = {}
    for lam, mu, nu in _triples(n, k, rep):
        if (lam, mu) not in sums:
            sums[(lam, mu)] = gash_sums_by_nu(lam, mu)
        g = sums[(lam, mu)].get(nu)
        le, li, re, ri, left, right = (z,) * 6 if g is None else (
            g.left_ext, g.left_int, g.right_ext, g.right_int, g.left, g.right)
        c = _puzzle_table(lam, mu).get(nu)
        want_le = sum((_puzzle_table(l2, mu).get(nu) for l2 in lam.covers_up()), z)
        want_re = sum((_puzzle_table(lam, mu).get(n2) for n2 in nu.covers_down()), z)
        inputs = [lam, mu, nu]
        rep.check(le == want_le, inputs, le, want_le, "left-ext")
        rep.check(re == want_re, inputs, re, want_re, "right-ext")
        rep.check(ri - li == c * dv_step(lam, nu), inputs, ri - li, c * dv_step(lam, nu), "telescope")
        rep.check(right == left, inputs, right, left, "massage")


def _suite_ordinary(rep, n, k):
    for lam, mu, nu in _triples(n, k, rep):
        full = _puzzle_table(lam, mu)
        c0 = forgetful(full).get(nu, 0)
        count = puzzle_counts(lam, mu, ordinary_only=True).get(nu, 0)
        rep.check(c0 == count, [lam, mu, nu], c0, count, "y=0 equals ordinary count")
        if count:
            rep.check(nu.length() == lam.length() + mu.length(), [lam, mu, nu],
                      nu.length(), lam.length() + mu.length(), "ordinary degree")
    if _has_divisor(n, k):
        dv = BitString.divisor(n, k)
        for lam in all_strings(n, k):
            got = puzzle_counts(dv, lam, ordinary_only=True)
            want = {up: 1 for up in lam.covers_up()}
            rep.check(got == want, [dv, lam], got, want, "ordinary Pieri")


def _suite_ms(rep, n, k):
    for theta, mu in _pairs(n, k, rep):
        e = molev_sagan_constants(theta, mu)
        spec = {nu: z_to_y(p, n) for nu, p in e.items()}
        spec = {nu: p for nu, p in spec.items() if p}
        c = structure_constants_gkm(theta, mu).entries
        rep.check(spec == c, [theta, mu], spec, c, "z=y gives c")
        zero = {nu: p.constant_term() for nu, p in e.items()}
        ordinary = puzzle_counts(theta, mu, ordinary_only=True)
        for nu in all_strings(n, k):
            if nu.length() == theta.length() + mu.length():
                rep.check(zero.get(nu, 0) == ordinary.get(nu, 0), [theta, mu, nu],
                          zero.get(nu, 0), ordinary.get(nu, 0), "y=z=0 gives ordinary count")


def _suite_dp(rep, n, k):
    sums = {}
    for lam, mu, nu in _triples(n, k, rep):
        if (lam, mu) not in sums:
            sums[(lam, mu)] = frontier_sums(lam, mu)
        a = sums[(lam, mu)].get(nu, Poly())
        b = _puzzle_table(lam, mu).get(nu)
        rep.check(a == b, [lam, mu, nu], a, b, "count_dp = enumeration")


_RUNNERS = {
    "gkm": _suite_gkm,
    "pieri": _suite_pieri,
    "c-identities": _suite_c_identities,
    "oracle-equality": _suite_oracle_equality,
    "positivity": _suite_positivity,
    "duality": _suite_duality,
    "flux": _suite_flux,
    "gash-identities": _suite_gash,
    "ordinary": _suite_ordinary,
    "ms": _suite_ms,
    "dp-equivalence": _suite_dp,
}


def applicable(name: str, n: int, k: int) -> bool:
    "pieri needs a divisor class; everything else runs for every 0 <= k <= n"
    if name == "pieri":
        return _has_divisor(n, k)
    return 0 <= k <= n


def run_suite(name: str, n: int, k: int) -> SuiteReport:
    runner = _RUNNERS.get(name)
    if runner is None:
        raise UnknownSuite("unknown suite %r; choose from %s" % (name, ", ".join(SUITES)))
    if not 0 <= k <= n or n < 1:
        raise ValueError("need 0 <= k <= n and n >= 1")
    rep = SuiteReport(name, n, k)
    t0 = time.perf_counter()
    runner(rep, n, k)
    rep.wall_time = time.perf_counter() - t0
    return rep


# worked examples -----------------------------------------------------------

def _y(i):
    return Poly.y(i)


def _z(i):
    return Poly.z(i)


def _fixtures():
    B = BitString.parse
    one = Poly.const(1)

    def table(lam, mu):
        return _puzzle_table(B(lam), B(mu)).entries

    def weights(lam, mu, nu):
        return sorted(str(puzzle_weight(P)) for P in enumerate_puzzles(lam, mu, nu))

    yield ("product 010101 x 010101, ordinary",
           lambda: puzzle_counts(B("010101"), B("010101"), ordinary_only=True),
           {B("110001"): 1, B("101010"): 2, B("011100"): 1})
    yield ("two puzzles for 101010 in 010101 x 010101",
           lambda: len(enumerate_puzzles("010101", "010101", "101010")), 2)
    yield ("product 0101 x 1010", lambda: table("0101", "1010"),
           {B("1010"): _y(4) - _y(1), B("1100"): one})
    yield ("weights of 0101 x 1010 at 1010", lambda: weights("0101", "1010", "1010"),
           sorted([str(_y(3) - _y(1)), str(_y(4) - _y(3))]))
    yield ("weights of the dual product 1010 x 0101 at 1010", lambda: weights("1010", "0101", "1010"),
           sorted([str(_y(4) - _y(2)), str(_y(2) - _y(1))]))
    yield ("product 0101 x 0101", lambda: table("0101", "0101"),
           {B("0101"): _y(3) - _y(2), B("1001"): one, B("0110"): one})
    yield ("three puzzles for 0101 x 0101", lambda: len(enumerate_free_south("0101", "0101")), 3)
    yield ("product 010 x 100, one puzzle",
           lambda: (table("010", "100"), len(enumerate_free_south("010", "100"))),
           ({B("100"): _y(3) - _y(1)}, 1))
    yield ("weights of 100 x 010", lambda: weights("100", "010", "100"),
           sorted([str(_y(2) - _y(1)), str(_y(3) - _y(2))]))
    yield ("no puzzles for 1010, 0110, 1100", lambda: len(enumerate_puzzles("1010", "0110", "1100")), 0)
    yield ("a puzzle of weight (y4-y1)(y5-y4) for 100101, 101010, 110100",
           lambda: str((_y(4) - _y(1)) * (_y(5) - _y(4))) in weights("100101", "101010", "110100"), True)
    yield ("diagonal puzzle of 1001", lambda: puzzle_weight(unique_diagonal_puzzle("1001")),
           (_y(2) - _y(1)) * (_y(3) - _y(1)))
    yield ("S_0101 at 1010", lambda: schubert_class(B("0101"))[B("1010")], _y(4) - _y(1))
    yield ("MS product 10 x 01", lambda: molev_sagan_constants("10", "01"),
           {B("10"): one, B("01"): _y(1) - _z(1)})
    yield ("MS product 0101 x 0101", lambda: molev_sagan_constants("0101", "0101"),
           {B("0101"): (_y(3) - _z(1)) + (_y(1) - _z(2)), B("1001"): one, B("0110"): one})
    yield ("four MS-puzzles for 0101 x 0101", lambda: len(enumerate_ms("0101", "0101")), 4)
    yield ("MS weights for 0101 x 0101 at 0101",
           lambda: sorted(str(ms_weight(P)) for P in enumerate_ms("0101", "0101")
                          if ms_boundary(P)[2] == B("0101")),
           sorted([str(_y(3) - _z(1)), str(_y(1) - _z(2))]))


def regression_fixtures() -> SuiteReport:
    "every worked example, checked verbatim"
    rep = SuiteReport("fixtures", 0, 0)
    t0 = time.perf_counter()
    for name, got, want in _fixtures():
        value = got()
        rep.check(value == want, [], value, want, name)
    rep.wall_time = time.perf_counter() - t0
    return rep
