"""
Gashed puzzles: puzzles with one short segment whose two sides carry
different labels.

A SW-NE gash is the pair of "/" edges L(r+1, t), L(r, t); reading each
side from its lower edge to its upper edge, the west side shows 0, 1 and
the east side 1, 0.  With t = 1 the west side is the NW boundary, where
lambda reads 01 but the pieces see 10.

An E-W gash is a run of horizontals H(r, t), ..., H(r, t+l-1), l >= 2,
read west to east: the north side shows 0, E, ..., E, 1 and the south side
1, E, ..., E, 0, the inner edges being short diagonals of equivariant
rhombi.  With r = n the south side is the S boundary, where nu reads 10
but the pieces see 01.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import board as bd
from .gkm import divisor_closed_form
from .poly import Poly
from .puzzle import boundary_preset, equivariant_factor
from .strings import BitString, as_bitstring


@dataclass(frozen=True)
class Gash:
    orientation: str  # "SWNE" or "EW"
    r: int
    t: int
    length: int = 2

    def edges(self) -> list:
        if self.orientation == "SWNE":
            return [("L", self.r + 1, self.t), ("L", self.r, self.t)]
        return [("H", self.r, self.t + i) for i in range(self.length)]


def gash_sites(n: int):
    for r in range(1, n):
        for t in range(1, r + 1):
            yield Gash("SWNE", r, t)
    for r in range(1, n + 1):
        longest = 2 if r == n else r
        for length in range(2, longest + 1):
            for t in range(1, r - length + 2):
                yield Gash("EW", r, t, length)


@dataclass(frozen=True)
class GashedPuzzle:
    n: int
    codes: tuple
    gash: Gash
    lam: BitString
    mu: BitString
    nu: BitString
    left_ext: bool
    left_int: bool
    right_ext: bool
    right_int: bool

    @property
    def in_left(self) -> bool:
        return self.left_ext or self.left_int

    @property
    def in_right(self) -> bool:
        return self.right_ext or self.right_int

    def code(self, cell) -> str:
        return self.codes[bd.triangle(self.n).index[cell]]

    def weight(self) -> Poly:
        out = Poly.const(1)
        for (kind, r, t), code in zip(bd.triangle(self.n).cells, self.codes):
            if kind == "U" and code == "E":
                out = out * equivariant_factor(self.n, r, t)
        return out


def _swap(word: BitString, i: int) -> BitString:
    return word.swap(i, i + 1)


def _setup(g: Gash, n: int, lam: BitString, mu: BitString, nu):
    """
    Preset labels and private keys for one gash site, or None if the outer
    boundary cannot carry this gash.  Returns (preset, private, inner_lam).
    """
    private = {}
    gash_labels = {}
    inner_lam, inner_nu = lam, nu
    if g.orientation == "SWNE":
        lower, upper = g.edges()
        if g.t == 1:
            i = n - g.r  # lower edge holds lambda_i, upper lambda_{i+1}
            if (lam[i], lam[i + 1]) != (0, 1):
                return None
            inner_lam = _swap(lam, i)
        else:
            for key, cell, lab in (("lower", ("D", g.r + 1, g.t - 1), "0"), ("upper", ("D", g.r, g.t - 1), "1")):
                pk = ("gash", key)
                private[(cell, 2)] = pk
                gash_labels[pk] = lab
        gash_labels[lower], gash_labels[upper] = "1", "0"
    else:
        edges = g.edges()
        if g.r == n:
            if nu is not None:
                if (nu[g.t], nu[g.t + 1]) != (1, 0):
                    return None
                inner_nu = _swap(nu, g.t)
        else:
            for i, e in enumerate(edges):
                if 0 < i < len(edges) - 1:
                    continue
                pk = ("gash", i)
                private[(("D", g.r + 1, e[2]), 0)] = pk
                gash_labels[pk] = "1" if i == 0 else "0"
        for i, e in enumerate(edges):
            gash_labels[e] = "0" if i == 0 else "1" if i == len(edges) - 1 else "E"
    preset = boundary_preset(inner_lam, mu, inner_nu, n)
    for e, lab in gash_labels.items():
        if preset.get(e, lab) != lab:
            return None
        preset[e] = lab
    return preset, private, inner_lam


def enumerate_gashed(lam, mu, nu=None) -> list:
    """
    All gashed puzzles with NW side lam and NE side mu (and S side nu if
    given), each flagged for the four classes

        left_ext:  the gash lies on the NW boundary
        left_int:  the gash contains the SE edge of an equivariant rhombus
        right_ext: the gash lies on the S boundary
        right_int: the gash contains the NW edge of an equivariant rhombus
    """
    lam, mu = as_bitstring(lam), as_bitstring(mu)
    nu = as_bitstring(nu) if nu is not None else None
    n = lam.n
    if mu.n != n or (nu is not None and nu.n != n):
        raise ValueError("boundary strings of different lengths")
    if lam.k != mu.k or (nu is not None and nu.k != lam.k):
        return []
    board = bd.triangle(n)
    out = []
    for g in gash_sites(n):
        setup = _setup(g, n, lam, mu, nu)
        if setup is None:
            continue
        preset, private, _ = setup
        for codes in bd.fill(board, preset, private):
            code = dict(zip(board.cells, codes))
            seen_nu = BitString(tuple(
                int(bd.UP_LABELS[code[("U", n, i)]][2]) for i in range(1, n + 1)
            ))
            if g.orientation == "EW" and g.r == n:
                seen_nu = _swap(seen_nu, g.t)
            left_int = right_int = False
            if g.orientation == "SWNE":
                left_int = code.get(("D", g.r + 1, g.t - 1)) == "E"
                right_int = code[("U", g.r, g.t)] == "E"
            out.append(GashedPuzzle(
                n, codes, g, lam, mu, seen_nu,
                left_ext=g.orientation == "SWNE" and g.t == 1,
                left_int=left_int,
                right_ext=g.orientation == "EW" and g.r == n,
                right_int=right_int,
            ))
    return out


@dataclass
class GashSums:
    "weight sums over the four classes and their unions"
    left_ext: Poly
    left_int: Poly
    right_ext: Poly
    right_int: Poly
    left: Poly
    right: Poly
    count: int


def gash_sums(gashed) -> GashSums:
    z = Poly()
    s = dict(left_ext=z, left_int=z, right_ext=z, right_int=z, left=z, right=z)
    for G in gashed:
        w = G.weight()
        for name in ("left_ext", "left_int", "right_ext", "right_int"):
            if getattr(G, name):
                s[name] = s[name] + w
        if G.in_left:
            s["left"] = s["left"] + w
        if G.in_right:
            s["right"] = s["right"] + w
    return GashSums(count=len(gashed), **s)


def gash_sums_by_nu(lam, mu) -> dict:
    "gash_sums for every S side at once, from one free-south enumeration"
    buckets = {}
    for G in enumerate_gashed(lam, mu):
        buckets.setdefault(G.nu, []).append(G)
    return {nu: gash_sums(gs) for nu, gs in buckets.items()}


def dv_step(lam: BitString, nu: BitString) -> Poly:
    "S_dv|_nu - S_dv|_lam"
    return divisor_closed_form(nu) - divisor_closed_form(lam)

