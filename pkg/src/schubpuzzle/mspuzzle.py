"""
MS-puzzles: tilings of the size-n diamond (an upward triangle on a downward
one, vertices N=(0,0), W=(n,0), E=(n,n), S=(2n,n)) computing the mixed
constants e_{theta mu}^nu(y, z) in

    s_theta(x|z) s_mu(x|y) = sum_nu e_{theta mu}^nu(y, z) s_nu(x|y).

Sides, each read from its lower end to its upper end:

    SW, from S to W: theta
    NW, from W to N: mu
    SE, from S to E: nu
    NE, from N to E: fixed to 0^(n-k) 1^k

An equivariant rhombus weighs y_j - z_i, where i counts unit bands from the
SE side and j from the SW side, starting at 1.
"""

from __future__ import annotations

from . import board as bd
from .poly import Poly
from .puzzle import Puzzle
from .strings import BitString, as_bitstring


def sw_edges(n):
    return [("R", 2 * n + 1 - i, n + 1 - i) for i in range(1, n + 1)]


def nw_edges(n):
    return [("L", n + 1 - i, 1) for i in range(1, n + 1)]


def se_edges(n):
    return [("L", 2 * n + 1 - i, n + 1) for i in range(1, n + 1)]


def ne_edges(n):
    return [("R", i, i) for i in range(1, n + 1)]


def ms_boundary(P: Puzzle):
    "(theta, mu, nu) read off a diamond"
    labels = P.labels()
    n = P.n

    def read(edges):
        return BitString(tuple(int(labels[e]) for e in edges))
    return read(sw_edges(n)), read(nw_edges(n)), read(se_edges(n))


def enumerate_ms(theta, mu, nu=None) -> list:
    """
    Every MS-puzzle with the given sides; nu=None leaves the SE side free.
    Strings with different numbers of ones give the empty list.
    """
    theta, mu = as_bitstring(theta), as_bitstring(mu)
    nu = as_bitstring(nu) if nu is not None else None
    n = theta.n
    if mu.n != n or (nu is not None and nu.n != n):
        raise ValueError("boundary strings of different lengths")
    if theta.k != mu.k or (nu is not None and nu.k != mu.k):
        return []
    ident = BitString.identity(n, mu.k)
    preset = {}
    for word, edges in ((theta, sw_edges), (mu, nw_edges), (nu, se_edges), (ident, ne_edges)):
        if word is not None:
            for e, b in zip(edges(n), word.bits):
                preset[e] = str(b)
    board = bd.diamond(n)
    return [Puzzle(n, codes, "diamond") for codes in bd.fill(board, preset)]


def ms_factor(n: int, r: int, t: int) -> Poly:
    "MS-weight of the equivariant rhombus with upper half U(r, t)"
    i = n - t + 1
    j = n - r + t
    return Poly.y(j) - Poly.z(i)


def ms_weight(P: Puzzle) -> Poly:
    out = Poly.const(1)
    for _, r, t in P.equivariant_cells():
        out = out * ms_factor(P.n, r, t)
    return out


def molev_sagan_constants(theta, mu) -> dict:
    "nu -> e_{theta mu}^nu, zero entries omitted"
    out = {}
    for P in enumerate_ms(theta, mu):
        nu = ms_boundary(P)[2]
        out[nu] = out.get(nu, Poly()) + ms_weight(P)
    return {nu: p for nu, p in out.items() if p}


def z_to_y(p: Poly, n: int) -> Poly:
    return p.specialize({"z%d" % i: Poly.y(i) for i in range(1, n + 1)})
