"""
Row-transfer count of puzzle weights.

Sweeping the triangle top to bottom, everything below row r depends on row
r only through the labels on its horizontals H(r, 1..r).  Partial fillings
with the same frontier are merged, carrying the sum of their weights.
"""

from __future__ import annotations

from .board import DOWN_BY_LABELS, UP_LABELS
from .poly import Poly
from .puzzle import equivariant_factor
from .strings import BitString, as_bitstring

# upward cells by their left label
_UP_BY_LEFT = {}
for _code, (_l, _r, _h) in UP_LABELS.items():
    _UP_BY_LEFT.setdefault(_l, []).append((_code, _r, _h))

# downward cells by (top, left): at most one, so the right label is forced
_DOWN_RIGHT = {labels[:2]: labels[2] for labels in DOWN_BY_LABELS}


def _row_fills(n, r, top, left, right):
    """
    Fill row r given the labels `top` on H(r-1, .), the NW label `left` and
    the NE label `right`.  Yields (bottom labels, weight factor).
    """
    def rec(t, lab_l, bottom, weight):
        for code, lab_r, lab_h in _UP_BY_LEFT.get(lab_l, ()):
            if r == n and lab_h not in "01":
                continue
            w = weight * equivariant_factor(n, r, t) if code == "E" else weight
            if t == r:
                if lab_r == right:
                    yield bottom + (lab_h,), w
                continue
            # the down cell D(r, t) is forced by its top and left labels
            dr = _DOWN_RIGHT.get((top[t - 1], lab_r))
            if dr is not None:
                yield from rec(t + 1, dr, bottom + (lab_h,), w)

    yield from rec(1, left, (), Poly.const(1))


def frontier_sums(lam, mu) -> dict:
    "map from S side to total weight, over all puzzles with NW lam and NE mu"
    lam, mu = as_bitstring(lam), as_bitstring(mu)
    n = lam.n
    if mu.n != n:
        raise ValueError("boundary strings of different lengths")
    if lam.k != mu.k:
        return {}
    states = {(): Poly.const(1)}
    for r in range(1, n + 1):
        left = str(lam[n + 1 - r])
        right = str(mu[r])
        nxt = {}
        for top, w in states.items():
            for bottom, f in _row_fills(n, r, top, left, right):
                nxt[bottom] = nxt.get(bottom, Poly()) + w * f
        states = {s: p for s, p in nxt.items() if p}
    return {BitString(tuple(int(c) for c in s)): p for s, p in states.items()}


def count_dp(lam, mu, nu) -> Poly:
    "sum of wt(P) over puzzles with boundary (lam, mu, nu)"
    nu = as_bitstring(nu)
    sums = frontier_sums(lam, mu)
    if nu.n != as_bitstring(lam).n:
        raise ValueError("boundary strings of different lengths")
    return sums.get(nu, Poly())
