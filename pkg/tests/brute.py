"""
Independent tiling search used as an oracle for the puzzle enumerator.

Geometry is rebuilt here from vertex coordinates, and pieces are placed
whole (triangles and rhombi) with labels taken straight from the piece
rules, filling bottom row first, right to left.
"""

from collections import Counter

from schubpuzzle.poly import Poly
from schubpuzzle.strings import BitString


def _kind(a, b):
    if a[0] == b[0]:
        return "H"
    if a[1] == b[1]:
        return "/"
    return "\\"


def _edges(vs):
    vs = list(vs)
    return [frozenset((vs[i], vs[j])) for i in range(3) for j in range(i + 1, 3)]


def triangle_cells(n):
    cells = []
    for row in range(1, n + 1):
        for p in range(1, row + 1):
            cells.append(("up", frozenset({(row, p - 1), (row, p), (row - 1, p - 1)})))
        for p in range(1, row):
            cells.append(("down", frozenset({(row - 1, p - 1), (row - 1, p), (row, p)})))
    return cells


# rhombus label rules by edge direction
RHOMBI = {
    "NS": {"\\": "0", "/": "1"},
    "EQ": {"\\": "1", "/": "0"},
    "SWNE": {"/": "0", "H": "1"},
    "NWSE": {"H": "0", "\\": "1"},
}
# the short diagonal of each rhombus
DIAGONAL = {"NS": "H", "EQ": "H", "SWNE": "\\", "NWSE": "/"}


def tilings(n, lam, mu, nu=None):
    """
    Yield (S side, weight) for every tiling with NW side lam (bottom to
    apex), NE side mu (apex down) and S side nu (left to right, free if None).
    """
    cells = triangle_cells(n)
    cells.sort(key=lambda c: (-max(v[0] for v in c[1]), -sum(v[1] - v[0] / 2 for v in c[1])))
    fixed = {}
    for i in range(1, n + 1):
        fixed[frozenset({(n + 1 - i, 0), (n - i, 0)})] = str(lam[i])
        fixed[frozenset({(i - 1, i - 1), (i, i)})] = str(mu[i])
        if nu is not None:
            fixed[frozenset({(n, i - 1), (n, i)})] = str(nu[i])
    by_edge = {}
    for c in cells:
        for e in _edges(c[1]):
            by_edge.setdefault(e, []).append(c)
    covered = set()
    labels = dict(fixed)

    def options(cell):
        for x in "01":
            yield [cell], {e: x for e in _edges(cell[1])}, None
        for name, rule in RHOMBI.items():
            for e in _edges(cell[1]):
                a, b = tuple(e)
                if _kind(a, b) != DIAGONAL[name]:
                    continue
                others = [c for c in by_edge[e] if c != cell]
                if not others or others[0] in covered:
                    continue
                other = others[0]
                outer = [f for f in _edges(cell[1]) + _edges(other[1]) if f != e]
                lab = {}
                for f in outer:
                    u, v = tuple(f)
                    lab[f] = rule[_kind(u, v)]
                pts = cell[1] | other[1]
                yield [cell, other], lab, (name, pts)

    def rec(i, weight):
        while i < len(cells) and cells[i] in covered:
            i += 1
        if i == len(cells):
            s = BitString(tuple(int(labels[frozenset({(n, j - 1), (n, j)})]) for j in range(1, n + 1)))
            yield s, weight
            return
        for used, lab, rh in options(cells[i]):
            if any(labels.get(e, x) != x for e, x in lab.items()):
                continue
            added = [e for e in lab if e not in labels]
            for e in added:
                labels[e] = lab[e]
            covered.update(used)
            w = weight
            if rh is not None and rh[0] == "EQ":
                pts = rh[1]
                i_ = min(v[1] for v in pts) + 1
                j_ = n - max(v[0] - v[1] for v in pts) + 1
                w = w * (Poly.y(j_) - Poly.y(i_))
            yield from rec(i + 1, w)
            covered.difference_update(used)
            for e in added:
                del labels[e]

    yield from rec(0, Poly.const(1))


def tiling_multiset(n, lam, mu):
    return Counter((s, str(w)) for s, w in tilings(n, lam, mu))
