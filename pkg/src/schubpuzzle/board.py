"""
Triangular-lattice boards and the backtracking filler shared by ordinary
puzzles, gashed puzzles and MS diamonds.

Vertices are (row, p) with row counted down from the top and p from the
left.  Cells come in two kinds:

    U(r, t): upward, vertices (r, t-1), (r, t), (r-1, t-1)
    D(r, t): downward, vertices (r-1, t-1), (r-1, t), (r, t)

Edges are named by the upward cell they bound:

    L(r, t): "/" edge on the left of U(r, t)
    R(r, t): "\\" edge on the right of U(r, t)
    H(r, t): horizontal edge below U(r, t)

so D(r, t) has top H(r-1, t), left R(r, t), right L(r, t+1).

Each cell carries a one-letter code.  A rhombus is stored as its two
half-triangles, glued along an edge labeled R (ordinary) or E (the
equivariant rhombus); the codes are

    0, 1  the 0- and 1-triangles
    N     half of the N-S rhombus (short diagonal horizontal)
    B     half of the NW-SE rhombus (short diagonal "/")
    A     half of the SW-NE rhombus (short diagonal "\\")
    E     half of the equivariant rhombus (N-S with 0s and 1s swapped)
"""

from __future__ import annotations

from fractions import Fraction

# label triples (L, R, H) for upward cells and (top, left, right) for downward
UP_LABELS = {
    "0": ("0", "0", "0"),
    "1": ("1", "1", "1"),
    "N": ("1", "0", "R"),
    "B": ("R", "1", "0"),
    "A": ("0", "R", "1"),
    "E": ("0", "1", "E"),
}
DOWN_LABELS = {
    "0": ("0", "0", "0"),
    "1": ("1", "1", "1"),
    "N": ("R", "0", "1"),
    "B": ("0", "1", "R"),
    "A": ("1", "R", "0"),
    "E": ("E", "1", "0"),
}
# fixed trial order: triangles, then N-S, NW-SE, SW-NE rhombi, then equivariant
CODE_ORDER = "01NBAE"
ORDINARY_CODES = "01NBA"

UP_BY_LABELS = {v: k for k, v in UP_LABELS.items()}
DOWN_BY_LABELS = {v: k for k, v in DOWN_LABELS.items()}


def cell_vertices(cell):
    kind, r, t = cell
    if kind == "U":
        return ((r, t - 1), (r, t), (r - 1, t - 1))
    return ((r - 1, t - 1), (r - 1, t), (r, t))


def cell_edges(cell):
    kind, r, t = cell
    if kind == "U":
        return (("L", r, t), ("R", r, t), ("H", r, t))
    return (("H", r - 1, t), ("R", r, t), ("L", r, t + 1))


def edge_vertices(edge):
    kind, r, t = edge
    if kind == "L":
        return ((r, t - 1), (r - 1, t - 1))
    if kind == "R":
        return ((r - 1, t - 1), (r, t))
    return ((r, t - 1), (r, t))


def edge_from_vertices(a, b):
    "inverse of edge_vertices"
    (r1, p1), (r2, p2) = sorted((a, b))
    if r1 == r2:
        return ("H", r1, max(p1, p2))
    if p1 == p2:
        return ("L", r2, p2 + 1)
    return ("R", r2, p2)


def cell_from_vertices(vs):
    vs = sorted(vs)
    rows = [v[0] for v in vs]
    if rows[0] == rows[1]:
        # two vertices on top: downward
        return ("D", rows[2], vs[2][1])
    return ("U", rows[1], vs[2][1])


def _x(v):
    row, p = v
    return Fraction(p) - Fraction(row, 2)


class Board:
    """
    The cells of a region of the triangular lattice, in reading order: row by
    row from the top, left to right within a row.
    """

    def __init__(self, shape: str, n: int, inside, nrows: int):
        self.shape = shape
        self.n = n
        cells = []
        for r in range(1, nrows + 1):
            for t in range(0, nrows + 2):
                for kind in "UD":
                    c = (kind, r, t)
                    if all(inside(v) for v in cell_vertices(c)):
                        cells.append(c)
        cells.sort(key=lambda c: (c[1], sum(_x(v) for v in cell_vertices(c))))
        self.cells = tuple(cells)
        self.index = {c: i for i, c in enumerate(cells)}
        self.edge_cells = {}
        for c in cells:
            for e in cell_edges(c):
                self.edge_cells.setdefault(e, []).append(c)
        self.boundary = frozenset(e for e, cs in self.edge_cells.items() if len(cs) == 1)
        self.rows = {}
        for c in cells:
            self.rows.setdefault(c[1], []).append(c)

    def __repr__(self):
        return "Board(%r, %d)" % (self.shape, self.n)


_boards = {}


def triangle(n: int) -> Board:
    b = _boards.get(("triangle", n))
    if b is None:
        b = Board("triangle", n, lambda v: 0 <= v[1] <= v[0] <= n, n)
        _boards[("triangle", n)] = b
    return b


def diamond(n: int) -> Board:
    "size-n triangle on top of a size-n downward triangle"
    b = _boards.get(("diamond", n))
    if b is None:
        b = Board("diamond", n, lambda v: 0 <= v[1] <= n and 0 <= v[0] - v[1] <= n, 2 * n)
        _boards[("diamond", n)] = b
    return b


def board_for(shape: str, n: int) -> Board:
    if shape == "triangle":
        return triangle(n)
    if shape == "diamond":
        return diamond(n)
    raise ValueError("unknown board shape %r" % shape)


def fill(board: Board, preset: dict, private=None, codes=CODE_ORDER):
    """
    Yield every code assignment (a tuple in reading order) consistent with
    the preset edge labels.  Boundary edges must carry 0 or 1.

    private maps (cell, slot) to a replacement edge key, letting the two
    sides of an edge see different labels; such keys should be preset.
    """
    private = private or {}
    cells = board.cells
    keys = []
    outer = []
    tables = []
    for c in cells:
        ks = tuple(private.get((c, i), e) for i, e in enumerate(cell_edges(c)))
        keys.append(ks)
        outer.append(tuple(k in board.boundary for k in ks))
        table = UP_LABELS if c[0] == "U" else DOWN_LABELS
        tables.append([(code, table[code]) for code in codes])
    assign = dict(preset)
    out = [None] * len(cells)
    m = len(cells)

    def rec(i):
        if i == m:
            yield tuple(out)
            return
        ks = keys[i]
        ob = outer[i]
        for code, labels in tables[i]:
            new = []
            ok = True
            for key, lab, bnd in zip(ks, labels, ob):
                have = assign.get(key)
                if have is None:
                    if bnd and lab in "RE":
                        ok = False
                        break
                    new.append((key, lab))
                elif have != lab:
                    ok = False
                    break
            if not ok:
                continue
            for key, lab in new:
                assign[key] = lab
            out[i] = code
            yield from rec(i + 1)
            for key, _ in new:
                del assign[key]

    yield from rec(0)


def labels_of(board: Board, codes) -> dict:
    """
    Edge labels read off a code assignment.  Raises ValueError if two cells
    disagree on a shared edge.
    """
    out = {}
    for c, code in zip(board.cells, codes):
        table = UP_LABELS if c[0] == "U" else DOWN_LABELS
        for e, lab in zip(cell_edges(c), table[code]):
            have = out.setdefault(e, lab)
            if have != lab:
                raise ValueError("cells disagree on edge %s: %s vs %s" % (e, have, lab))
    return out


def codes_from_labels(board: Board, labels: dict) -> tuple:
    "inverse of labels_of; raises ValueError on a triple that is no piece"
    out = []
    for c in board.cells:
        trip = tuple(labels[e] for e in cell_edges(c))
        table = UP_BY_LABELS if c[0] == "U" else DOWN_BY_LABELS
        code = table.get(trip)
        if code is None:
            raise ValueError("no piece fits cell %s with labels %s" % (c, trip))
        out.append(code)
    return tuple(out)


def check_codes(board: Board, codes):
    "raise ValueError unless the codes tile the board consistently"
    if len(codes) != len(board.cells):
        raise ValueError("expected %d cells, got %d" % (len(board.cells), len(codes)))
    labels = labels_of(board, codes)
    for e in board.boundary:
        if labels[e] not in "01":
            raise ValueError("half-rhombus sticks out of the boundary at %s" % (e,))
    return labels
