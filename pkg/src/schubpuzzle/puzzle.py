"""
Puzzles with the equivariant rhombus: tilings whose weighted count gives
equivariant structure constants.

A puzzle of size n is a code assignment on the triangle board (see
board.py).  Boundary conventions, all read left to right:

    NW side, bottom-left corner up to the apex: lambda
    NE side, apex down to the bottom-right corner: mu
    S side: nu

The sum of weights of the puzzles with boundary (lambda, mu, nu) is the
coefficient of S_nu in S_lambda S_mu.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import board as bd
from .gkm import StructureTable, divisor_closed_form
from .poly import Poly
from .strings import BitString, as_bitstring


class EquivariantPiecePresent(ValueError):
    "the equivariant rhombus has no rotated counterpart"


class PuzzleFormatError(ValueError):
    pass


PIECE_KINDS = (
    "0-triangle-up", "0-triangle-down", "1-triangle-up", "1-triangle-down",
    "rhombus-NS", "rhombus-NWSE", "rhombus-SWNE", "equivariant-rhombus",
)


@dataclass(frozen=True)
class Puzzle:
    n: int
    codes: tuple
    shape: str = "triangle"

    def __post_init__(self):
        bd.check_codes(self.board, self.codes)

    @property
    def board(self) -> bd.Board:
        return bd.board_for(self.shape, self.n)

    def code(self, cell) -> str:
        return self.codes[self.board.index[cell]]

    def labels(self) -> dict:
        return bd.labels_of(self.board, self.codes)

    def rows(self) -> list:
        "one string of codes per row, in reading order"
        b = self.board
        return ["".join(self.codes[b.index[c]] for c in b.rows[r]) for r in sorted(b.rows)]

    @property
    def boundary(self):
        return boundary_of(self.n, self.labels())

    @property
    def lam(self):
        return self.boundary[0]

    @property
    def mu(self):
        return self.boundary[1]

    @property
    def nu(self):
        return self.boundary[2]

    def equivariant_cells(self) -> list:
        "the upper halves U(r, t) of equivariant rhombi"
        return [c for c, code in zip(self.board.cells, self.codes) if code == "E" and c[0] == "U"]

    def is_ordinary(self) -> bool:
        return "E" not in self.codes

    def __str__(self):
        return to_text(self)


# boundary edges -------------------------------------------------------------

def nw_edges(n):
    "lambda_i sits on L(n+1-i, 1)"
    return [("L", n + 1 - i, 1) for i in range(1, n + 1)]


def ne_edges(n):
    return [("R", i, i) for i in range(1, n + 1)]


def s_edges(n):
    return [("H", n, i) for i in range(1, n + 1)]


def boundary_of(n: int, labels: dict):
    def read(edges):
        return BitString(tuple(int(labels[e]) for e in edges))
    return read(nw_edges(n)), read(ne_edges(n)), read(s_edges(n))


def boundary_preset(lam=None, mu=None, nu=None, n=None) -> dict:
    preset = {}
    for word, edges in ((lam, nw_edges), (mu, ne_edges), (nu, s_edges)):
        if word is not None:
            for e, b in zip(edges(n), word.bits):
                preset[e] = str(b)
    return preset


def _prepare(*words):
    words = [as_bitstring(w) if w is not None else None for w in words]
    given = [w for w in words if w is not None]
    n = given[0].n
    if any(w.n != n for w in given):
        raise ValueError("boundary strings of different lengths: %s" % ", ".join(map(str, given)))
    same_k = len({w.k for w in given}) == 1
    return words, n, same_k


# enumeration ---------------------------------------------------------------

def enumerate_puzzles(lam, mu, nu, ordinary_only=False) -> list:
    """
    All puzzles with boundary (lam, mu, nu), in the order found by filling
    cells in reading order and trying pieces in a fixed order.  Strings with
    different numbers of ones give the empty list.
    """
    (lam, mu, nu), n, same_k = _prepare(lam, mu, nu)
    if not same_k:
        return []
    codes = bd.ORDINARY_CODES if ordinary_only else bd.CODE_ORDER
    preset = boundary_preset(lam, mu, nu, n)
    return [Puzzle(n, c) for c in bd.fill(bd.triangle(n), preset, codes=codes)]


def enumerate_free_south(lam, mu, ordinary_only=False) -> list:
    "all puzzles with the given NW and NE sides, any S side"
    (lam, mu), n, same_k = _prepare(lam, mu)
    if not same_k:
        return []
    codes = bd.ORDINARY_CODES if ordinary_only else bd.CODE_ORDER
    preset = boundary_preset(lam, mu, None, n)
    return [Puzzle(n, c) for c in bd.fill(bd.triangle(n), preset, codes=codes)]


def equivariant_factor(n: int, r: int, t: int) -> Poly:
    "weight of the equivariant rhombus whose upper half is U(r, t)"
    return Poly.diff(t + n - r, t)


def puzzle_weight(P: Puzzle) -> Poly:
    out = Poly.const(1)
    for _, r, t in P.equivariant_cells():
        out = out * equivariant_factor(P.n, r, t)
    return out


def product_via_puzzles(lam, mu) -> StructureTable:
    lam, mu = as_bitstring(lam), as_bitstring(mu)
    entries = {}
    for P in enumerate_free_south(lam, mu):
        nu = P.nu
        entries[nu] = entries.get(nu, Poly()) + puzzle_weight(P)
    return StructureTable(lam, mu, entries)


def puzzle_counts(lam, mu, ordinary_only=False) -> dict:
    out = {}
    for P in enumerate_free_south(lam, mu, ordinary_only):
        out[P.nu] = out.get(P.nu, 0) + 1
    return out


# symmetries ----------------------------------------------------------------

def _transform(P: Puzzle, vmap, relabel) -> Puzzle:
    labels = P.labels()
    new = {}
    for e, lab in labels.items():
        a, b = bd.edge_vertices(e)
        new[bd.edge_from_vertices(vmap(a), vmap(b))] = relabel.get(lab, lab)
    return Puzzle(P.n, bd.codes_from_labels(P.board, new), P.shape)


def dual_puzzle(P: Puzzle) -> Puzzle:
    "mirror left-right and exchange 0s and 1s"
    return _transform(P, lambda v: (v[0], v[0] - v[1]), {"0": "1", "1": "0"})


def rotate_puzzle(P: Puzzle) -> Puzzle:
    """
    Rotate 120 degrees clockwise: the NW side moves to the NE side.  Only
    ordinary puzzles can be rotated.
    """
    if not P.is_ordinary():
        raise EquivariantPiecePresent("puzzle has equivariant pieces at %s" % P.equivariant_cells())
    n = P.n
    # (distance to S, to NW, to NE) -> (to NE, to S, to NW)
    return _transform(P, lambda v: (n - v[0] + v[1], n - v[0]), {})


def rotated_boundary(lam, mu, nu):
    "the boundary of a clockwise-rotated puzzle"
    return nu.reverse(), lam, mu.reverse()


# pieces --------------------------------------------------------------------

def pieces(P: Puzzle) -> list:
    """
    The tiling as (kind, cells) pairs, each rhombus listed once with its two
    half-cells, ordered by the first cell in reading order.
    """
    out = []
    b = P.board
    for c, code in zip(b.cells, P.codes):
        kind, r, t = c
        if code in "01":
            out.append(("%s-triangle-%s" % (code, "up" if kind == "U" else "down"), (c,)))
        elif kind == "U":
            if code == "N":
                out.append(("rhombus-NS", (c, ("D", r + 1, t))))
            elif code == "E":
                out.append(("equivariant-rhombus", (c, ("D", r + 1, t))))
            elif code == "A":
                out.append(("rhombus-SWNE", (c, ("D", r, t))))
        elif code == "B":
            out.append(("rhombus-NWSE", (c, ("U", r, t + 1))))
    return out


# the diagonal puzzle -------------------------------------------------------

def unique_diagonal_puzzle(lam) -> Puzzle:
    """
    Build the only puzzle with all three sides lam, bottom-up: row n holds
    the triangles of lam; each trough above is filled by the one piece that
    fits its two sloped edges.
    """
    lam = as_bitstring(lam)
    n = lam.n
    up = {}
    down = {}
    lab_l = {}
    lab_r = {}
    for t in range(1, n + 1):
        up[(n, t)] = str(lam[t])
        lab_l[(n, t)] = lab_r[(n, t)] = str(lam[t])
    for r in range(n - 1, 0, -1):
        for t in range(1, r + 1):
            a, b = lab_r[(r + 1, t)], lab_l[(r + 1, t + 1)]
            if a == b:
                code = a
            elif (a, b) == ("0", "1"):
                code = "N"
            else:
                code = "E"
            up[(r, t)] = down[(r + 1, t)] = code
            lab_r[(r, t)], lab_l[(r, t)] = a, b
    board = bd.triangle(n)
    codes = tuple(up[(r, t)] if kind == "U" else down[(r, t)] for kind, r, t in board.cells)
    return Puzzle(n, codes)


# flux ----------------------------------------------------------------------

@dataclass
class FluxReport:
    disc_sum: Poly
    swne_count: int
    left_scabs: list
    right_scabs: list
    scab_flux: Poly
    expected: Poly

    @property
    def ok(self) -> bool:
        return self.disc_sum == self.expected and self.scab_flux == self.expected


def swne_cells(P: Puzzle) -> list:
    return [c for c, code in zip(P.board.cells, P.codes) if c[0] == "U" and code == "A"]


def disc(n: int, r: int, t: int) -> Poly:
    "y_{j+1} - y_j for the SW-NE rhombus with upper half U(r, t)"
    j = t + n - r
    return Poly.diff(j + 1, j)


def scabs(P: Puzzle):
    """
    left-scabs: SW-NE rhombus on a downward 1-triangle; right-scabs: upward
    1-triangle on a SW-NE rhombus.  Each entry is (cells, weight), the
    weight being that of the equivariant rhombus that fits the region.
    """
    n = P.n
    idx = P.board.index
    left, right = [], []
    for _, r, t in swne_cells(P):
        below = ("D", r + 1, t)
        if below in idx and P.codes[idx[below]] == "1":
            left.append(((("U", r, t), ("D", r, t), below), equivariant_factor(n, r, t)))
        above = ("U", r - 1, t)
        if above in idx and P.codes[idx[above]] == "1":
            right.append(((above, ("D", r, t), ("U", r, t)), equivariant_factor(n, r - 1, t)))
    return left, right


def flux_diagnostics(P: Puzzle) -> FluxReport:
    n = P.n
    lam, _, nu = P.boundary
    cells = swne_cells(P)
    disc_sum = Poly()
    for _, r, t in cells:
        disc_sum = disc_sum + disc(n, r, t)
    left, right = scabs(P)
    flux = Poly()
    for _, w in right:
        flux = flux + w
    for _, w in left:
        flux = flux - w
    expected = divisor_closed_form(nu) - divisor_closed_form(lam)
    return FluxReport(disc_sum, len(cells), left, right, flux, expected)


# serialization -------------------------------------------------------------

def to_text(P: Puzzle) -> str:
    return "%s %d\n%s\n" % (P.shape, P.n, "\n".join(P.rows()))


def from_text(text: str) -> Puzzle:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines:
        raise PuzzleFormatError("empty puzzle text")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("triangle", "diamond") or not head[1].isdigit():
        raise PuzzleFormatError("line 1: expected 'triangle <n>' or 'diamond <n>', got %r" % lines[0])
    shape, n = head[0], int(head[1])
    if n < 1:
        raise PuzzleFormatError("line 1: size must be positive")
    board = bd.board_for(shape, n)
    rows = lines[1:]
    want = [len(board.rows[r]) for r in sorted(board.rows)]
    if len(rows) != len(want):
        raise PuzzleFormatError("expected %d rows, got %d" % (len(want), len(rows)))
    for i, (row, w) in enumerate(zip(rows, want)):
        if len(row) != w:
            raise PuzzleFormatError("line %d: expected %d cells, got %d" % (i + 2, w, len(row)))
        for j, ch in enumerate(row):
            if ch not in bd.CODE_ORDER:
                raise PuzzleFormatError("line %d, column %d: unknown piece code %r" % (i + 2, j + 1, ch))
    try:
        return Puzzle(n, tuple("".join(rows)), shape)
    except ValueError as exc:
        raise PuzzleFormatError("inconsistent tiling: %s" % exc) from exc


def to_structured(P: Puzzle) -> dict:
    return {"shape": P.shape, "n": P.n, "rows": P.rows()}


def from_structured(data: dict) -> Puzzle:
    try:
        text = "%s %d\n%s" % (data["shape"], data["n"], "\n".join(data["rows"]))
    except (KeyError, TypeError) as exc:
        raise PuzzleFormatError("structured puzzle needs shape, n, rows") from exc
    return from_text(text)
