"""
Equivariant cohomology of Gr(k, n) as lists of polynomials indexed by the
fixed points, subject to the GKM divisibility conditions.

Schubert classes are built from the top class by divided differences and
used as a basis; structure constants come from expanding pointwise products
in that basis.  This is the localization side of the cross-check against
puzzles.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .poly import NonzeroRemainder, Poly, divide_by_product
from .strings import BitString, all_strings, as_bitstring, lattice_leq


class Class:
    "a restriction list alpha|_lambda over all of n choose k"

    __slots__ = ("n", "k", "restrictions")

    def __init__(self, n: int, k: int, restrictions: dict):
        self.n = n
        self.k = k
        zero = Poly()
        self.restrictions = {lam: restrictions.get(lam, zero) for lam in all_strings(n, k)}
        extra = set(restrictions) - set(self.restrictions)
        if extra:
            raise ValueError("restrictions indexed outside %d choose %d: %s" % (n, k, sorted(map(str, extra))))

    @classmethod
    def constant(cls, n: int, k: int, c=1) -> "Class":
        p = c if isinstance(c, Poly) else Poly.const(c)
        return cls(n, k, {lam: p for lam in all_strings(n, k)})

    def __getitem__(self, lam) -> Poly:
        return self.restrictions[as_bitstring(lam)]

    def support(self) -> list:
        return [lam for lam, p in self.restrictions.items() if p]

    def is_zero(self) -> bool:
        return not any(self.restrictions.values())

    def _check(self, other: "Class"):
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("classes live on different Grassmannians")

    def __add__(self, other: "Class") -> "Class":
        self._check(other)
        return Class(self.n, self.k, {lam: p + other.restrictions[lam] for lam, p in self.restrictions.items()})

    def __sub__(self, other: "Class") -> "Class":
        self._check(other)
        return Class(self.n, self.k, {lam: p - other.restrictions[lam] for lam, p in self.restrictions.items()})

    def __mul__(self, other) -> "Class":
        "pointwise product with a class, or scalar product with a polynomial"
        if isinstance(other, Class):
            self._check(other)
            return Class(self.n, self.k, {
                lam: (p * other.restrictions[lam] if p else p)
                for lam, p in self.restrictions.items()
            })
        if isinstance(other, (int, Poly)):
            return Class(self.n, self.k, {lam: p * other for lam, p in self.restrictions.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Class):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.restrictions == other.restrictions

    def __repr__(self):
        body = ", ".join("%s: %s" % (lam, p) for lam, p in self.restrictions.items())
        return "Class(%d, %d, {%s})" % (self.n, self.k, body)


@dataclass
class StructureTable:
    "coefficients c_{lam,mu}^nu of S_lam S_mu, zero entries omitted"

    lam: BitString
    mu: BitString
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {nu: p for nu, p in self.entries.items() if p}

    def get(self, nu) -> Poly:
        return self.entries.get(as_bitstring(nu), Poly())

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return (self.lam, self.mu) == (other.lam, other.mu) and self.entries == other.entries

    def items(self):
        return sorted(self.entries.items())

    def specialize(self, assignment: dict) -> "StructureTable":
        return StructureTable(self.lam, self.mu, {nu: p.specialize(assignment) for nu, p in self.entries.items()})

    def format(self) -> str:
        if not self.entries:
            return "0"
        return " | ".join("%s: %s" % (nu, p) for nu, p in self.items())

    def to_structured(self) -> dict:
        return {
            "lambda": str(self.lam),
            "mu": str(self.mu),
            "entries": {str(nu): p.to_structured() for nu, p in self.items()},
        }

    @classmethod
    def from_structured(cls, data: dict) -> "StructureTable":
        return cls(
            BitString.parse(data["lambda"]),
            BitString.parse(data["mu"]),
            {BitString.parse(nu): Poly.from_structured(p) for nu, p in data["entries"].items()},
        )


def inversion_weight(lam: BitString) -> list:
    "the linear factors y_j - y_i over inversions (i, j), sorted"
    return [Poly.diff(j, i) for i, j in sorted(lam.inversions())]


def inversion_product(lam: BitString) -> Poly:
    out = Poly.const(1)
    for f in inversion_weight(lam):
        out = out * f
    return out


def gkm_pairs(n: int, k: int):
    "pairs (lam, lam', i, j) with lam' = (i j) lam, i < j, lam < lam' lexicographically"
    for lam in all_strings(n, k):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if lam[i] != lam[j]:
                    other = lam.swap(i, j)
                    if lam < other:
                        yield lam, other, i, j


def is_class(alpha: Class):
    """
    Check every GKM condition.  Returns (ok, violations) with violations a
    list of (lam, lam', i, j) where alpha|lam - alpha|lam' is not a multiple
    of y_i - y_j.
    """
    bad = []
    for lam, other, i, j in gkm_pairs(alpha.n, alpha.k):
        d = alpha.restrictions[lam] - alpha.restrictions[other]
        if d and not d.is_divisible_by_linear(i, j):
            bad.append((lam, other, i, j))
    return not bad, bad


def _swap_vars(p: Poly, i: int) -> Poly:
    if not p:
        return p
    vs = p.variables()
    if i not in vs and i + 1 not in vs:
        return p
    return p.specialize({i: Poly.y(i + 1), i + 1: Poly.y(i)})


def si_action(i: int, alpha: Class) -> Class:
    "(s_i . alpha)|_mu = s_i(alpha|_{s_i mu}), acting on variables and indices at once"
    if not 1 <= i < alpha.n:
        raise ValueError("s_i needs 1 <= i < n")
    return Class(alpha.n, alpha.k, {
        mu: _swap_vars(alpha.restrictions[mu.swap(i, i + 1)], i)
        for mu in alpha.restrictions
    })


def divided_difference(i: int, alpha: Class) -> Class:
    "(alpha - s_i alpha) / (y_{i+1} - y_i); raises NonzeroRemainder on non-classes"
    s = si_action(i, alpha)
    out = {}
    for mu, p in alpha.restrictions.items():
        d = p - s.restrictions[mu]
        out[mu] = d.divide_linear(i + 1, i) if d else d
    return Class(alpha.n, alpha.k, out)


_memo_lock = threading.Lock()
_schubert_memo: dict = {}


def _memo(n: int, k: int) -> dict:
    table = _schubert_memo.get((n, k))
    if table is None:
        with _memo_lock:
            table = _schubert_memo.setdefault((n, k), {})
    return table


def clear_memo():
    with _memo_lock:
        _schubert_memo.clear()


def top_class(n: int, k: int) -> Class:
    top = BitString.top(n, k)
    return Class(n, k, {top: inversion_product(top)})


def descent_path(lam: BitString) -> list:
    """
    Positions i at which divided differences are applied, going from
    w_0.id down to lam; at each step the leftmost admissible descent.
    """
    cur = BitString.top(lam.n, lam.k)
    path = []
    while cur != lam:
        for i in range(1, lam.n):
            if cur[i] == 1 and cur[i + 1] == 0:
                nxt = cur.swap(i, i + 1)
                if lattice_leq(lam, nxt):
                    path.append(i)
                    cur = nxt
                    break
        else:
            raise AssertionError("no descent from %s toward %s" % (cur, lam))
    return path


def schubert_class(lam) -> Class:
    lam = as_bitstring(lam)
    n, k = lam.n, lam.k
    memo = _memo(n, k)
    hit = memo.get(lam)
    if hit is not None:
        return hit
    cur = BitString.top(n, k)
    cls = memo.get(cur)
    if cls is None:
        cls = memo.setdefault(cur, top_class(n, k))
    for i in descent_path(lam):
        cur = cur.swap(i, i + 1)
        nxt = memo.get(cur)
        if nxt is None:
            nxt = memo.setdefault(cur, divided_difference(i, cls))
        cls = nxt
    return cls


def all_schubert_classes(n: int, k: int) -> dict:
    return {lam: schubert_class(lam) for lam in all_strings(n, k)}


def divisor_closed_form(lam: BitString) -> Poly:
    """
    S_dv|_lam = sum_j id_j y_j - sum_j lam_j y_j.  This is the sign that
    agrees with the normalization S_dv|_dv = y_{n-k+1} - y_{n-k}.
    """
    ident = BitString.identity(lam.n, lam.k)
    out = Poly()
    for j in range(1, lam.n + 1):
        c = ident[j] - lam[j]
        if c:
            out = out + Poly.y(j) * c
    return out


def schubert_divisor(n: int, k: int) -> Class:
    if not 0 < k < n:
        raise ValueError("the divisor class needs 0 < k < n")
    cls = schubert_class(BitString.divisor(n, k))
    for lam, p in cls.restrictions.items():
        if p != divisor_closed_form(lam):
            raise AssertionError("divisor class disagrees with closed form at %s: %s" % (lam, p))
    return cls


def divisor_restriction(lam: BitString) -> Poly:
    "S_dv|_lam, read off the closed form"
    return divisor_closed_form(lam)


def _minimal(support: list) -> BitString:
    # lexicographically first among the lattice-minimal elements
    for cand in sorted(support):
        if not any(o != cand and lattice_leq(o, cand) for o in support):
            return cand
    raise AssertionError("empty support")


def expand_in_basis(alpha: Class) -> dict:
    """
    Coefficients Y with alpha = sum Y_lam S_lam.  Peels off a minimal
    element of the support at each step.
    """
    n, k = alpha.n, alpha.k
    rest = dict(alpha.restrictions)
    coeffs = {}
    while True:
        support = [lam for lam, p in rest.items() if p]
        if not support:
            return coeffs
        mu = _minimal(support)
        try:
            y = divide_by_product(rest[mu], inversion_weight(mu))
        except NonzeroRemainder as exc:
            raise NonzeroRemainder("not a class: restriction at minimal %s is %s" % (mu, rest[mu])) from exc
        coeffs[mu] = y
        s = schubert_class(mu)
        for rho, q in s.restrictions.items():
            if q:
                rest[rho] = rest[rho] - y * q
        if rest[mu]:
            raise AssertionError("peeling %s left a remainder" % mu)


_table_memo: dict = {}


def structure_constants_gkm(lam, mu) -> StructureTable:
    lam, mu = as_bitstring(lam), as_bitstring(mu)
    if (lam.n, lam.k) != (mu.n, mu.k):
        raise ValueError("strings from different n choose k")
    key = (lam, mu)
    hit = _table_memo.get(key)
    if hit is not None:
        return hit
    prod = schubert_class(lam) * schubert_class(mu)
    table = StructureTable(lam, mu, expand_in_basis(prod))
    _table_memo[key] = table
    return table


def forgetful(table: StructureTable) -> dict:
    "set every y to 0; what survives is ordinary Schubert calculus"
    out = {}
    for nu, p in table.entries.items():
        c = p.constant_term()
        if c:
            out[nu] = c
    return out
