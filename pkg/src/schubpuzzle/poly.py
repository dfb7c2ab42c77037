"""
Sparse multivariate polynomials with exact integer coefficients in the
variables y_1..y_n and z_1..z_n.

A monomial is a tuple of (variable, exponent) pairs sorted by variable code;
variable codes are ``i`` for y_i and ``Z_OFFSET + i`` for z_i.  Polynomials
are immutable once built.
"""

from __future__ import annotations

import re

Z_OFFSET = 1 << 20


class NonzeroRemainder(ArithmeticError):
    "an exact division that was not exact"


class NotInSubring(ValueError):
    "polynomial is not a polynomial in the differences y_{i+1} - y_i"


class PolyParseError(ValueError):
    pass


def var_name(v: int) -> str:
    if v > Z_OFFSET:
        return "z%d" % (v - Z_OFFSET)
    return "y%d" % v


def _var_code(name: str) -> int:
    kind, idx = name[0], int(name[1:])
    if idx < 1:
        raise PolyParseError("variable index must be positive: %r" % name)
    return idx if kind == "y" else Z_OFFSET + idx


def _var_rank(v: int):
    # larger rank = earlier in the canonical order: y_n > .. > y_1 > z_n > .. > z_1
    if v > Z_OFFSET:
        return (0, v - Z_OFFSET)
    return (1, v)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_deg(m: tuple) -> int:
    return sum(e for _, e in m)


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        # terms: mapping monomial -> int; zero coefficients are dropped
        if terms is None:
            self._terms = {}
        else:
            self._terms = {m: c for m, c in dict(terms).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: int) -> "Poly":
        return cls._raw({((v, 1),): 1})

    @classmethod
    def y(cls, i: int) -> "Poly":
        if i < 1:
            raise ValueError("y index must be >= 1")
        return cls.var(i)

    @classmethod
    def z(cls, i: int) -> "Poly":
        if i < 1:
            raise ValueError("z index must be >= 1")
        return cls.var(Z_OFFSET + i)

    @classmethod
    def diff(cls, j: int, i: int) -> "Poly":
        "y_j - y_i"
        if i == j:
            return cls()
        return cls._raw({((j, 1),): 1, ((i, 1),): -1})

    # queries

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def y_indices(self) -> set:
        return {v for v in self.variables() if v < Z_OFFSET}

    def degree(self) -> int:
        "total degree; -1 for the zero polynomial"
        if not self._terms:
            return -1
        return max(_mono_deg(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({_mono_deg(m) for m in self._terms}) <= 1

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly()
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = _mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution and division

    def specialize(self, assignment: dict) -> "Poly":
        """
        Simultaneous substitution.  Keys are variable codes (see ``Poly.y``)
        or names like "y3"; values are ints or Polys.  Unlisted variables
        are kept.
        """
        sub = {}
        for key, val in assignment.items():
            code = _var_code(key) if isinstance(key, str) else key
            sub[code] = val if isinstance(val, Poly) else Poly.const(val)
        powers = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = sub[v] ** e
            return powers[key]

        acc = {}
        for m, c in self._terms.items():
            kept = tuple((v, e) for v, e in m if v not in sub)
            term = Poly._raw({kept: c})
            for v, e in m:
                if v in sub:
                    term = term * power(v, e)
                    if not term._terms:
                        break
            for mm, cc in term._terms.items():
                acc[mm] = acc.get(mm, 0) + cc
        return Poly(acc)

    def evaluate(self, values: dict) -> int:
        "full evaluation at integer values, keyed by variable code or name"
        vals = {(_var_code(k) if isinstance(k, str) else k): v for k, v in values.items()}
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t *= vals[v] ** e
            total += t
        return total

    def divide_linear(self, a: int, b: int) -> "Poly":
        """
        Exact quotient by x_a - x_b (variable codes).  Raises NonzeroRemainder
        when x_a - x_b does not divide self.
        """
        if a == b:
            raise ZeroDivisionError("x_a - x_a is zero")
        # split self as sum_m A_m x_a^m with A_m free of x_a
        parts = {}
        for m, c in self._terms.items():
            ea = 0
            rest = []
            for v, e in m:
                if v == a:
                    ea = e
                else:
                    rest.append((v, e))
            parts.setdefault(ea, {})[tuple(rest)] = c
        if not parts:
            return Poly()
        top = max(parts)
        xb = ((b, 1),)
        quotient = {}
        carry = {}  # B_m, free of x_a
        for m in range(top, 0, -1):
            # B_{m-1} = A_m + x_b * B_m
            nxt = dict(parts.get(m, {}))
            for mono, c in carry.items():
                mm = _mono_mul(mono, xb)
                s = nxt.get(mm, 0) + c
                if s:
                    nxt[mm] = s
                else:
                    nxt.pop(mm, None)
            carry = nxt
            xa = ((a, m - 1),) if m - 1 else ()
            for mono, c in carry.items():
                quotient[_mono_mul(mono, xa)] = c
        # remainder A_0 + x_b * B_0 must vanish
        rem = dict(parts.get(0, {}))
        for mono, c in carry.items():
            mm = _mono_mul(mono, xb)
            s = rem.get(mm, 0) + c
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
        if rem:
            raise NonzeroRemainder("%s is not divisible by %s - %s" % (self, var_name(a), var_name(b)))
        return Poly(quotient)

    def is_divisible_by_linear(self, a: int, b: int) -> bool:
        "x_a - x_b divides self iff self vanishes at x_a := x_b"
        return not self.specialize({a: Poly.var(b)})._terms

    def linear_form(self):
        "(a, b) if self == x_a - x_b, else None"
        if len(self._terms) != 2:
            return None
        pos = neg = None
        for m, c in self._terms.items():
            if len(m) != 1 or m[0][1] != 1:
                return None
            if c == 1:
                pos = m[0][0]
            elif c == -1:
                neg = m[0][0]
        if pos is None or neg is None:
            return None
        return pos, neg

    def __str__(self):
        return to_canonical_string(self)

    def __repr__(self):
        return "Poly(%r)" % to_canonical_string(self)

    # serialization

    def to_structured(self) -> list:
        "[[coefficient, [[name, exponent], ...]], ...] in canonical order"
        return [
            [c, [[var_name(v), e] for v, e in m]]
            for m, c in _sorted_terms(self)
        ]

    @classmethod
    def from_structured(cls, data) -> "Poly":
        terms = {}
        for c, mono in data:
            m = tuple(sorted((_var_code(name), int(e)) for name, e in mono))
            terms[m] = terms.get(m, 0) + int(c)
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return parse_poly(text)


def ring_add(a: Poly, b: Poly) -> Poly:
    return a + b


def ring_sub(a: Poly, b: Poly) -> Poly:
    return a - b


def ring_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def prod(factors, start=None) -> Poly:
    out = Poly.const(1) if start is None else start
    for f in factors:
        out = out * f
    return out


def exact_divide(p: Poly, d: Poly) -> Poly:
    """
    Exact quotient of p by a linear form d = x_a - x_b (either sign), or by
    a nonzero integer constant.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if d.is_constant():
        c = d.constant_term()
        out = {}
        for m, v in p.items():
            q, r = divmod(v, c)
            if r:
                raise NonzeroRemainder("%s is not divisible by %d" % (p, c))
            out[m] = q
        return Poly(out)
    form = d.linear_form()
    if form is not None:
        return p.divide_linear(*form)
    neg = (-d).linear_form()
    if neg is not None:
        return -p.divide_linear(*neg)
    raise ValueError("divisor must be a linear form y_j - y_i, got %s" % d)


def divide_by_product(p: Poly, factors) -> Poly:
    "exact division by a product of linear forms, one factor at a time"
    for f in factors:
        p = exact_divide(p, f)
    return p


def specialize(p: Poly, assignment: dict) -> Poly:
    return p.specialize(assignment)


def conjugate(p: Poly, n: int) -> Poly:
    "the involution y_i -> -y_{n+1-i}"
    return p.specialize({i: -Poly.y(n + 1 - i) for i in p.y_indices()})


def difference_coeffs(p: Poly) -> dict:
    """
    Rewrite p in the variables d_i = y_{i+1} - y_i.  Returns a mapping from
    d-monomials (tuples of (i, exponent) pairs) to integer coefficients.
    """
    if any(v > Z_OFFSET for v in p.variables()):
        raise NotInSubring("difference coefficients need a polynomial in y only")
    idx = p.y_indices()
    if not idx:
        return {(): p.constant_term()} if p else {}
    n = max(idx)
    # d_i is carried in the slot of y_i while rewriting
    sub = {1: Poly.const(0)}
    running = Poly()
    for i in range(2, n + 1):
        running = running + Poly.y(i - 1)
        sub[i] = running
    q = p.specialize(sub)
    back = q.specialize({i: Poly.diff(i + 1, i) for i in range(1, n)})
    if back != p:
        raise NotInSubring("%s is not translation invariant" % p)
    return dict(q.items())


def is_graham_positive(p: Poly) -> bool:
    return all(c >= 0 for c in difference_coeffs(p).values())


def format_dmonomial(m: tuple) -> str:
    if not m:
        return "1"
    return "*".join("d%d" % i if e == 1 else "d%d^%d" % (i, e) for i, e in m)


# canonical text form


def _mono_key(m: tuple, order: list) -> tuple:
    d = dict(m)
    return tuple(d.get(v, 0) for v in order)


def _sorted_terms(p: Poly) -> list:
    order = sorted(p.variables(), key=_var_rank, reverse=True)
    return sorted(
        p.items(),
        key=lambda mc: (_mono_deg(mc[0]), _mono_key(mc[0], order)),
        reverse=True,
    )


def _format_mono(m: tuple) -> str:
    parts = []
    for v, e in sorted(m, key=lambda ve: (ve[0] > Z_OFFSET, ve[0])):
        parts.append(var_name(v) if e == 1 else "%s^%d" % (var_name(v), e))
    return "*".join(parts)


def to_canonical_string(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for m, c in _sorted_terms(p):
        mono = _format_mono(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%d*%s" % (mag, mono)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([yz]\d+)|(\^)|(\*)|([+-]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise PolyParseError("unexpected character at position %d in %r"
                                     % (pos + len(text[pos:]) - len(text[pos:].lstrip()), self.text))
            kind = ("num", "var", "^", "*", "sign")[m.lastindex - 1]
            value = m.group(m.lastindex)
            self.tokens.append((kind, int(value) if kind == "num" else value, m.start(m.lastindex)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind):
        if self.peek() != kind:
            where = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
            raise PolyParseError("expected %s at position %d in %r" % (kind, where, self.text))
        tok = self.tokens[self.i]
        self.i += 1
        return tok[1]

    def factor(self, mono):
        v = _var_code(self.take("var"))
        e = 1
        if self.peek() == "^":
            self.take("^")
            e = self.take("num")
        mono[v] = mono.get(v, 0) + e

    def parse(self) -> "Poly":
        if not self.tokens:
            raise PolyParseError("empty polynomial text")
        terms = {}
        first = True
        while self.peek() is not None:
            sign = 1
            if self.peek() == "sign":
                sign = -1 if self.take("sign") == "-" else 1
            elif not first:
                raise PolyParseError("expected + or - at position %d in %r"
                                     % (self.tokens[self.i][2], self.text))
            first = False
            coeff = 1
            mono = {}
            if self.peek() == "num":
                coeff = self.take("num")
                if self.peek() == "*":
                    self.take("*")
                    self.factor(mono)
            else:
                self.factor(mono)
            while self.peek() == "*":
                self.take("*")
                self.factor(mono)
            key = tuple(sorted(mono.items()))
            terms[key] = terms.get(key, 0) + sign * coeff
        return Poly(terms)


def parse_poly(text: str) -> Poly:
    "inverse of to_canonical_string; also accepts loose spacing"
    return _Parser(text).parse()
