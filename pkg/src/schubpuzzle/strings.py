"""
0/1 words with a fixed number of ones, indexing the torus-fixed points of a
Grassmannian.

Positions are 1-indexed throughout, matching the subscripts of the
equivariant variables y_1, ..., y_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


@dataclass(frozen=True, order=True)
class BitString:
    bits: tuple

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1: %r" % (self.bits,))

    @classmethod
    def parse(cls, text: str) -> "BitString":
        text = text.strip()
        bad = [i for i, c in enumerate(text) if c not in "01"]
        if bad:
            raise ValueError("not a 0/1 word: %r (bad character at %d)" % (text, bad[0]))
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int, k: int) -> "BitString":
        "the inversion-free word 0^(n-k) 1^k"
        return cls((0,) * (n - k) + (1,) * k)

    @classmethod
    def divisor(cls, n: int, k: int) -> "BitString":
        "0^(n-k-1) 1 0 1^(k-1), the unique word with one inversion"
        if not 0 < k < n:
            raise ValueError("divisor string needs 0 < k < n")
        return cls((0,) * (n - k - 1) + (1, 0) + (1,) * (k - 1))

    @classmethod
    def top(cls, n: int, k: int) -> "BitString":
        "1^k 0^(n-k), the word with k(n-k) inversions"
        return cls((1,) * k + (0,) * (n - k))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def k(self) -> int:
        return sum(self.bits)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        "1-indexed access"
        if not 1 <= i <= len(self.bits):
            raise IndexError(i)
        return self.bits[i - 1]

    def __str__(self):
        return "".join(str(b) for b in self.bits)

    def __repr__(self):
        return "BitString(%r)" % str(self)

    def inversions(self) -> frozenset:
        bits = self.bits
        return frozenset(
            (i + 1, j + 1)
            for i in range(len(bits)) if bits[i] == 1
            for j in range(i + 1, len(bits)) if bits[j] == 0
        )

    def length(self) -> int:
        "number of inversions l(lambda)"
        count = 0
        ones = 0
        for b in self.bits:
            if b:
                ones += 1
            else:
                count += ones
        return count

    def prefix_sums(self) -> tuple:
        out = []
        total = 0
        for b in self.bits:
            total += b
            out.append(total)
        return tuple(out)

    def reverse(self) -> "BitString":
        "the action of the longest permutation w_0"
        return BitString(self.bits[::-1])

    def complement(self) -> "BitString":
        return BitString(tuple(1 - b for b in self.bits))

    def dual(self) -> "BitString":
        "reverse and exchange 0s and 1s; lands in n choose n-k"
        return BitString(tuple(1 - b for b in reversed(self.bits)))

    def swap(self, i: int, j: int) -> "BitString":
        "apply the transposition (i j), 1-indexed"
        bits = list(self.bits)
        bits[i - 1], bits[j - 1] = bits[j - 1], bits[i - 1]
        return BitString(tuple(bits))

    def covers_up(self) -> frozenset:
        "all words covering self: each adjacent 01 turned into 10"
        bits = self.bits
        return frozenset(
            self.swap(i + 1, i + 2)
            for i in range(len(bits) - 1) if bits[i] == 0 and bits[i + 1] == 1
        )

    def covers_down(self) -> frozenset:
        "all words covered by self: each adjacent 10 turned into 01"
        bits = self.bits
        return frozenset(
            self.swap(i + 1, i + 2)
            for i in range(len(bits) - 1) if bits[i] == 1 and bits[i + 1] == 0
        )

    def ones(self) -> tuple:
        "1-indexed positions of the ones, increasing"
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)


def _check_same(lam: BitString, mu: BitString):
    if lam.n != mu.n or lam.k != mu.k:
        raise ValueError("strings %s and %s are not in the same n choose k" % (lam, mu))


def lattice_leq(lam: BitString, mu: BitString) -> bool:
    "True iff lam <= mu: every prefix of mu has at least as many ones as lam's"
    _check_same(lam, mu)
    return all(a <= b for a, b in zip(lam.prefix_sums(), mu.prefix_sums()))


def inversions(lam: BitString) -> frozenset:
    return lam.inversions()


def covers_up(lam: BitString) -> frozenset:
    return lam.covers_up()


def dual(lam: BitString) -> BitString:
    return lam.dual()


def reverse(lam: BitString) -> BitString:
    return lam.reverse()


@lru_cache(maxsize=None)
def all_strings(n: int, k: int) -> tuple:
    "every element of n choose k, in lexicographic order"
    if not 0 <= k <= n:
        return ()
    out = []
    for ones in combinations(range(n), k):
        bits = [0] * n
        for i in ones:
            bits[i] = 1
        out.append(BitString(tuple(bits)))
    return tuple(sorted(out))


def as_bitstring(x) -> BitString:
    if isinstance(x, BitString):
        return x
    if isinstance(x, str):
        return BitString.parse(x)
    return BitString(tuple(x))
