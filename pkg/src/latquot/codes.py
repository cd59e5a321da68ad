"""Codes over Z/dZ: weights, distributions, equivalence, classification.

Binary codes are the main actors: their weight distributions control
the quality bounds of the lattices lifted from them, and the small
parameter ranges that matter here (length at most 12, dimension at
most 4) allow complete classification by explicit enumeration.

Words of binary codes are handled as bit masks; bit j of a mask is the
entry in column j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .errors import CodeTooLight, ParseError, ResourceExceeded
from .linalg import smith_invariants

WORD_LIMIT = 10**7


@dataclass(frozen=True)
class Code:
    """A code over Z/dZ given by a k x n generator matrix.

    The rows must generate a group of order d^k, so every coefficient
    vector in (Z/dZ)^k yields a distinct codeword.
    """

    d: int
    n: int
    k: int
    gen: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("modulus must exceed 1")
        gen = tuple(tuple(int(x) % self.d for x in row) for row in self.gen)
        object.__setattr__(self, "gen", gen)
        if len(gen) != self.k or any(len(row) != self.n for row in gen):
            raise ValueError("generator matrix shape disagrees with (k, n)")
        if self.k < 1 or self.k > self.n:
            raise ValueError("dimension out of range")
        stacked = [list(row) for row in gen]
        stacked += [[self.d if i == j else 0 for j in range(self.n)]
                    for i in range(self.n)]
        index = 1
        for f in smith_invariants(stacked):
            index *= f
        if index != self.d ** (self.n - self.k):
            raise ValueError("rows do not generate a group of order d^k")

    def words(self):
        """All d^k codewords as tuples, the zero word included."""
        if self.d ** self.k > WORD_LIMIT:
            raise ResourceExceeded(self.d ** self.k, WORD_LIMIT)
        for coeffs in product(range(self.d), repeat=self.k):
            yield tuple(
                sum(c * row[j] for c, row in zip(coeffs, self.gen)) % self.d
                for j in range(self.n)
            )

    def masks(self) -> tuple[int, ...]:
        """Generator rows as bit masks; binary codes only."""
        if self.d != 2:
            raise ValueError("bit masks are defined for binary codes only")
        return tuple(_mask(row) for row in self.gen)


def _mask(row) -> int:
    out = 0
    for j, x in enumerate(row):
        if x:
            out |= 1 << j
    return out


def _unmask(mask: int, n: int) -> tuple[int, ...]:
    return tuple((mask >> j) & 1 for j in range(n))


def _binary_words(masks) -> list[int]:
    """All nonzero words of the span of the given masks."""
    words = {0}
    for m in masks:
        words |= {w ^ m for w in words}
    words.discard(0)
    return sorted(words)


@dataclass(frozen=True)
class WeightDistribution:
    """Multiset of weights of the nonzero codewords."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, counts: dict[int, int]) -> "WeightDistribution":
        return cls(tuple(sorted((w, c) for w, c in counts.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def __str__(self) -> str:
        parts = []
        for w, c in self.counts:
            parts.append(f"{w}^{c}" if c > 1 else f"{w}")
        return "·".join(parts)


def weight_distribution(c: Code) -> WeightDistribution:
    """Exact weight distribution over the nonzero codewords."""
    counts: dict[int, int] = {}
    for word in c.words():
        w = sum(1 for x in word if x)
        if w:
            counts[w] = counts.get(w, 0) + 1
    return WeightDistribution.from_dict(counts)


def min_weight_support(c: Code) -> tuple[int, int, bool]:
    """Minimum nonzero weight, support size, and whether support is full."""
    support = 0
    for row in c.gen:
        support |= _mask(row)
    w = min(
        sum(1 for x in word if x)
        for word in c.words()
        if any(word)
    )
    size = support.bit_count()
    return w, size, size == c.n


@lru_cache(maxsize=None)
def _gl2(k: int) -> tuple[tuple[int, ...], ...]:
    """All invertible k x k binary matrices, as tuples of row masks."""
    out = []
    for rows in product(range(1, 1 << k), repeat=k):
        seen = list(rows)
        rank = 0
        for col in range(k):
            pivot = next((i for i in range(rank, k) if seen[i] >> col & 1), None)
            if pivot is None:
                continue
            seen[rank], seen[pivot] = seen[pivot], seen[rank]
            for i in range(k):
                if i != rank and seen[i] >> col & 1:
                    seen[i] ^= seen[rank]
            rank += 1
        if rank == k:
            out.append(rows)
    return tuple(out)


def _column_signature(cols, transform) -> tuple[int, ...]:
    return tuple(sorted(
        sum(((row & col).bit_count() & 1) << i for i, row in enumerate(transform))
        for col in cols
    ))


def canonical_form(c: Code) -> tuple[int, ...]:
    """Canonical invariant of a binary code under column permutation.

    The columns of a generator matrix, read as functionals on the row
    space, determine the code up to permutation once the choice of
    basis is quotiented out; minimizing the sorted column multiset over
    GL(k, 2) therefore yields a complete invariant.
    """
    if c.d != 2:
        raise ValueError("canonical forms are defined for binary codes only")
    cols = [sum(c.gen[i][j] << i for i in range(c.k)) for j in range(c.n)]
    return min(_column_signature(cols, t) for t in _gl2(c.k))


def equivalent(a: Code, b: Code) -> bool:
    """Whether two binary codes agree up to a column permutation."""
    if (a.n, a.k) != (b.n, b.k):
        return False
    return canonical_form(a) == canonical_form(b)


def _code_from_signature(sig: tuple[int, ...], n: int, k: int) -> Code:
    gen = tuple(
        tuple((col >> i) & 1 for col in sig) for i in range(k)
    )
    return Code(d=2, n=n, k=k, gen=gen)


def classify_binary(n: int, k: int, min_w: int,
                    budget: int | None = None) -> list[Code]:
    """All binary [n, k] codes with full support and weight >= min_w.

    One representative per column-permutation class, each presented by
    its canonical column multiset.  Enumeration runs over generator
    matrices in reduced row echelon form, which visits every code
    exactly once.
    """
    if n > 12 or k > 4:
        raise ValueError("classification supported for n <= 12, k <= 4")
    from .enumeration import node_budget

    limit = node_budget() if budget is None else budget
    pivot_sets = list(combinations(range(n), k))
    total = 0
    plans = []
    for pivots in pivot_sets:
        pivot_mask = 0
        for p in pivots:
            pivot_mask |= 1 << p
        free = [
            [j for j in range(p + 1, n) if not (pivot_mask >> j) & 1]
            for p in pivots
        ]
        count = 1 << sum(len(f) for f in free)
        total += count
        plans.append((pivots, free, count))
    if total > limit:
        raise ResourceExceeded(total, limit)

    full = (1 << n) - 1
    seen: set[tuple[int, ...]] = set()
    for pivots, free, count in plans:
        base = [1 << p for p in pivots]
        widths = [len(f) for f in free]
        for packed in range(count):
            rows = []
            shift = 0
            for i in range(k):
                row = base[i]
                bits = (packed >> shift) & ((1 << widths[i]) - 1)
                for t, col in enumerate(free[i]):
                    if (bits >> t) & 1:
                        row |= 1 << col
                rows.append(row)
                shift += widths[i]
            support = 0
            for row in rows:
                support |= row
            if support != full:
                continue
            if min(w.bit_count() for w in _binary_words(rows)) < min_w:
                continue
            cols = [
                sum(((rows[i] >> j) & 1) << i for i in range(k))
                for j in range(n)
            ]
            sig = min(_column_signature(cols, t) for t in _gl2(k))
            seen.add(sig)
    return [_code_from_signature(sig, n, k) for sig in sorted(seen)]


def code_qb_bound(c: Code) -> Fraction:
    """Minimum of wt(a_1)...wt(a_k)/4^k over bases of a binary code."""
    if c.d != 2:
        raise ValueError("the bound is defined for binary codes only")
    words = _binary_words(c.masks())
    weights = {w: w.bit_count() for w in words}
    if min(weights.values()) < 4:
        raise CodeTooLight("minimum weight below 4")
    best = None
    for combo in combinations(words, c.k):
        rows = list(combo)
        rank = 0
        for col in range(c.n):
            pivot = next(
                (i for i in range(rank, c.k) if rows[i] >> col & 1), None
            )
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for i in range(c.k):
                if i != rank and rows[i] >> col & 1:
                    rows[i] ^= rows[rank]
            rank += 1
        if rank < c.k:
            continue
        p = 1
        for w in combo:
            p *= weights[w]
        if best is None or p < best:
            best = p
    return Fraction(best, 4**c.k)


def parse_code_text(text: str) -> Code:
    """Parse the code text format: 'd n k' then k rows of digits."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError(1, "empty code file")
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError(1, "expected 'd n k'")
    try:
        d, n, k = (int(x) for x in head)
    except ValueError:
        raise ParseError(1, "expected three integers") from None
    if len(lines) != k + 1:
        raise ParseError(len(lines), f"expected {k} generator rows")
    gen = []
    for idx, line in enumerate(lines[1:], start=2):
        if len(line) != n or not line.isdigit():
            raise ParseError(idx, f"expected {n} digits")
        gen.append(tuple(int(ch) for ch in line))
    return Code(d=d, n=n, k=k, gen=tuple(gen))


def dump_code_text(c: Code) -> str:
    rows = ["".join(str(x) for x in row) for row in c.gen]
    return "\n".join([f"{c.d} {c.n} {c.k}"] + rows) + "\n"


def repetition(n: int) -> Code:
    """The [n, 1, n] binary repetition code."""
    return Code(d=2, n=n, k=1, gen=((1,) * n,))


def c8() -> Code:
    """The unique full-support [8, 2, 5] binary code."""
    return Code(d=2, n=8, k=2, gen=(
        (1, 1, 1, 1, 1, 0, 0, 0),
        (0, 0, 0, 1, 1, 1, 1, 1),
    ))


def c9() -> Code:
    """The unique [9, 2, 6] binary code, weight distribution 6^3."""
    return Code(d=2, n=9, k=2, gen=(
        (1, 1, 1, 1, 1, 1, 0, 0, 0),
        (0, 0, 0, 1, 1, 1, 1, 1, 1),
    ))


def c10() -> Code:
    """The unique odd [10, 2, 6] binary code, weight distribution 6*7^2."""
    return Code(d=2, n=10, k=2, gen=(
        (1, 1, 1, 1, 1, 1, 0, 0, 0, 0),
        (0, 0, 0, 1, 1, 1, 1, 1, 1, 1),
    ))


def c11() -> Code:
    """The even [11, 3] code of weight 6, distribution 6^6*8."""
    return Code(d=2, n=11, k=3, gen=(
        (1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0),
        (1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1),
    ))


def g12() -> Code:
    """The even [12, 4] code of weight 6, distribution 6^12*8^3."""
    return Code(d=2, n=12, k=4, gen=(
        (1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0),
        (1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0),
        (1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1),
    ))
