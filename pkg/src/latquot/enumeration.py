"""Short-vector enumeration and the invariants built on it.

Everything here is exact.  The enumeration walks the standard
Fincke-Pohst tree over a Gram-Schmidt decomposition computed in rational
arithmetic, and the interval of admissible integers at each level is
obtained from integer square roots rather than floating-point ones, so
no vector is ever lost to rounding.

A global node budget guards against runaway trees.  It can be overridden
through the ``LATQUOT_NODE_BUDGET`` environment variable or per call.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .core import GramLattice, InvariantReport, LatVec, determinant
from .errors import ResourceExceeded
from .reduction import _gso, lll

DEFAULT_NODE_BUDGET = 10**9


def node_budget() -> int:
    """The enumeration node budget currently in force."""
    return int(os.environ.get("LATQUOT_NODE_BUDGET", DEFAULT_NODE_BUDGET))


@dataclass(frozen=True)
class Frame:
    """Independent vectors realizing the successive minima, with their norms."""

    vectors: tuple[LatVec, ...]
    norms: tuple[Fraction, ...]


@dataclass(frozen=True)
class ShellListing:
    """All nonzero vectors of norm at most ``bound``, one per +- pair.

    The listing is sorted by norm, then by coordinates; each pair is
    represented by the member whose first nonzero coordinate is positive.
    """

    bound: Fraction
    vectors: tuple[LatVec, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _floor_plus_sqrt(c: Fraction, q: Fraction) -> int:
    """floor(c + sqrt(q)) for rationals, q >= 0, without floating point."""
    # math.floor(sqrt(x)) equals isqrt(floor(x)) for rational x >= 0, so
    # this starting guess is never above the answer and at most a couple
    # of integers below it.
    guess = math.floor(c) + math.isqrt(math.floor(q))

    def ok(m: int) -> bool:
        d = m - c
        return d <= 0 or d * d <= q

    while ok(guess + 1):
        guess += 1
    while not ok(guess):
        guess -= 1
    return guess


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def spend(self, amount: int = 1):
        self.nodes += amount
        if self.nodes > self.budget:
            raise ResourceExceeded(self.nodes, self.budget)


def _enumerate_gram(gram, bound: Fraction, counter: _Counter):
    """Nonzero solutions of x G x^T <= bound, one per +- pair, unsorted.

    Yields (norm, coords).  The representative kept from each pair has
    its topmost nonzero coordinate positive; callers re-canonicalize
    after mapping coordinates back to the original basis.
    """
    n = len(gram)
    b, mu = _gso(gram, n)
    x = [0] * n

    # centers[i] = sum over j > i of mu[j][i] * x[j], maintained on descent
    def descend(level: int, used: Fraction, top_zero: bool):
        if level < 0:
            if not top_zero:
                yield used, tuple(x)
            return
        remaining = bound - used
        center = sum(mu[j][level] * x[j] for j in range(level + 1, n))
        radius2 = remaining / b[level]
        hi = _floor_plus_sqrt(-center, radius2)
        lo = 0 if top_zero else -_floor_plus_sqrt(center, radius2)
        for value in range(lo, hi + 1):
            counter.spend()
            x[level] = value
            step = value + center
            yield from descend(level - 1, used + b[level] * step * step,
                               top_zero and value == 0)
        x[level] = 0

    yield from descend(n - 1, Fraction(0), True)


def _canonical_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    for entry in v:
        if entry > 0:
            return v
        if entry < 0:
            return tuple(-x for x in v)
    return v


def _listing(L: GramLattice, bound: Fraction,
             budget: int | None = None) -> list[tuple[Fraction, LatVec]]:
    """Sorted (norm, coords) pairs for nonzero vectors of norm <= bound."""
    counter = _Counter(node_budget() if budget is None else budget)
    red = lll(L)
    rows = red.transform
    out = []
    for value, y in _enumerate_gram(red.gram.gram, bound, counter):
        coords = tuple(
            sum(y[i] * rows[i][j] for i in range(L.n)) for j in range(L.n)
        )
        out.append((value, _canonical_sign(coords)))
    out.sort()
    return out


def vectors_up_to(L: GramLattice, bound: Fraction,
                  budget: int | None = None) -> ShellListing:
    """Complete listing of nonzero vectors of norm at most ``bound``."""
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    pairs = _listing(L, bound, budget)
    return ShellListing(bound=bound, vectors=tuple(v for _, v in pairs))


def minimum(L: GramLattice, budget: int | None = None) -> tuple[Fraction, ShellListing]:
    """The minimum of the lattice together with all its minimal vectors."""
    red = lll(L)
    start = min(red.gram.gram[i][i] for i in range(L.n))
    pairs = _listing(L, start, budget)
    best = pairs[0][0]
    shell = tuple(v for value, v in pairs if value == best)
    return best, ShellListing(bound=best, vectors=shell)


def _rank_tracker(n: int):
    """Incremental exact rank over the rationals; add(v) reports growth."""
    echelon: list[list[Fraction]] = []

    def add(v) -> bool:
        row = [Fraction(x) for x in v]
        for basis in echelon:
            lead = next(i for i, x in enumerate(basis) if x)
            if row[lead]:
                f = row[lead] / basis[lead]
                row = [a - f * b for a, b in zip(row, basis)]
        if any(row):
            echelon.append(row)
            return True
        return False

    return add


def successive_minima(L: GramLattice, budget: int | None = None) -> Frame:
    """A frame of the successive minima.

    Ties at each minimum are broken toward the lexicographically
    smallest coordinate vector whose first nonzero coordinate is
    positive, so the output is deterministic.
    """
    red = lll(L)
    start = max(red.gram.gram[i][i] for i in range(L.n))
    pairs = _listing(L, start, budget)
    add = _rank_tracker(L.n)
    vectors = []
    norms = []
    for value, v in pairs:
        if add(v):
            vectors.append(v)
            norms.append(value)
            if len(vectors) == L.n:
                break
    return Frame(vectors=tuple(vectors), norms=tuple(norms))


def minkowski_M(L: GramLattice, budget: int | None = None) -> Fraction:
    """Product of the successive minima divided by the determinant."""
    frame = successive_minima(L, budget)
    product = Fraction(1)
    for value in frame.norms:
        product *= value
    return product / determinant(L)


def is_well_rounded(L: GramLattice, budget: int | None = None) -> bool:
    """Whether the lattice has n independent minimal vectors."""
    frame = successive_minima(L, budget)
    return frame.norms[0] == frame.norms[-1]


def invariant_report(L: GramLattice, budget: int | None = None) -> InvariantReport:
    """Minimum, determinant, Hermite power and kissing number in one record."""
    best, shell = minimum(L, budget)
    det = determinant(L)
    return InvariantReport(
        min=best,
        det=det,
        gamma_n_power=best**L.n / det,
        s=len(shell),
    )
