"""Exact rational model of a Euclidean lattice given by a Gram matrix.

A lattice is described purely by the Gram matrix of one of its bases; no
embedding coordinates are kept.  Lattice vectors are integer coordinate
tuples with respect to that implicit basis, so norms, inner products and
determinants computed here are exact rationals.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NotPositiveDefinite, NotSymmetric, ParseError

Rational = Fraction
LatVec = tuple[int, ...]
Matrix = tuple[tuple[Fraction, ...], ...]

#: n-th power of the Hermite constant for dimensions 1..8, exact.
HERMITE_POWER = {
    1: Fraction(1),
    2: Fraction(4, 3),
    3: Fraction(2),
    4: Fraction(4),
    5: Fraction(8),
    6: Fraction(64, 3),
    7: Fraction(64),
    8: Fraction(256),
}


def validate(matrix: Sequence[Sequence[Fraction | int]]) -> tuple[Fraction, ...]:
    """Check that ``matrix`` is a symmetric positive definite square matrix.

    Returns the pivots of the symmetric (LDL) elimination; their product is
    the determinant.  Raises ``NotSymmetric`` or ``NotPositiveDefinite`` with
    the offending position or leading minor as witness.
    """
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    for row in rows:
        if len(row) != n:
            raise DimensionMismatch("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(i, j)
    pivots = []
    for i in range(n):
        p = rows[i][i]
        if p <= 0:
            raise NotPositiveDefinite(i + 1)
        pivots.append(p)
        for j in range(i + 1, n):
            f = rows[j][i] / p
            if f:
                for k in range(i, n):
                    rows[j][k] -= f * rows[i][k]
    return tuple(pivots)


@dataclass(frozen=True)
class GramLattice:
    """A lattice of rank ``n`` described by the Gram matrix of a basis."""

    n: int
    gram: Matrix
    label: str | None = None
    _pivots: tuple[Fraction, ...] = field(
        default=(), repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        gram = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        if self.n != len(gram):
            raise DimensionMismatch("declared rank does not match matrix size")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "_pivots", validate(gram))

    @classmethod
    def from_rows(cls, rows, label: str | None = None) -> "GramLattice":
        return cls(len(rows), tuple(tuple(Fraction(x) for x in r) for r in rows), label)

    def scaled(self, c: Fraction | int) -> "GramLattice":
        """The same lattice with the quadratic form multiplied by ``c > 0``."""
        c = Fraction(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return GramLattice.from_rows(
            [[c * x for x in row] for row in self.gram], self.label
        )


def qform(gram: Matrix, v: Sequence[Fraction | int]) -> Fraction:
    """Evaluate the quadratic form of ``gram`` at a rational vector."""
    if len(v) != len(gram):
        raise DimensionMismatch("vector length does not match matrix size")
    total = Fraction(0)
    for i, vi in enumerate(v):
        if not vi:
            continue
        row = gram[i]
        acc = Fraction(0)
        for j, vj in enumerate(v):
            if vj:
                acc += row[j] * vj
        total += vi * acc
    return total


def norm(L: GramLattice, v: Sequence[int]) -> Fraction:
    """Squared length of the lattice vector with coordinates ``v``."""
    return qform(L.gram, v)


def inner(L: GramLattice, u: Sequence[int], v: Sequence[int]) -> Fraction:
    """Inner product of two lattice vectors given by coordinates."""
    if len(u) != L.n or len(v) != L.n:
        raise DimensionMismatch("vector length does not match lattice rank")
    total = Fraction(0)
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = L.gram[i]
        acc = Fraction(0)
        for j, vj in enumerate(v):
            if vj:
                acc += row[j] * vj
        total += ui * acc
    return total


def determinant(L: GramLattice) -> Fraction:
    """Determinant of the Gram matrix (square of the covolume)."""
    out = Fraction(1)
    for p in L._pivots:
        out *= p
    return out


@dataclass(frozen=True)
class InvariantReport:
    """Basic invariants of a lattice: minimum, determinant, Hermite power, kissing."""

    min: Fraction
    det: Fraction
    gamma_n_power: Fraction
    s: int

    def __post_init__(self):
        if self.min <= 0 or self.det <= 0 or self.s < 1:
            raise ValueError("invariants out of range")


class Surd:
    """The nonnegative square root of a rational, with exact comparisons.

    Comparisons against rationals are decided by squaring, so expressions
    like ``Surd(8) < 3`` are exact.
    """

    __slots__ = ("radicand",)

    def __init__(self, radicand):
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        self.radicand = radicand

    def is_rational(self) -> bool:
        num, den = self.radicand.numerator, self.radicand.denominator
        return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"sqrt({self.radicand}) is irrational")
        return Fraction(
            math.isqrt(self.radicand.numerator), math.isqrt(self.radicand.denominator)
        )

    def __eq__(self, other):
        if isinstance(other, Surd):
            return self.radicand == other.radicand
        other = Fraction(other)
        return other >= 0 and other * other == self.radicand

    def __lt__(self, other):
        if isinstance(other, Surd):
            return self.radicand < other.radicand
        other = Fraction(other)
        return other > 0 and self.radicand < other * other

    def __gt__(self, other):
        if isinstance(other, Surd):
            return self.radicand > other.radicand
        other = Fraction(other)
        return other < 0 or self.radicand > other * other

    def __le__(self, other):
        return self == other or self < other

    def __ge__(self, other):
        return self == other or self > other

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash(("surd", self.radicand))

    def __float__(self):
        return math.sqrt(float(self.radicand))

    def __repr__(self):
        return f"sqrt({self.radicand})"


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {token!r}") from exc


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_lattice_text(text: str) -> GramLattice:
    """Parse the plain text lattice format.

    Line 1 holds the rank n, the next n lines hold n whitespace-separated
    rationals each ("p/q" or integer), and an optional final line starting
    with "#" carries a label.
    """
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise ParseError(1, "empty input")
    try:
        n = int(lines[idx].strip())
    except ValueError:
        raise ParseError(idx + 1, f"expected rank, got {lines[idx].strip()!r}")
    if n < 1:
        raise ParseError(idx + 1, "rank must be at least 1")
    rows = []
    row_line = idx + 1
    while len(rows) < n:
        if row_line >= len(lines):
            raise ParseError(len(lines), f"expected {n} matrix rows, got {len(rows)}")
        line = lines[row_line].strip()
        if line:
            toks = line.split()
            if len(toks) != n:
                raise ParseError(row_line + 1, f"expected {n} entries, got {len(toks)}")
            try:
                rows.append(tuple(parse_rational(t) for t in toks))
            except ValueError as exc:
                raise ParseError(row_line + 1, str(exc))
        row_line += 1
    label = None
    for extra in range(row_line, len(lines)):
        line = lines[extra].strip()
        if not line:
            continue
        if line.startswith("#"):
            label = line[1:].strip() or None
        else:
            raise ParseError(extra + 1, f"unexpected trailing content {line!r}")
    try:
        return GramLattice(n, tuple(rows), label)
    except (NotSymmetric, NotPositiveDefinite, DimensionMismatch):
        raise


def dump_lattice_text(L: GramLattice) -> str:
    lines = [str(L.n)]
    for row in L.gram:
        lines.append(" ".join(format_rational(x) for x in row))
    if L.label:
        lines.append(f"# {L.label}")
    return "\n".join(lines) + "\n"


def parse_lattice_json(text: str) -> GramLattice:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg)
    if not isinstance(data, dict) or "gram" not in data:
        raise ParseError(1, "expected an object with a 'gram' field")
    gram = data["gram"]
    n = data.get("n", len(gram))
    try:
        rows = tuple(tuple(parse_rational(str(x)) for x in row) for row in gram)
    except (ValueError, TypeError) as exc:
        raise ParseError(1, f"bad gram entry: {exc}")
    return GramLattice(n, rows, data.get("label"))


def dump_lattice_json(L: GramLattice) -> str:
    data = {
        "n": L.n,
        "gram": [[format_rational(x) for x in row] for row in L.gram],
        "label": L.label,
    }
    return json.dumps(data, indent=2) + "\n"


def load_lattice(path) -> GramLattice:
    """Load a lattice from a text or JSON file, sniffing the format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_lattice_json(text)
    return parse_lattice_text(text)
