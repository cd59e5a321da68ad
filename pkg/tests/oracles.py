"""Independent brute force reference implementations.

Everything here recomputes package results along a different code path:
vector listings by coordinate boxes, Smith invariants by minor gcds,
basis search by testing every candidate subset.  Slow on purpose; the
tests only feed these small instances.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd, isqrt

from latquot.linalg import det_int, inverse_rational, rank_rational
from latquot.core import qform


def _ceil_sqrt(x: Fraction) -> int:
    """Smallest integer r with r*r >= x, for x >= 0."""
    num, den = x.numerator, x.denominator
    r = isqrt(num // den)
    while Fraction(r * r) < x:
        r += 1
    return r


def box_vectors(gram, bound: Fraction):
    """All nonzero vectors of norm <= bound, one per +- pair.

    Coordinates are boxed by |x_i| <= sqrt(bound * (G^-1)_ii), which is
    valid for any positive definite G, then filtered by exact norm.
    """
    n = len(gram)
    inv = inverse_rational([list(r) for r in gram])
    radii = [_ceil_sqrt(bound * inv[i][i]) for i in range(n)]
    out = []
    for coords in product(*[range(-r, r + 1) for r in radii]):
        if all(x == 0 for x in coords):
            continue
        first = next(x for x in coords if x)
        if first < 0:
            continue
        value = qform(gram, coords)
        if value <= bound:
            out.append((value, coords))
    out.sort()
    return out


def brute_minimum(gram) -> Fraction:
    """Lattice minimum; the shortest basis vector bounds the search."""
    bound = min(Fraction(gram[i][i]) for i in range(len(gram)))
    hits = box_vectors(gram, bound)
    return hits[0][0]


def brute_minima(gram) -> list[Fraction]:
    """Successive minima via the sorted box listing and rank tracking."""
    n = len(gram)
    bound = max(Fraction(gram[i][i]) for i in range(n))
    while True:
        listing = box_vectors(gram, bound)
        chosen: list[tuple[int, ...]] = []
        norms: list[Fraction] = []
        for value, coords in listing:
            if rank_rational([list(v) for v in chosen] + [list(coords)]) > len(chosen):
                chosen.append(coords)
                norms.append(value)
                if len(chosen) == n:
                    return norms
        bound *= 2


def brute_Hb_product(gram) -> tuple[Fraction, tuple]:
    """Minimal basis norm product by checking candidate subsets.

    A subset is a basis exactly when its determinant in basis
    coordinates is +-1.  The search bound is sound: in an optimal basis
    each member norm is at most the incumbent product divided by the
    product of the other members' norms, which is at least the product
    of the n-1 first successive minima.  Subsets are visited in
    ascending norm order so that losing branches can be cut on the
    partial product alone; every surviving subset is still tested by
    its determinant.
    """
    n = len(gram)
    incumbent = Fraction(1)
    for i in range(n):
        incumbent *= Fraction(gram[i][i])
    witness = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

    # a greedy independent frame of short vectors usually is a basis
    # and then gives a far smaller starting bound than the diagonal
    greedy: list[tuple[int, ...]] = []
    prod = Fraction(1)
    for value, coords in box_vectors(gram, max(Fraction(gram[i][i]) for i in range(n))):
        if rank_rational([list(v) for v in greedy] + [list(coords)]) > len(greedy):
            greedy.append(coords)
            prod *= value
            if len(greedy) == n:
                break
    if len(greedy) == n and abs(det_int(greedy)) == 1 and prod < incumbent:
        incumbent = prod
        witness = tuple(greedy)

    minima = brute_minima(gram)
    head = Fraction(1)
    for lam in minima[:-1]:
        head *= lam
    listing = box_vectors(gram, incumbent / head)
    state = {"best": incumbent, "witness": witness}

    def walk(start: int, chosen: list, prod: Fraction):
        k = len(chosen)
        if k == n:
            if abs(det_int(chosen)) == 1 and prod < state["best"]:
                state["best"] = prod
                state["witness"] = tuple(tuple(v) for v in chosen)
            return
        need = n - k
        for i in range(start, len(listing) - need + 1):
            value, coords = listing[i]
            if prod * value**need >= state["best"]:
                return
            if rank_rational([list(v) for v in chosen] + [list(coords)]) == k:
                continue
            chosen.append(coords)
            walk(i + 1, chosen, prod * value)
            chosen.pop()

    walk(0, [], Fraction(1))
    return state["best"], state["witness"]


def minor_gcd_invariants(rows) -> list[int]:
    """Smith invariant factors from the gcds of all k x k minors."""
    m, n = len(rows), len(rows[0])
    rank = rank_rational([list(r) for r in rows])
    gcds = []
    for k in range(1, rank + 1):
        g = 0
        for rsel in combinations(range(m), k):
            for csel in combinations(range(n), k):
                minor = det_int([[rows[i][j] for j in csel] for i in rsel])
                g = gcd(g, minor)
        gcds.append(g)
    inv = []
    prev = 1
    for g in gcds:
        inv.append(g // prev)
        prev = g
    return inv
