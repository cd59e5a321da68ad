"""The basis invariant H_b and the quality ratio Q_b = H_b / M.

H_b is the minimum, over all bases of the lattice, of the product of
the basis norms divided by the determinant.  Computing it exactly is a
branch-and-bound over short vectors: every member of an optimal basis
is shorter than the incumbent product allows, so a single enumeration
yields the complete candidate pool, and partial selections are pruned
by product bounds and by primitivity (a vector family extends to a
basis if and only if its span is a primitive sublattice).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import GramLattice, LatVec, Rational, determinant, norm
from .enumeration import _Counter, _listing, node_budget, successive_minima
from .errors import NotGenerating, ResourceExceeded
from .linalg import det_int, hnf_rows, is_primitive, smith_invariants
from .reduction import lll

__all__ = ["QualityReport", "hermite_Hb", "qb", "qg_upper_bound"]


@dataclass(frozen=True)
class QualityReport:
    """Everything qb() measures, with the witness basis.

    ``frontier`` is a proven lower bound on Hb; it is None when the
    search ran to exhaustion (then Hb itself is exact and certified).
    """

    M: Rational
    Hb: Rational
    Qb: Rational
    best_basis: tuple[LatVec, ...]
    certified: bool
    frontier: Rational | None = None


def _generates(vecs, n: int) -> bool:
    """Whether the integer row span of the vectors is all of Z^n.

    Folds the rows into a running Hermite form a chunk at a time, so
    the working set never exceeds n + chunk rows no matter how long the
    listing is, and stops as soon as the form reaches the identity.
    """
    state: list[list[int]] = []
    step = 4 * n
    for start in range(0, len(vecs), step):
        rows = state + [list(v) for v in vecs[start:start + step]]
        state = hnf_rows(rows)
        if len(state) == n and all(state[i][i] == 1 for i in range(n)):
            return True
    return False


def _search(L: GramLattice, budget: int | None):
    """Branch-and-bound for the minimal basis norm product.

    Returns (product, rows, certified, frontier product, minima product).
    The node budget applies separately to each enumeration phase and to
    the search tree itself; exhausting it anywhere downgrades the result
    to an uncertified upper bound instead of raising.
    """
    n = L.n
    allowance = node_budget() if budget is None else budget
    reduced = lll(L)
    inc_prod = Fraction(1)
    for i in range(n):
        inc_prod *= reduced.gram.gram[i][i]

    best = {"prod": inc_prod, "rows": reduced.transform}

    try:
        base = successive_minima(L, allowance)
    except ResourceExceeded:
        return inc_prod, best["rows"], False, None, None
    floor_prod = Fraction(1)
    for lam in base.norms:
        floor_prod *= lam
    if inc_prod == floor_prod:
        return inc_prod, best["rows"], True, None, floor_prod

    chosen: list[LatVec] = []

    def run_pass(pairs, counter) -> None:
        """Exhaust all bases drawn from the listed candidates."""
        norms = [p[0] for p in pairs]
        vecs = [p[1] for p in pairs]
        total = len(pairs)
        # When every listed vector lies in a proper sublattice, as the
        # short vectors of a Watson lattice do, no subset is a basis and
        # the whole tree would be walked just to learn that.  One check
        # of the stacked listing settles it up front.
        counter.spend()
        if total < n or not _generates(vecs, n):
            return
        def descend(start: int, prod: Fraction):
            k = len(chosen)
            if k == n:
                best["prod"] = prod
                best["rows"] = tuple(chosen)
                return
            need = n - k
            # The cheapest completion from index i is the product of the
            # next `need` norms.  Slide that window along instead of
            # storing cumulative products, whose bit size would grow
            # linearly along a long listing and swamp memory.
            window = Fraction(1)
            for x in norms[start:start + need]:
                window *= x
            for i in range(start, total - need + 1):
                counter.spend()
                if prod * window >= best["prod"]:
                    break
                chosen.append(vecs[i])
                if is_primitive(chosen):
                    descend(i + 1, prod * norms[i])
                chosen.pop()
                if i + need < total:
                    window = window * norms[i + need] / norms[i]

        descend(0, Fraction(1))

    # Iterative deepening: a poor initial incumbent would force one huge
    # enumeration, so grow the candidate bound geometrically and let each
    # pass tighten the incumbent first.  Certification happens on the
    # pass whose listing provably covers every member of any basis that
    # would beat the incumbent (the other n-1 members cost at least
    # prod(lam_i, i < n), so members are bounded by the quotient below).
    bound = base.norms[-1]
    lam_head = floor_prod / base.norms[-1]
    done = Fraction(0)
    try:
        while True:
            use_bound = min(bound, best["prod"] / lam_head)
            pairs = _listing(L, use_bound, allowance)
            run_pass(pairs, _Counter(allowance))
            if use_bound >= best["prod"] / lam_head:
                return best["prod"], best["rows"], True, None, floor_prod
            done = use_bound
            bound = use_bound * 2
    except ResourceExceeded:
        # Passes up to `done` were exhaustive, so any basis still beating
        # the incumbent owns a vector longer than that, plus n-1 more no
        # shorter than the first n-1 successive minima.
        frontier = max(floor_prod, min(best["prod"], done * lam_head))
        return best["prod"], best["rows"], False, frontier, floor_prod


def hermite_Hb(L: GramLattice, budget: int | None = None):
    """Minimal basis norm product over det, with witness basis.

    Returns (value, basis rows, certified).  When the node budget runs
    out the value is still a true upper bound with a valid witness, only
    the certificate flag drops.
    """
    prod, rows, certified, _, _ = _search(L, budget)
    return prod / determinant(L), rows, certified


def qb(L: GramLattice, budget: int | None = None) -> QualityReport:
    """Assemble M, Hb and their ratio Qb into one report."""
    prod, rows, certified, frontier, floor_prod = _search(L, budget)
    if floor_prod is None:
        base = successive_minima(L)
        floor_prod = Fraction(1)
        for lam in base.norms:
            floor_prod *= lam
    if not certified and frontier is None:
        # nothing was searched, but the i-th member of any sorted basis
        # has norm at least the i-th successive minimum
        frontier = floor_prod
    det = determinant(L)
    return QualityReport(
        M=floor_prod / det,
        Hb=prod / det,
        Qb=prod / floor_prod,
        best_basis=tuple(rows),
        certified=certified,
        frontier=None if frontier is None else frontier / det,
    )


def qg_upper_bound(L: GramLattice, generating_sets: Sequence[Sequence[LatVec]]) -> Rational:
    """Upper bound on the generating invariant H_g from supplied sets.

    For each set that generates the lattice, take the worst (largest)
    norm product over independent n-element subfamilies; the bound is
    the best of those, divided by det.  Sets that fail the Smith-form
    generation check raise NotGenerating.
    """
    n = L.n
    det = determinant(L)
    if not generating_sets:
        raise ValueError("at least one generating set is required")
    best: Fraction | None = None
    for idx, vs in enumerate(generating_sets):
        rows = [list(v) for v in vs]
        inv = smith_invariants(rows)
        if len(inv) != n or any(d != 1 for d in inv):
            raise NotGenerating(f"set {idx} does not generate the lattice")
        worst: Fraction | None = None
        for combo in combinations(vs, n):
            if det_int(combo) == 0:
                continue
            prod = Fraction(1)
            for v in combo:
                prod *= norm(L, v)
            if worst is None or prod > worst:
                worst = prod
        value = worst / det
        if best is None or value < best:
            best = value
    return best
