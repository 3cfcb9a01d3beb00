"""Tiny exact linear algebra over rationals.

Everything here works on tuples/lists of ``Fraction`` (ints are accepted
and coerced).  Sizes never exceed a dozen rows, so plain Gaussian
elimination is all we need.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def _rows(mat):
    return [[Fraction(x) for x in row] for row in mat]


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = _rows(mat)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(mat):
    return len(rref(mat)[1])


def nullspace(mat):
    """Basis of the right kernel, one vector per free column."""
    rows, pivots = rref(mat)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(tuple(vec))
    return basis


def solve_columns(cols, target):
    """Solve ``sum(lam_j * cols[j]) == target`` when the columns are
    linearly independent; returns the lambda tuple or None."""
    n = len(target)
    k = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    rows, pivots = rref(aug)
    if k in pivots:
        return None  # inconsistent
    if len(pivots) < k:
        return None  # columns were dependent
    lam = [Fraction(0)] * k
    for r, pc in enumerate(pivots):
        lam[pc] = rows[r][k]
    return tuple(lam)


def primitive(vec):
    """Scale a rational vector to a primitive integer vector, keeping direction."""
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def dot(u, v):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))


def cone_contains(generators, target):
    """Exact membership of ``target`` in the rational cone spanned by
    ``generators`` (conical Caratheodory over independent subsets)."""
    target = tuple(Fraction(x) for x in target)
    if all(x == 0 for x in target):
        return True
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    if not gens:
        return False
    dim = len(target)
    maxsize = min(len(gens), dim)
    for size in range(1, maxsize + 1):
        for subset in combinations(range(len(gens)), size):
            cols = [gens[j] for j in subset]
            if rank(cols) < size:
                continue
            lam = solve_columns(cols, target)
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False
