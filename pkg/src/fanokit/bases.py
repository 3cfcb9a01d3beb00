"""Catalog of admissible base varieties.

The bases are the curve P^1 (for threefold total spaces) and the del
Pezzo surfaces P^2, P^1 x P^1, F_1 = dP8, and dP_d for 1 <= d <= 7 (for
fourfold total spaces).  Each entry packages the intersection ring, the
canonical class, the curve-cone generators used for exact ampleness
tests, and Euler/Hodge data.  Degree-2 cover data for the non-section
blow-up center is computed here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .errors import ModelError, UsageError
from .iring import GradedRing, RingElement

KINDS = ("P1", "P2", "P1xP1", "F1") + tuple(f"dP{d}" for d in range(1, 8))


@dataclass(frozen=True, eq=False)
class BaseVariety:
    kind: str
    ring: GradedRing
    K: RingElement
    rho: int
    delta: int
    euler: int
    index: int | None
    ne_generators: tuple
    hodge: dict
    toric: bool

    @property
    def dim(self):
        return self.ring.dim

    def minus_k(self):
        return -self.K

    def __repr__(self):
        return f"BaseVariety({self.kind})"


@dataclass(frozen=True, eq=False)
class DoubleCoverData:
    """Invariant package of a degree-2 cover S -> T branched along 2N."""

    base: BaseVariety
    N: RingElement
    branch_class: RingElement
    K_self_sq: int
    euler: int
    h11: int
    chiO: Fraction

    @property
    def hodge(self):
        return {(0, 0): 1, (1, 1): self.h11, (2, 2): 1}

    @property
    def degree_label(self):
        # The only degree-8 cover in the enumerations is the split one.
        return "P1xP1" if self.K_self_sq == 8 else f"dP{self.K_self_sq}"


def _surface_hodge(h11):
    table = {(p, q): 0 for p in range(3) for q in range(3)}
    table[(0, 0)] = table[(2, 2)] = 1
    table[(1, 1)] = h11
    return table


def make_base(kind):
    """Build a catalog entry; ``kind`` is one of P1, P2, P1xP1, F1, dP1..dP7."""
    if kind == "P1":
        ring = GradedRing.for_curve("P1")
        K = ring.point() * (-2)
        hodge = {(0, 0): 1, (0, 1): 0, (1, 0): 0, (1, 1): 1}
        return BaseVariety("P1", ring, K, 1, 0, 2, 2, (ring.point(),), hodge, True)
    if kind == "P2":
        ring = GradedRing.for_surface("P2", ["L"], [[1]])
        L = ring.gen("L")
        return BaseVariety("P2", ring, L * (-3), 1, 0, 3, 3, (L,), _surface_hodge(1), True)
    if kind == "P1xP1":
        ring = GradedRing.for_surface("P1xP1", ["f1", "f2"], [[0, 1], [1, 0]])
        f1, f2 = ring.gen("f1"), ring.gen("f2")
        K = (f1 + f2) * (-2)
        return BaseVariety("P1xP1", ring, K, 2, 1, 4, None, (f1, f2), _surface_hodge(2), True)
    if kind == "F1":
        ring = GradedRing.for_surface("F1", ["h", "e"], [[1, 0], [0, -1]])
        h, e = ring.gen("h"), ring.gen("e")
        K = h * (-3) + e
        return BaseVariety("F1", ring, K, 2, 1, 4, None, (e, h - e), _surface_hodge(2), True)
    if kind.startswith("dP"):
        try:
            d = int(kind[2:])
        except ValueError:
            raise UsageError(f"unknown base kind {kind!r}") from None
        if not 1 <= d <= 7:
            raise UsageError(f"dP degree must be 1..7, got {d}")
        npts = 9 - d
        names = ["h"] + [f"e{i}" for i in range(1, npts + 1)]
        pairing = [[0] * (npts + 1) for _ in range(npts + 1)]
        pairing[0][0] = 1
        for i in range(1, npts + 1):
            pairing[i][i] = -1
        ring = GradedRing.for_surface(kind, names, pairing)
        K = ring.gen("h") * (-3)
        for i in range(1, npts + 1):
            K = K + ring.gen(f"e{i}")
        gens = tuple(ring.divisor(v) for v in _neg_class_vectors(ring, K, _neg_bound(d)))
        return BaseVariety(
            kind, ring, K, npts + 1, npts, 12 - d, None, gens, _surface_hodge(10 - d), d >= 6
        )
    raise UsageError(f"unknown base kind {kind!r}")


def _neg_bound(degree):
    return 3 if degree >= 5 else 6


def _neg_class_vectors(ring, K, bound):
    """Integer degree-1 vectors c with c.c = -1 and c.K = -1.

    For the h/e bases the form is diag(1, -1, .., -1): fix the h
    coefficient, then search the e coefficients with sum-of-squares
    pruning.  Small non-diagonal lattices go through a plain box search.
    """
    names = ring.degree_one_names()
    r = len(names)

    def is_target(coords):
        c = ring.divisor(coords)
        return (c * c).integrate() == -1 and (c * K).integrate() == -1

    found = []
    if names and names[0] == "h" and all(n.startswith("e") for n in names[1:]):
        for a in range(-bound, bound + 1):
            sumsq = a * a + 1  # required sum of e-coefficient squares
            target_sum = 1 - 3 * a  # from c.K = -3a - sum(c_i) = -1
            acc = []

            def rec(i, rem_sq, rem_sum):
                if rem_sq < 0:
                    return
                left = r - 1 - i
                if left == 0:
                    if rem_sq == 0 and rem_sum == 0:
                        found.append((a, *acc))
                    return
                if rem_sum * rem_sum > rem_sq * left:
                    return  # Cauchy-Schwarz: unreachable
                for b in range(-bound, bound + 1):
                    if b * b > rem_sq:
                        continue
                    acc.append(b)
                    rec(i + 1, rem_sq - b * b, rem_sum - b)
                    acc.pop()

            rec(0, sumsq, target_sum)
        found = [v for v in found if is_target(v)]
    else:
        if r > 3:
            raise UsageError("box search only supported in rank <= 3")

        def box(i, acc):
            if i == r:
                if any(acc) and is_target(acc):
                    found.append(tuple(acc))
                return
            for b in range(-bound, bound + 1):
                box(i + 1, acc + [b])

        box(0, [])
    return sorted(set(tuple(int(x) for x in v) for v in found))


def neg_classes(T, bound=None):
    """All degree-1 classes c on a surface with c.c = c.K = -1."""
    if T.dim != 2:
        raise UsageError("negative-class search is for surfaces")
    if bound is None:
        bound = _neg_bound(int((T.K * T.K).integrate()))
    return [T.ring.divisor(v) for v in _neg_class_vectors(T.ring, T.K, bound)]


def is_nef(T, D):
    return all((D * c).integrate() >= 0 for c in T.ne_generators)


def is_ample(T, D):
    """Exact ampleness: positive pairing with every curve-cone generator."""
    return all((D * c).integrate() > 0 for c in T.ne_generators)


def is_effective(T, D):
    """Membership of D in the effective cone (spanned by ne_generators)."""
    gens = [c.coords(1) for c in T.ne_generators]
    return _linalg.cone_contains(gens, D.coords(1))


def double_cover_invariants(T, N):
    """Invariants of the smooth degree-2 cover of a surface T branched
    along a smooth curve in |2N|; requires -K_T - N ample so the cover is
    a del Pezzo surface."""
    if T.dim != 2:
        raise ModelError("double-cover invariants are computed for surface bases")
    if N.is_zero():
        raise ModelError("twist divisor N must be nonzero")
    if not is_ample(T, -T.K - N):
        raise ModelError("-K_T - N must be ample for the cover to be del Pezzo")
    branch = 2 * N
    ksq = 2 * (T.K + N) * (T.K + N)
    euler = 2 * T.euler + int((branch * (branch + T.K)).integrate())
    ksq_int = int(ksq.integrate())
    chi = Fraction(ksq_int + euler, 12)
    return DoubleCoverData(T, N, branch, ksq_int, euler, euler - 2, chi)
