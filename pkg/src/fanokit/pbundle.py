"""Chow calculus on the split three-space bundle Z over a base T.

Z carries the relative hyperplane class H with the rank-3 relation
H^3 = s1*H^2 - s2*H + s3 (s_k the elementary symmetric classes of the
three twists D_1, D_2, D_3).  Classes on Z are kept in the normal form
c0 + c1*H + c2*H^2 with c_k living on T; integration reads off the top
coefficient after reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ModelError, UsageError
from .iring import RingElement


class PBundleModel:
    """Z = P_T(O(D1) + O(D2) + O(D3)), with H restricting to D_i on the
    i-th coordinate section and F_i = H - D_i the complementary-summand
    divisor."""

    def __init__(self, base, D):
        D = tuple(self._coerce(base, x) for x in D)
        if len(D) != 3:
            raise UsageError("exactly three twist divisors are required")
        self.base = base
        self.D = D
        d1, d2, d3 = D
        self.sigma = (
            d1 + d2 + d3,
            d1 * d2 + d1 * d3 + d2 * d3,
            d1 * d2 * d3,
        )

    @staticmethod
    def _coerce(base, x):
        if isinstance(x, RingElement):
            if x.ring is not base.ring:
                raise UsageError("twist divisor lives on a different base")
            if not x.is_zero() and set(k[0] for k in x.coeffs) != {1}:
                raise UsageError("twist divisors must be degree-1 classes")
            return x
        if isinstance(x, int) and x == 0:
            return base.ring.zero()
        return base.ring.divisor(x)

    @property
    def dim_z(self):
        return self.base.dim + 2

    # -- class constructors ----------------------------------------------

    def zclass(self, c0, c1, c2):
        return ZClass(self, (c0, c1, c2))

    def zero(self):
        r = self.base.ring
        return self.zclass(r.zero(), r.zero(), r.zero())

    def one(self):
        r = self.base.ring
        return self.zclass(r.one(), r.zero(), r.zero())

    def H(self):
        r = self.base.ring
        return self.zclass(r.zero(), r.one(), r.zero())

    def pullback(self, alpha):
        r = self.base.ring
        return self.zclass(alpha, r.zero(), r.zero())

    def F(self, i):
        """Divisor of the sub-bundle complementary to the i-th summand."""
        if i not in (1, 2, 3):
            raise UsageError("summand index must be 1, 2 or 3")
        return self.H() - self.pullback(self.D[i - 1])

    def anticanonical(self):
        """-K_Z = 3H + pullback(-K_T - D1 - D2 - D3)."""
        r = self.base.ring
        return self.zclass(-self.base.K - self.sigma[0], r.one() * 3, r.zero())

    def integrate(self, x):
        if x.model is not self:
            raise UsageError("class belongs to a different bundle model")
        return x.components[2].integrate()

    def section(self, i):
        """Data of the i-th coordinate section."""
        if i not in (1, 2, 3):
            raise UsageError("section index must be 1, 2 or 3")
        j, k = [m for m in (1, 2, 3) if m != i]
        di = self.D[i - 1]
        roots = (self.D[j - 1] - di, self.D[k - 1] - di)
        return SectionData(i, di, roots, self.F(j) * self.F(k))

    def ci_center(self):
        """Center data for the degree-2 complete intersection of general
        members of |H| and |2H|; requires twists (N, 0, 0) with N != 0."""
        n = self.D[0]
        if n.is_zero():
            raise ModelError("complete-intersection center needs a nonzero twist N")
        if not (self.D[1].is_zero() and self.D[2].is_zero()):
            raise ModelError("complete-intersection center needs twists (N, 0, 0)")
        h = self.H()
        return CICenterData(n, (-n, -2 * n), h * (2 * h), 2, 2 * n)


@dataclass(frozen=True, eq=False)
class SectionData:
    index: int
    h_restrict: RingElement
    conormal_roots: tuple
    class_in_z: "ZClass"

    @property
    def degree_over_base(self):
        return 1


@dataclass(frozen=True, eq=False)
class CICenterData:
    h_restrict: RingElement
    conormal_roots: tuple
    class_in_z: "ZClass"
    degree_over_base: int
    branch_class: RingElement


class ZClass:
    """Class on Z in normal form (c0, c1, c2) with respect to H-powers."""

    __slots__ = ("model", "components")

    def __init__(self, model, components):
        if len(components) != 3:
            raise UsageError("a class on Z has three H-power components")
        self.model = model
        self.components = tuple(components)

    def _check(self, other):
        if other.model is not self.model:
            raise UsageError("classes live on different bundle models")

    def __add__(self, other):
        if not isinstance(other, ZClass):
            return NotImplemented
        self._check(other)
        return ZClass(
            self.model, tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ZClass(self.model, tuple(-a for a in self.components))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZClass(self.model, tuple(a * other for a in self.components))
        if not isinstance(other, ZClass):
            return NotImplemented
        self._check(other)
        # convolve in H, then rewrite H^k for k >= 3 via the bundle relation
        raw = [self.model.base.ring.zero() for _ in range(5)]
        for i, a in enumerate(self.components):
            if a.is_zero():
                continue
            for j, b in enumerate(other.components):
                raw[i + j] = raw[i + j] + a * b
        s1, s2, s3 = self.model.sigma
        for k in range(4, 2, -1):
            top = raw[k]
            if top.is_zero():
                continue
            raw[k] = self.model.base.ring.zero()
            raw[k - 1] = raw[k - 1] + top * s1
            raw[k - 2] = raw[k - 2] - top * s2
            raw[k - 3] = raw[k - 3] + top * s3
        return ZClass(self.model, tuple(raw[:3]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, n):
        out = self.model.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ZClass):
            return NotImplemented
        return self.model is other.model and all(
            a == b for a, b in zip(self.components, other.components)
        )

    __hash__ = None

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def degree_part(self, degree):
        """Total-degree part (H contributes 1, base classes their degree)."""
        return ZClass(
            self.model,
            tuple(c.degree_part(degree - k) for k, c in enumerate(self.components)),
        )

    def integrate(self):
        return self.model.integrate(self)

    def __repr__(self):
        c0, c1, c2 = self.components
        return f"({c0}) + ({c1})*H + ({c2})*H^2"


def exp_z(x):
    """exp of a positive-degree class on Z, truncated at dim Z."""
    if any(not c.is_zero() for c in [x.components[0].degree_part(0)]):
        raise UsageError("exp needs a vanishing degree-0 part")
    acc = x.model.one()
    term = x.model.one()
    for k in range(1, x.model.dim_z + 1):
        term = term * x / k
        acc = acc + term
    return acc
