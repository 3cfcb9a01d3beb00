"""Intersection calculus on the blow-up X -> Z along disjoint
codimension-2 centers.

A class on X is a pulled-back class on Z plus, for each center, an
exceptional-support part j_*(g0 + g1*z) where z = -E|_E satisfies the
rank-2 relation  z^2 = (A+B) z - A*B  in terms of the conormal roots
(A, B) of the center.  Three rewrite rules drive all products:

  h^*(b) . j_*(g)          = j_*(b|_S . g)
  j_*(p) . j_*(q)          = j_*(-z . p . q)     (same center)
  j_*(p) . j_*(q)          = 0                   (different centers)

Pushing forward along E -> S kills z^0 and sends z^1 to 1, so the
integral of a class is the bundle integral of its pulled-back part plus
the center integrals of the g1 components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import UsageError
from .iring import RingElement, exp_trunc
from .pbundle import PBundleModel, ZClass, exp_z


@dataclass(frozen=True, eq=False)
class CenterModel:
    """One blow-up center: its label, restriction data, conormal roots,
    and integration multiplier (2 for the degree-2 cover center)."""

    label: str
    ring: object  # GradedRing of the base; all needed classes are pullbacks
    deg: int
    h_restrict: RingElement
    roots: tuple
    euler: int
    hodge: dict

    def restrict(self, zclass: ZClass) -> RingElement:
        c0, c1, c2 = zclass.components
        r = self.h_restrict
        return c0 + c1 * r + c2 * r * r

    def integrate(self, el: RingElement):
        return self.deg * el.integrate()


class BlowupModel:
    def __init__(self, zmodel: PBundleModel, centers):
        self.zmodel = zmodel
        self.centers = tuple(centers)
        if len(self.centers) > 3:
            raise UsageError("at most three centers are supported")

    @property
    def dim_x(self):
        return self.zmodel.dim_z

    # -- constructors ------------------------------------------------------

    def mixed(self, z_part=None, e_parts=None):
        return MixedClass(self, z_part if z_part is not None else self.zmodel.zero(),
                          dict(e_parts or {}))

    def zero(self):
        return self.mixed()

    def one(self):
        return self.mixed(self.zmodel.one())

    def pullback(self, zclass: ZClass):
        return self.mixed(zclass)

    def pullback_from_base(self, alpha: RingElement):
        return self.mixed(self.zmodel.pullback(alpha))

    def E(self, i):
        """Exceptional divisor over the i-th center (0-based index)."""
        ring = self.zmodel.base.ring
        return self.mixed(None, {i: (ring.one(), ring.zero())})

    def anticanonical(self):
        """-K_X = h^*(-K_Z) - sum of exceptional divisors."""
        out = self.pullback(self.zmodel.anticanonical())
        for i in range(len(self.centers)):
            out = out - self.E(i)
        return out

    def integrate(self, x):
        if x.model is not self:
            raise UsageError("class belongs to a different blow-up model")
        total = self.zmodel.integrate(x.z_part)
        for i, center in enumerate(self.centers):
            if i in x.e_parts:
                total = total + center.integrate(x.e_parts[i][1])
        return total


class MixedClass:
    __slots__ = ("model", "z_part", "e_parts")

    def __init__(self, model, z_part, e_parts):
        self.model = model
        self.z_part = z_part
        pruned = {}
        for i, (g0, g1) in e_parts.items():
            if not (g0.is_zero() and g1.is_zero()):
                pruned[i] = (g0, g1)
        self.e_parts = pruned

    def _check(self, other):
        if other.model is not self.model:
            raise UsageError("classes live on different blow-up models")

    def _ring(self):
        return self.model.zmodel.base.ring

    def __add__(self, other):
        if not isinstance(other, MixedClass):
            return NotImplemented
        self._check(other)
        ring = self._ring()
        parts = {}
        for i in set(self.e_parts) | set(other.e_parts):
            a0, a1 = self.e_parts.get(i, (ring.zero(), ring.zero()))
            b0, b1 = other.e_parts.get(i, (ring.zero(), ring.zero()))
            parts[i] = (a0 + b0, a1 + b1)
        return MixedClass(self.model, self.z_part + other.z_part, parts)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MixedClass(
            self.model,
            -self.z_part,
            {i: (-g0, -g1) for i, (g0, g1) in self.e_parts.items()},
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MixedClass(
                self.model,
                self.z_part * other,
                {i: (g0 * other, g1 * other) for i, (g0, g1) in self.e_parts.items()},
            )
        if not isinstance(other, MixedClass):
            return NotImplemented
        self._check(other)
        model = self.model
        ring = self._ring()
        z = self.z_part * other.z_part
        parts = {}
        for i in set(self.e_parts) | set(other.e_parts):
            center = model.centers[i]
            s1 = center.roots[0] + center.roots[1]
            s2 = center.roots[0] * center.roots[1]
            zero = ring.zero()
            p = self.e_parts.get(i, (zero, zero))
            q = other.e_parts.get(i, (zero, zero))
            ra = center.restrict(self.z_part)
            rb = center.restrict(other.z_part)
            # h^*(z1).j(q) + j(p).h^*(z2)
            g0 = ra * q[0] + rb * p[0]
            g1 = ra * q[1] + rb * p[1]
            # j(p).j(q) = j(-z.p.q), reducing z^2 = s1 z - s2
            r0 = p[0] * q[0] - s2 * p[1] * q[1]
            r1 = p[0] * q[1] + p[1] * q[0] + s1 * p[1] * q[1]
            g0 = g0 + s2 * r1
            g1 = g1 - r0 - s1 * r1
            parts[i] = (g0, g1)
        return MixedClass(model, z, parts)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, n):
        out = self.model.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MixedClass):
            return NotImplemented
        if self.model is not other.model or self.z_part != other.z_part:
            return False
        keys = set(self.e_parts) | set(other.e_parts)
        ring = self._ring()
        zero = ring.zero()
        for i in keys:
            a = self.e_parts.get(i, (zero, zero))
            b = other.e_parts.get(i, (zero, zero))
            if a[0] != b[0] or a[1] != b[1]:
                return False
        return True

    __hash__ = None

    def degree_part(self, degree):
        """Graded piece: j_* raises degree by one and z counts one."""
        parts = {
            i: (g0.degree_part(degree - 1), g1.degree_part(degree - 2))
            for i, (g0, g1) in self.e_parts.items()
        }
        return MixedClass(self.model, self.z_part.degree_part(degree), parts)

    def integrate(self):
        return self.model.integrate(self)

    def __repr__(self):
        bits = [f"h^*({self.z_part!r})"]
        for i, (g0, g1) in sorted(self.e_parts.items()):
            bits.append(f"j{i}*(({g0}) + ({g1})z)")
        return " + ".join(bits)


def exp_mixed(x):
    acc = x.model.one()
    term = x.model.one()
    for k in range(1, x.model.dim_x + 1):
        term = term * x / k
        acc = acc + term
    return acc


def _zeta_powers(center, top):
    """(alpha_k, beta_k) with z^k = alpha_k + beta_k z under the relation."""
    ring = center.ring
    s1 = center.roots[0] + center.roots[1]
    s2 = center.roots[0] * center.roots[1]
    powers = [(ring.one(), ring.zero()), (ring.zero(), ring.one())]
    while len(powers) <= top:
        a, b = powers[-1]
        powers.append((-s2 * b, a + s1 * b))
    return powers


def _grr_correction(center, top):
    """Chern character supported on one exceptional divisor:
    exp(pi^* c1(N) + z) . (e^z - 1)/z,  with c1(N) = -(A + B)."""
    ring = center.ring
    zp = _zeta_powers(center, top)
    zero = ring.zero()
    expz = (zero, zero)
    tdinv = (zero, zero)
    for k in range(top + 1):
        a, b = zp[k]
        ek = Fraction(1, factorial(k))
        tk = Fraction(1, factorial(k + 1))
        expz = (expz[0] + a * ek, expz[1] + b * ek)
        tdinv = (tdinv[0] + a * tk, tdinv[1] + b * tk)
    c1n = -(center.roots[0] + center.roots[1])
    expc = exp_trunc(c1n)
    expz = (expc * expz[0], expc * expz[1])
    s1 = center.roots[0] + center.roots[1]
    s2 = center.roots[0] * center.roots[1]
    g0 = expz[0] * tdinv[0] - s2 * expz[1] * tdinv[1]
    g1 = expz[0] * tdinv[1] + expz[1] * tdinv[0] + s1 * expz[1] * tdinv[1]
    return (g0, g1)


def tangent_character_base(base):
    """ch of the tangent sheaf of the base, from catalog data."""
    ring = base.ring
    c1 = -base.K
    if base.dim == 1:
        return ring.one() + c1
    c2 = base.euler * ring.point()
    return ring.one() * 2 + c1 + (c1 * c1 - 2 * c2) / 2


def chern_character(m: BlowupModel):
    """ch(T_X): relative Euler sequence on Z, minus one exceptional-support
    correction per center."""
    zm = m.zmodel
    chz = zm.pullback(tangent_character_base(zm.base))
    for i in (1, 2, 3):
        chz = chz + exp_z(zm.F(i))
    chz = chz - zm.one()
    out = m.pullback(chz)
    for i, center in enumerate(m.centers):
        corr = _grr_correction(center, m.dim_x)
        out = out - m.mixed(None, {i: corr})
    return out


@dataclass(frozen=True)
class CharNumbers:
    k_top: int
    k2c2: int | None
    chi_minus_k: int
    chi_t: int
    euler: int
    chi_o: int


def _as_int(x):
    f = Fraction(x)
    if f.denominator != 1:
        raise UsageError(f"expected an integer value, got {f}")
    return int(f)


def characteristic_numbers(m: BlowupModel) -> CharNumbers:
    """Top intersection numbers of the anticanonical class and the
    Chern/Todd data needed for the invariant tables (dim 3 and 4)."""
    n = m.dim_x
    if n not in (3, 4):
        raise UsageError("characteristic numbers are computed in dimension 3 or 4")
    ch = chern_character(m)
    chk = [ch.degree_part(k) for k in range(n + 1)]
    p = [None] + [chk[k] * factorial(k) for k in range(1, n + 1)]
    c = [m.one()]
    c.append(p[1])
    c.append((c[1] * p[1] - p[2]) / 2)
    c.append((c[2] * p[1] - c[1] * p[2] + p[3]) / 3)
    if n == 4:
        c.append((c[3] * p[1] - c[2] * p[2] + c[1] * p[3] - p[4]) / 4)
    td = [m.one(), c[1] / 2, (c[1] * c[1] + c[2]) / 12, (c[1] * c[2]) / 24]
    if n == 4:
        c1sq = c[1] * c[1]
        td.append(
            (
                -(c1sq * c1sq)
                + 4 * (c1sq * c[2])
                + c[1] * c[3]
                + 3 * (c[2] * c[2])
                - c[4]
            )
            / 720
        )
    mk = m.anticanonical()
    emk = exp_mixed(mk)
    chi_mk = sum((emk.degree_part(k) * td[n - k]).integrate() for k in range(n + 1))
    chi_t = sum((chk[k] * td[n - k]).integrate() for k in range(n + 1))
    chi_o = td[n].integrate()
    k_top = (mk ** n).integrate()
    k2c2 = (mk * mk * c[2]).integrate() if n == 4 else None
    return CharNumbers(
        _as_int(k_top),
        _as_int(k2c2) if k2c2 is not None else None,
        _as_int(chi_mk),
        _as_int(chi_t),
        _as_int(c[n].integrate()),
        _as_int(chi_o),
    )
