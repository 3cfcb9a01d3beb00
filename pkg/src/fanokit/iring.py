"""Exact graded ring arithmetic for intersection theory.

A :class:`GradedRing` is specified by a finite named basis in each degree
and integer structure constants; elements carry sparse rational
coefficients.  Products landing above the top degree vanish silently,
mirroring dimension-based truncation in a Chow ring.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError


def _scalar(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise UsageError(f"expected int or Fraction, got {type(x).__name__}")


class GradedRing:
    """Graded commutative ring with integer structure constants.

    ``basis[d]`` lists class names in degree ``d``; degree 0 holds the
    unit alone.  ``products`` maps ``((d1, i1), (d2, i2))`` with positive
    degrees to ``{index: int}`` describing the product in degree
    ``d1 + d2``; pairs whose total degree exceeds ``dim`` may be omitted.
    ``point_index`` picks the distinguished class in top degree used by
    :meth:`RingElement.integrate`.
    """

    def __init__(self, name, dim, basis, products, point_index=0):
        if len(basis) != dim + 1:
            raise UsageError("basis must list one level per degree 0..dim")
        if len(basis[0]) != 1:
            raise UsageError("degree 0 must contain exactly one class, the unit")
        self.name = name
        self.dim = dim
        self.basis = tuple(tuple(level) for level in basis)
        if not 0 <= point_index < len(self.basis[dim]):
            raise UsageError("point_index outside the top-degree basis")
        self.point_index = point_index
        table = {}
        for (k1, k2), val in products.items():
            d1, i1 = k1
            d2, i2 = k2
            if d1 <= 0 or d2 <= 0:
                raise UsageError("structure constants are given for positive degrees only")
            if d1 + d2 > dim:
                continue
            entry = {}
            for j, c in val.items():
                if not isinstance(c, int):
                    raise UsageError("structure constants must be integers")
                if c:
                    entry[j] = Fraction(c)
            table[(d1, i1, d2, i2)] = entry
            table[(d2, i2, d1, i1)] = entry
        self._table = table
        self._names = {}
        for d, level in enumerate(self.basis):
            for i, nm in enumerate(level):
                if nm in self._names:
                    raise UsageError(f"duplicate basis name {nm!r}")
                self._names[nm] = (d, i)

    @classmethod
    def for_curve(cls, name):
        """Degree-1 ring of a curve: unit and a point class."""
        return cls(name, 1, [["1"], ["pt"]], {})

    @classmethod
    def for_surface(cls, name, classes, pairing):
        """Surface ring from degree-1 class names and their integer
        intersection matrix (products land on the point class)."""
        products = {}
        for i in range(len(classes)):
            for j in range(i, len(classes)):
                products[((1, i), (1, j))] = {0: pairing[i][j]}
        return cls(name, 2, [["1"], list(classes), ["pt"]], products)

    # -- element constructors ------------------------------------------------

    def element(self, coeffs):
        return RingElement(self, {k: _scalar(v) for k, v in coeffs.items()})

    def zero(self):
        return RingElement(self, {})

    def one(self):
        return RingElement(self, {(0, 0): Fraction(1)})

    def point(self):
        return RingElement(self, {(self.dim, self.point_index): Fraction(1)})

    def gen(self, name):
        if name not in self._names:
            raise UsageError(f"no basis class named {name!r} in {self.name}")
        return RingElement(self, {self._names[name]: Fraction(1)})

    def divisor(self, coords):
        """Degree-1 element from a coordinate vector in the degree-1 basis."""
        coords = list(coords)
        if len(coords) != len(self.basis[1]):
            raise UsageError(
                f"{self.name} needs {len(self.basis[1])} degree-1 coordinates, got {len(coords)}"
            )
        return RingElement(self, {(1, i): _scalar(c) for i, c in enumerate(coords)})

    def basis_product(self, d1, i1, d2, i2):
        key = (d1, i1, d2, i2)
        if key not in self._table:
            raise UsageError(
                f"{self.name}: product of degree ({d1},{d2}) basis classes not in the table"
            )
        return self._table[key]

    def degree_one_names(self):
        return self.basis[1]

    def __repr__(self):
        return f"GradedRing({self.name!r}, dim={self.dim})"


class RingElement:
    """Sparse element of a :class:`GradedRing`; immutable in practice."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = {k: v for k, v in coeffs.items() if v != 0 and k[0] <= ring.dim}

    def _check(self, other):
        if other.ring is not self.ring:
            raise UsageError("elements live in different rings")

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return RingElement(self.ring, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RingElement(self.ring, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            s = _scalar(other)
            return RingElement(self.ring, {k: v * s for k, v in self.coeffs.items()})
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        ring = self.ring
        acc = {}
        for (d1, i1), c1 in self.coeffs.items():
            for (d2, i2), c2 in other.coeffs.items():
                d = d1 + d2
                if d > ring.dim:
                    continue
                c = c1 * c2
                if d1 == 0:
                    key = (d2, i2)
                    acc[key] = acc.get(key, Fraction(0)) + c
                elif d2 == 0:
                    key = (d1, i1)
                    acc[key] = acc.get(key, Fraction(0)) + c
                else:
                    for j, s in ring.basis_product(d1, i1, d2, i2).items():
                        key = (d, j)
                        acc[key] = acc.get(key, Fraction(0)) + c * s
        return RingElement(ring, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / _scalar(other))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise UsageError("powers must be nonnegative integers")
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    __hash__ = None

    def is_zero(self):
        return not self.coeffs

    def coeff(self, degree, index):
        return self.coeffs.get((degree, index), Fraction(0))

    def degree_part(self, degree):
        return RingElement(
            self.ring, {k: v for k, v in self.coeffs.items() if k[0] == degree}
        )

    def coords(self, degree):
        """Coefficient tuple over the basis of one degree."""
        return tuple(self.coeff(degree, i) for i in range(len(self.ring.basis[degree])))

    def integrate(self):
        """Coefficient of the point class; zero if absent."""
        return self.coeffs.get((self.ring.dim, self.ring.point_index), Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (d, i), v in sorted(self.coeffs.items()):
            name = self.ring.basis[d][i]
            parts.append(f"{v}*{name}" if name != "1" else f"{v}")
        return " + ".join(parts)


def exp_trunc(x):
    """exp of a positive-degree element, truncated at the top degree."""
    if not isinstance(x, RingElement):
        raise UsageError("exp_trunc expects a RingElement")
    if x.coeff(0, 0) != 0:
        raise UsageError("exp_trunc needs a vanishing degree-0 part")
    acc = x.ring.one()
    term = x.ring.one()
    for k in range(1, x.ring.dim + 1):
        term = term * x / k
        acc = acc + term
    return acc


def todd_inverse(x):
    """(e^x - 1)/x, the inverse Todd series, truncated at the top degree."""
    if not isinstance(x, RingElement):
        raise UsageError("todd_inverse expects a RingElement")
    if x.coeff(0, 0) != 0:
        raise UsageError("todd_inverse needs a vanishing degree-0 part")
    acc = x.ring.one()
    term = x.ring.one()
    for k in range(1, x.ring.dim + 1):
        term = term * x / k  # x^k / k!
        acc = acc + term / (k + 1)
    return acc


def verify_ring(ring):
    """Exhaustive commutativity/associativity check of the structure
    constants; raises UsageError on the first violation."""

    def basis_el(d, i):
        return RingElement(ring, {(d, i): Fraction(1)})

    levels = [
        (d, i) for d in range(ring.dim + 1) for i in range(len(ring.basis[d]))
    ]
    for a in levels:
        for b in levels:
            x, y = basis_el(*a), basis_el(*b)
            if (x * y) != (y * x):
                raise UsageError(f"{ring.name}: product not commutative on {a}, {b}")
    for a in levels:
        for b in levels:
            for c in levels:
                if a[0] + b[0] + c[0] > ring.dim:
                    continue
                x, y, z = basis_el(*a), basis_el(*b), basis_el(*c)
                if ((x * y) * z) != (x * (y * z)):
                    raise UsageError(
                        f"{ring.name}: product not associative on {a}, {b}, {c}"
                    )
    return True
