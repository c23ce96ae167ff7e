"""Exact integer arithmetic on the tetrahedral space and spacetime lattices.

The spatial lattice is the integer span of three unit vectors with pairwise
inner product 1/2; the spacetime lattice adds an orthogonal unit time
direction.  All inner products are kept exact by working with *doubled*
values (2<u,v> is always an integer), so nothing in this module touches
floating point except the Cartesian embedding helper.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .paperdata import BASIS_CARTESIAN

__all__ = [
    "Vec3",
    "Vec4",
    "Triple",
    "norm_sq3",
    "norm_sq4",
    "inner3_doubled",
    "minkowski_doubled",
    "unit_vectors3",
    "triads",
    "triples",
    "to_cartesian3",
    "ZERO3",
    "E3",
    "F3",
    "G3",
]


@dataclass(frozen=True, slots=True)
class Vec3:
    """Spatial lattice vector with coordinates (n, p, q) in the oblique basis."""

    n: int
    p: int
    q: int

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.n + other.n, self.p + other.p, self.q + other.q)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.n - other.n, self.p - other.p, self.q - other.q)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.n, -self.p, -self.q)

    def __mul__(self, k: int) -> "Vec3":
        return Vec3(k * self.n, k * self.p, k * self.q)

    __rmul__ = __mul__

    def coords(self) -> tuple[int, int, int]:
        return (self.n, self.p, self.q)


@dataclass(frozen=True, slots=True)
class Vec4:
    """Spacetime lattice vector (t, n, p, q); t is the time coordinate."""

    t: int
    n: int
    p: int
    q: int

    @property
    def spatial(self) -> Vec3:
        return Vec3(self.n, self.p, self.q)

    def __add__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.t + other.t, self.n + other.n, self.p + other.p, self.q + other.q)

    def __sub__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.t - other.t, self.n - other.n, self.p - other.p, self.q - other.q)

    def __neg__(self) -> "Vec4":
        return Vec4(-self.t, -self.n, -self.p, -self.q)

    def __mul__(self, k: int) -> "Vec4":
        return Vec4(k * self.t, k * self.n, k * self.p, k * self.q)

    __rmul__ = __mul__

    def coords(self) -> tuple[int, int, int, int]:
        return (self.t, self.n, self.p, self.q)


ZERO3 = Vec3(0, 0, 0)
E3 = Vec3(1, 0, 0)
F3 = Vec3(0, 1, 0)
G3 = Vec3(0, 0, 1)


def norm_sq3(u: Vec3) -> int:
    """Squared spatial length n^2+p^2+q^2+np+nq+pq (always a nonnegative integer)."""
    n, p, q = u.n, u.p, u.q
    return n * n + p * p + q * q + n * p + n * q + p * q


def inner3_doubled(u: Vec3, v: Vec3) -> int:
    """Doubled spatial inner product 2<u,v>; the factor 2 keeps it integral."""
    n, p, q = u.n, u.p, u.q
    a, b, c = v.n, v.p, v.q
    return 2 * (n * a + p * b + q * c) + (n * b + p * a) + (n * c + q * a) + (p * c + q * b)


def norm_sq4(u: Vec4) -> int:
    """Indefinite squared spacetime norm t^2 - |spatial|^2 (may be negative)."""
    return u.t * u.t - norm_sq3(u.spatial)


def minkowski_doubled(p: Vec4, x: Vec4) -> int:
    """Doubled Minkowski pairing 2(p.x) = 2 p^0 x^0 - 2<spatial, spatial>."""
    return 2 * p.t * x.t - inner3_doubled(p.spatial, x.spatial)


def unit_vectors3() -> tuple[Vec3, ...]:
    """The 12 unit vectors, sorted lexicographically by coordinates."""
    return _UNIT_VECTORS


def _enumerate_units() -> tuple[Vec3, ...]:
    hits = [
        Vec3(n, p, q)
        for n, p, q in itertools.product(range(-2, 3), repeat=3)
        if norm_sq3(Vec3(n, p, q)) == 1
    ]
    return tuple(sorted(hits, key=Vec3.coords))


@dataclass(frozen=True, slots=True)
class Triple:
    """Ordered triple of unit vectors with pairwise doubled inner product 1.

    The ordering is the orientation-positive (determinant +1) one, so the 24
    triples are exactly the images of the basic triple under the symmetry
    group.
    """

    u: Vec3
    v: Vec3
    w: Vec3

    def members(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.u, self.v, self.w)

    def matrix(self) -> tuple[tuple[int, int, int], ...]:
        """3x3 integer matrix whose columns are the triple members."""
        cols = self.members()
        return tuple(tuple(c.coords()[i] for c in cols) for i in range(3))


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def triads() -> tuple[frozenset[Vec3], ...]:
    """The 8 unordered triads of mutually half-angled unit vectors."""
    return _TRIADS


def triples() -> tuple[Triple, ...]:
    """All 24 positively oriented triples, three per triad."""
    return _TRIPLES


def _enumerate_triples() -> tuple[tuple[frozenset[Vec3], ...], tuple[Triple, ...]]:
    units = _enumerate_units()
    triad_list = [
        frozenset((a, b, c))
        for a, b, c in itertools.combinations(units, 3)
        if inner3_doubled(a, b) == 1 and inner3_doubled(a, c) == 1 and inner3_doubled(b, c) == 1
    ]
    trips = []
    for triad in triad_list:
        for perm in itertools.permutations(sorted(triad, key=Vec3.coords)):
            t = Triple(*perm)
            if _det3(t.matrix()) == 1:
                trips.append(t)
    trips.sort(key=lambda t: tuple(v.coords() for v in t.members()))
    return tuple(triad_list), tuple(trips)


def to_cartesian3(u: Vec3) -> tuple[float, float, float]:
    """Cartesian embedding of a lattice vector via the published basis."""
    e, f, g = BASIS_CARTESIAN
    return tuple(u.n * e[i] + u.p * f[i] + u.q * g[i] for i in range(3))


def cartesian_norm_sq(u: Vec3) -> float:
    x, y, z = to_cartesian3(u)
    return x * x + y * y + z * z


def basic_triple() -> Triple:
    return Triple(E3, F3, G3)


def spatial_enumeration_bound(limit: int) -> int:
    """Largest |coordinate| possible for norm_sq3 <= limit.

    The quadratic form dominates half the coordinate sum of squares, so any
    coordinate is bounded by sqrt(2*limit).
    """
    if limit < 0:
        return -1
    return math.isqrt(2 * limit)


def vectors_with_norm_up_to(limit: int) -> list[Vec3]:
    """All spatial vectors with norm_sq3 <= limit, lexicographic order."""
    b = spatial_enumeration_bound(limit)
    out = []
    for n in range(-b, b + 1):
        for p in range(-b, b + 1):
            for q in range(-b, b + 1):
                v = Vec3(n, p, q)
                if norm_sq3(v) <= limit:
                    out.append(v)
    return out


def vectors_with_norm(value: int) -> list[Vec3]:
    """All spatial vectors with norm_sq3 == value, lexicographic order."""
    return [v for v in vectors_with_norm_up_to(value) if norm_sq3(v) == value]


_UNIT_VECTORS = _enumerate_units()
_TRIADS, _TRIPLES = _enumerate_triples()
