"""Exact rational geometric kernel.

Points live in R^3 with arbitrary-precision rational coordinates
(``fractions.Fraction``).  Every predicate in this module is an exact sign
computation; there are no tolerances and no floating point.  Running any
predicate twice on the same inputs gives identical results.

The hot predicates (``orient3d`` and the plane-side tests built on it) run on
cached integer representations of the points: each point caches
``(X, Y, Z, D)`` with ``D > 0`` and ``x = X/D`` etc., so a determinant sign
reduces to integer arithmetic after cross-multiplying denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Tuple, Union

from .errors import DegenerateGeometryError

Rational = Union[int, str, Fraction]


def frac(value: Rational) -> Fraction:
    """Coerce ints, strings like ``"3/7"``, and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def sign(x) -> int:
    """Sign of an int or Fraction as -1, 0, or +1."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class ExactPoint:
    """A point of R^3 with exact rational coordinates.

    Also doubles as a vector (difference of points); arithmetic is
    componentwise and exact.
    """

    __slots__ = ("x", "y", "z", "_irep")

    def __init__(self, x: Rational, y: Rational, z: Rational):
        self.x = frac(x)
        self.y = frac(y)
        self.z = frac(z)
        self._irep = None

    @property
    def irep(self) -> Tuple[int, int, int, int]:
        """Integer representation ``(X, Y, Z, D)`` with ``D > 0``."""
        r = self._irep
        if r is None:
            d = lcm(self.x.denominator, self.y.denominator, self.z.denominator)
            r = (
                self.x.numerator * (d // self.x.denominator),
                self.y.numerator * (d // self.y.denominator),
                self.z.numerator * (d // self.z.denominator),
                d,
            )
            self._irep = r
        return r

    def coords(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    def __add__(self, other: "ExactPoint") -> "ExactPoint":
        return ExactPoint(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "ExactPoint") -> "ExactPoint":
        return ExactPoint(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "ExactPoint":
        return ExactPoint(-self.x, -self.y, -self.z)

    def scale(self, k: Rational) -> "ExactPoint":
        k = frac(k)
        return ExactPoint(self.x * k, self.y * k, self.z * k)

    def dot(self, other: "ExactPoint") -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "ExactPoint") -> "ExactPoint":
        return ExactPoint(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactPoint)
            and self.x == other.x
            and self.y == other.y
            and self.z == other.z
        )

    def __hash__(self):
        return hash((self.x, self.y, self.z))

    def __repr__(self):
        return f"ExactPoint({self.x}, {self.y}, {self.z})"


ORIGIN = ExactPoint(0, 0, 0)


def int_dir(frm: ExactPoint, to: ExactPoint) -> Tuple[int, int, int]:
    """Integer vector positively proportional to ``to - frm``.

    The true difference is this vector divided by the product of the two
    (positive) denominators, so every sign test on it is exact.
    """
    fx, fy, fz, fd = frm.irep
    tx, ty, tz, td = to.irep
    return (tx * fd - fx * td, ty * fd - fy * td, tz * fd - fz * td)


def icross(u: Tuple[int, int, int], v: Tuple[int, int, int]) -> Tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def idot(u: Tuple[int, int, int], v: Tuple[int, int, int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def orient3d(a: ExactPoint, b: ExactPoint, c: ExactPoint, d: ExactPoint) -> int:
    """Sign of det[b-a, c-a, d-a]: +1, -1, or 0 (0 iff coplanar).

    Positive means d lies on the positive side of the plane oriented by the
    right-handed frame (b-a, c-a).
    """
    ax, ay, az, ad = a.irep
    bx, by, bz, bd = b.irep
    cx, cy, cz, cd = c.irep
    dx, dy, dz, dd = d.irep
    # Each row is the cross-multiplied difference; its denominator is positive,
    # so the determinant sign is unaffected.
    r1x = bx * ad - ax * bd
    r1y = by * ad - ay * bd
    r1z = bz * ad - az * bd
    r2x = cx * ad - ax * cd
    r2y = cy * ad - ay * cd
    r2z = cz * ad - az * cd
    r3x = dx * ad - ax * dd
    r3y = dy * ad - ay * dd
    r3z = dz * ad - az * dd
    det = (
        r1x * (r2y * r3z - r2z * r3y)
        - r1y * (r2x * r3z - r2z * r3x)
        + r1z * (r2x * r3y - r2y * r3x)
    )
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def orient3d_det(a: ExactPoint, b: ExactPoint, c: ExactPoint, d: ExactPoint) -> Fraction:
    """The exact rational determinant behind :func:`orient3d` (slower path).

    Used where the magnitude matters, e.g. to solve for an intersection
    parameter.
    """
    u = b - a
    v = c - a
    w = d - a
    return u.dot(v.cross(w))


def collinear(a: ExactPoint, b: ExactPoint, c: ExactPoint) -> bool:
    return (b - a).cross(c - a).is_zero()


class Segment:
    """A straight segment with distinct exact endpoints."""

    __slots__ = ("a", "b")

    def __init__(self, a: ExactPoint, b: ExactPoint):
        if a == b:
            raise DegenerateGeometryError(f"segment endpoints coincide: {a!r}")
        self.a = a
        self.b = b

    def point_at(self, t: Fraction) -> ExactPoint:
        return self.a + (self.b - self.a).scale(t)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def __eq__(self, other):
        return isinstance(other, Segment) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Segment({self.a!r}, {self.b!r})"


class Triangle:
    """A non-degenerate triangle.  Vertices are ordered; edge k runs from
    vertex k to vertex (k+1) mod 3."""

    __slots__ = ("p", "q", "r", "_normal")

    def __init__(self, p: ExactPoint, q: ExactPoint, r: ExactPoint):
        if (q - p).cross(r - p).is_zero():
            raise DegenerateGeometryError(f"collinear triangle: {p!r}, {q!r}, {r!r}")
        self.p = p
        self.q = q
        self.r = r
        self._normal = None

    @property
    def vertices(self) -> Tuple[ExactPoint, ExactPoint, ExactPoint]:
        return (self.p, self.q, self.r)

    @property
    def normal(self) -> ExactPoint:
        if self._normal is None:
            self._normal = (self.q - self.p).cross(self.r - self.p)
        return self._normal

    def edge(self, k: int) -> Segment:
        v = self.vertices
        return Segment(v[k], v[(k + 1) % 3])

    def __repr__(self):
        return f"Triangle({self.p!r}, {self.q!r}, {self.r!r})"


# ---------------------------------------------------------------------------
# Segment / segment classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SegSegResult:
    kind: str  # 'disjoint' | 'endpoint-touch' | 'interior-cross' | 'collinear-overlap'
    point: Optional[ExactPoint] = None
    overlap: Optional[Tuple[ExactPoint, ExactPoint]] = None


def _collinear_overlap(s: Segment, t: Segment) -> SegSegResult:
    """All four endpoints lie on one line.  Interval arithmetic on the line."""
    u = s.b - s.a
    lam = lambda p: (p - s.a).dot(u)
    s_lo, s_hi = Fraction(0), u.dot(u)
    t0, t1 = lam(t.a), lam(t.b)
    t_lo, t_hi = (t0, t1) if t0 <= t1 else (t1, t0)
    lo = max(s_lo, t_lo)
    hi = min(s_hi, t_hi)
    if lo > hi:
        return SegSegResult("disjoint")
    if lo == hi:
        pt = s.a + u.scale(lo / u.dot(u))
        return SegSegResult("endpoint-touch", point=pt)
    p1 = s.a + u.scale(lo / u.dot(u))
    p2 = s.a + u.scale(hi / u.dot(u))
    return SegSegResult("collinear-overlap", overlap=(p1, p2))


def segment_segment_classify(s: Segment, t: Segment) -> SegSegResult:
    """Exact classification of the intersection of two segments in R^3."""
    if orient3d(s.a, s.b, t.a, t.b) != 0:
        return SegSegResult("disjoint")  # not coplanar, cannot meet
    if collinear(s.a, s.b, t.a) and collinear(s.a, s.b, t.b):
        return _collinear_overlap(s, t)
    u = s.b - s.a
    w = t.b - t.a
    n = u.cross(w)
    if n.is_zero():
        return SegSegResult("disjoint")  # parallel distinct lines
    # Coplanar, non-parallel lines: unique line intersection.
    m = t.a - s.a
    nn = n.dot(n)
    t1 = m.cross(w).dot(n) / nn
    t2 = m.cross(u).dot(n) / nn
    if t1 < 0 or t1 > 1 or t2 < 0 or t2 > 1:
        return SegSegResult("disjoint")
    pt = s.a + u.scale(t1)
    if 0 < t1 < 1 and 0 < t2 < 1:
        return SegSegResult("interior-cross", point=pt)
    return SegSegResult("endpoint-touch", point=pt)


# ---------------------------------------------------------------------------
# Segment / triangle classification
# ---------------------------------------------------------------------------

# Triangle features: ('interior',) | ('edge', k) | ('vertex', k).
Feature = Tuple


@dataclass(frozen=True)
class Contact:
    """One connected component of a segment/triangle intersection.

    ``kind`` is 'point' or 'segment'.  For points, ``feature`` locates the
    point on the triangle.  For segments, ``feature`` is ('edge', k) when the
    overlap lies inside edge k's line, or ('chord',) when its relative
    interior crosses the open triangle.
    """

    kind: str
    feature: Feature
    point: Optional[ExactPoint] = None
    seg: Optional[Tuple[ExactPoint, ExactPoint]] = None

    def witness_point(self) -> ExactPoint:
        if self.kind == "point":
            return self.point
        a, b = self.seg
        return a + (b - a).scale(Fraction(1, 2))


def _locate_in_plane(pt: ExactPoint, tri: Triangle) -> Optional[Feature]:
    """Locate a point known to lie in the triangle's plane.

    Returns ('interior',), ('edge', k), ('vertex', k), or None if outside.
    """
    n = tri.normal
    v = tri.vertices
    sides = []
    for k in range(3):
        e = v[(k + 1) % 3] - v[k]
        sides.append(sign(e.cross(pt - v[k]).dot(n)))
    if any(s < 0 for s in sides):
        return None
    zeros = [k for k in range(3) if sides[k] == 0]
    if not zeros:
        return ("interior",)
    if len(zeros) == 1:
        return ("edge", zeros[0])
    # Two zero sides meet at the shared vertex.
    k0, k1 = zeros
    if (k0, k1) == (0, 1):
        return ("vertex", 1)
    if (k0, k1) == (1, 2):
        return ("vertex", 2)
    return ("vertex", 0)


def _coplanar_segment_triangle(s: Segment, tri: Triangle) -> list:
    """Contacts of a segment lying in the triangle's plane (exact clip)."""
    n = tri.normal
    v = tri.vertices
    u = s.b - s.a
    lo, hi = Fraction(0), Fraction(1)
    for k in range(3):
        e = v[(k + 1) % 3] - v[k]
        h0 = e.cross(s.a - v[k]).dot(n)
        h1 = e.cross(s.b - v[k]).dot(n)
        if h0 < 0 and h1 < 0:
            return []
        if h0 >= 0 and h1 >= 0:
            continue
        tstar = h0 / (h0 - h1)
        if h0 < 0:
            lo = max(lo, tstar)
        else:
            hi = min(hi, tstar)
        if lo > hi:
            return []
    if lo > hi:
        return []
    if lo == hi:
        pt = s.point_at(lo)
        feat = _locate_in_plane(pt, tri)
        assert feat is not None
        return [Contact("point", feat, point=pt)]
    p1 = s.point_at(lo)
    p2 = s.point_at(hi)
    # Collinear with an edge line?
    for k in range(3):
        e = v[(k + 1) % 3] - v[k]
        if u.cross(e).is_zero() and collinear(v[k], v[(k + 1) % 3], p1):
            return [Contact("segment", ("edge", k), seg=(p1, p2))]
    return [Contact("segment", ("chord",), seg=(p1, p2))]


def segment_triangle_contacts(s: Segment, tri: Triangle) -> list:
    """All contacts of a segment with a closed triangle, exactly.

    The result is a list of :class:`Contact`; it is empty iff the segment and
    the triangle are disjoint.
    """
    da = orient3d(tri.p, tri.q, tri.r, s.a)
    db = orient3d(tri.p, tri.q, tri.r, s.b)
    if da == 0 and db == 0:
        return _coplanar_segment_triangle(s, tri)
    if da == 0 or db == 0:
        pt = s.a if da == 0 else s.b
        feat = _locate_in_plane(pt, tri)
        return [Contact("point", feat, point=pt)] if feat is not None else []
    if da == db:
        return []
    # Proper plane crossing.
    e1 = orient3d(s.a, s.b, tri.p, tri.q)
    e2 = orient3d(s.a, s.b, tri.q, tri.r)
    e3 = orient3d(s.a, s.b, tri.r, tri.p)
    want = -da
    for e in (e1, e2, e3):
        if e != 0 and e != want:
            return []
    DA = orient3d_det(tri.p, tri.q, tri.r, s.a)
    DB = orient3d_det(tri.p, tri.q, tri.r, s.b)
    pt = s.point_at(DA / (DA - DB))
    zeros = [k for k, e in enumerate((e1, e2, e3)) if e == 0]
    if not zeros:
        feat: Feature = ("interior",)
    elif len(zeros) == 1:
        feat = ("edge", zeros[0])
    else:
        k0, k1 = zeros
        if (k0, k1) == (0, 1):
            feat = ("vertex", 1)
        elif (k0, k1) == (1, 2):
            feat = ("vertex", 2)
        else:
            feat = ("vertex", 0)
    return [Contact("point", feat, point=pt)]


@dataclass(frozen=True)
class SegTriResult:
    kind: str  # 'disjoint' | 'boundary-touch' | 'interior-cross' | 'coplanar-overlap'
    contacts: tuple = ()

    def witness_point(self) -> Optional[ExactPoint]:
        return self.contacts[0].witness_point() if self.contacts else None


def segment_triangle_classify(s: Segment, tri: Triangle) -> SegTriResult:
    """Exact classification of a segment against a closed triangle.

    interior-cross: the intersection is a single point in the open triangle
    (a transversal crossing, or a segment endpoint resting on the open
    triangle).  boundary-touch: the intersection is nonempty but contained in
    the triangle's boundary.  coplanar-overlap: the segment lies in the
    triangle's plane and the overlap has positive length through the open
    triangle.
    """
    contacts = segment_triangle_contacts(s, tri)
    if not contacts:
        return SegTriResult("disjoint")
    c = contacts[0]
    if c.kind == "segment":
        if c.feature == ("chord",):
            return SegTriResult("coplanar-overlap", tuple(contacts))
        return SegTriResult("boundary-touch", tuple(contacts))
    if c.feature == ("interior",):
        return SegTriResult("interior-cross", tuple(contacts))
    return SegTriResult("boundary-touch", tuple(contacts))


# ---------------------------------------------------------------------------
# Triangle / triangle intersection
# ---------------------------------------------------------------------------

def _dedupe_points(points):
    out = []
    for p in points:
        if all(p != q for q in out):
            out.append(p)
    return out


def _clip_polygon_in_plane(poly, tri: Triangle):
    """Clip a convex in-plane polygon by the triangle's three half-planes."""
    n = tri.normal
    v = tri.vertices
    pts = list(poly)
    for k in range(3):
        if not pts:
            return []
        e = v[(k + 1) % 3] - v[k]
        keep = []
        hs = [e.cross(p - v[k]).dot(n) for p in pts]
        m = len(pts)
        for i in range(m):
            j = (i + 1) % m
            hi_, hj = hs[i], hs[j]
            if hi_ >= 0:
                keep.append(pts[i])
            if (hi_ > 0 and hj < 0) or (hi_ < 0 and hj > 0):
                t = hi_ / (hi_ - hj)
                keep.append(pts[i] + (pts[j] - pts[i]).scale(t))
        pts = _dedupe_points(keep)
    return pts


def triangle_triangle_intersection(t1: Triangle, t2: Triangle):
    """Exact intersection of two closed triangles.

    Returns one of::

        ("empty",)
        ("point", p)
        ("segment", p, q)
        ("polygon", [p0, p1, ...])   # positive-area coplanar overlap
    """
    s2 = [orient3d(t1.p, t1.q, t1.r, x) for x in t2.vertices]
    if all(s > 0 for s in s2) or all(s < 0 for s in s2):
        return ("empty",)
    if s2 == [0, 0, 0]:
        # Coplanar: clip t2 against t1 within the shared plane.
        pts = _clip_polygon_in_plane(list(t2.vertices), t1)
        pts = _dedupe_points(pts)
        if not pts:
            return ("empty",)
        if len(pts) == 1:
            return ("point", pts[0])
        if len(pts) == 2:
            return ("segment", pts[0], pts[1])
        # Check for positive area (points might be collinear after clipping).
        base = pts[0]
        for i in range(1, len(pts) - 1):
            if not collinear(base, pts[i], pts[i + 1]):
                return ("polygon", pts)
        return ("segment", pts[0], pts[-1])
    # Section of t2 by t1's plane: a point or a segment.
    verts = list(t2.vertices)
    section = [verts[k] for k in range(3) if s2[k] == 0]
    for k in range(3):
        a, b = verts[k], verts[(k + 1) % 3]
        sa, sb = s2[k], s2[(k + 1) % 3]
        if sa * sb < 0:
            DA = orient3d_det(t1.p, t1.q, t1.r, a)
            DB = orient3d_det(t1.p, t1.q, t1.r, b)
            section.append(a + (b - a).scale(DA / (DA - DB)))
    section = _dedupe_points(section)
    if not section:
        return ("empty",)
    if len(section) == 1:
        feat = _locate_in_plane(section[0], t1)
        return ("point", section[0]) if feat is not None else ("empty",)
    # The section is a segment in t1's plane; clip it by t1.
    seg = Segment(section[0], section[1])
    contacts = _coplanar_segment_triangle(seg, t1)
    if not contacts:
        return ("empty",)
    c = contacts[0]
    if c.kind == "point":
        return ("point", c.point)
    return ("segment", c.seg[0], c.seg[1])
