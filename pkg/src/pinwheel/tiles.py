"""Placed triangle tiles and the exact planar predicates on them.

The two prototiles are right triangles with legs 1 and 2 and hypotenuse
sqrt5.  The MINUS reference triangle has vertices (0,0), (2,0), (2,1) in the
plane; the PLUS reference is its mirror image under complex conjugation.
Vertices are always listed as (right-angle vertex, short-leg endpoint,
long-leg endpoint).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .motions import RigidMotion
from .scalars import ExactScalar, sign_of


class Chirality(enum.Enum):
    MINUS = -1
    PLUS = 1

    @property
    def mirrored(self) -> "Chirality":
        return Chirality.PLUS if self is Chirality.MINUS else Chirality.MINUS


# Reference vertices (right angle, short-leg end, long-leg end).
REFERENCE_VERTICES = {
    Chirality.MINUS: (ExactScalar(2, 0), ExactScalar(2, 1), ExactScalar(0, 0)),
    Chirality.PLUS: (ExactScalar(2, 0), ExactScalar(2, -1), ExactScalar(0, 0)),
}

# Marked interior point of each prototile: rational, off every symmetry axis.
REFERENCE_PUNCTURE = {
    Chirality.MINUS: ExactScalar(Fraction(3, 2), Fraction(1, 2)),
    Chirality.PLUS: ExactScalar(Fraction(3, 2), Fraction(-1, 2)),
}

# Motion taking a reference triangle to the canonical pose: right-angle
# vertex at the origin, long leg along +x.  It is the same for both
# chiralities (z -> -z + 2) and is an involution.
CANONICAL_POSE = RigidMotion(0, 2, ExactScalar(2, 0))


@dataclass(frozen=True)
class Tile:
    """A placed copy of a prototile: chirality plus a direct motion."""

    chirality: Chirality
    motion: RigidMotion

    def __post_init__(self):
        if self.motion.refl:
            raise ValueError("tiles carry direct motions only")

    @classmethod
    def reference(cls, chirality: Chirality = Chirality.MINUS) -> "Tile":
        return cls(chirality, RigidMotion.identity())

    @cached_property
    def vertices(self) -> tuple[ExactScalar, ExactScalar, ExactScalar]:
        g = self.motion
        return tuple(g.apply(v) for v in REFERENCE_VERTICES[self.chirality])

    @property
    def right_angle_vertex(self) -> ExactScalar:
        return self.vertices[0]

    @property
    def short_leg_end(self) -> ExactScalar:
        return self.vertices[1]

    @property
    def long_leg_end(self) -> ExactScalar:
        return self.vertices[2]

    @property
    def puncture(self) -> ExactScalar:
        return self.motion.apply(REFERENCE_PUNCTURE[self.chirality])

    def xy(self):
        """Vertices as (x, y) coordinate pairs for the exact predicates."""
        out = []
        for v in self.vertices:
            if v.is_gaussian():
                out.append((v.c1, v.c2))
            else:
                out.append((v.real, v.imag))
        return tuple(out)

    def transformed(self, g: RigidMotion) -> "Tile":
        return Tile(self.chirality, g.compose(self.motion))

    def mirrored(self) -> "Tile":
        return Tile(self.chirality.mirrored, self.motion.conjugated())

    def key(self) -> tuple:
        return (self.chirality.value, *self.motion.key())


# -- exact predicates on (x, y) coordinate pairs ---------------------------


def orientation(p, q, r) -> int:
    """Sign of the cross product (q - p) x (r - p): +1 CCW, -1 CW, 0 collinear."""
    return sign_of((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def on_segment(p, a, b) -> bool:
    """True when p lies on the closed segment [a, b]."""
    if orientation(a, b, p) != 0:
        return False
    lo_x, hi_x = (a[0], b[0]) if sign_of(b[0] - a[0]) >= 0 else (b[0], a[0])
    lo_y, hi_y = (a[1], b[1]) if sign_of(b[1] - a[1]) >= 0 else (b[1], a[1])
    return (sign_of(p[0] - lo_x) >= 0 and sign_of(hi_x - p[0]) >= 0
            and sign_of(p[1] - lo_y) >= 0 and sign_of(hi_y - p[1]) >= 0)


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments [a,b] and [c,d] share at least one point."""
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return (on_segment(c, a, b) or on_segment(d, a, b)
            or on_segment(a, c, d) or on_segment(b, c, d))


def segments_cross_properly(a, b, c, d) -> bool:
    """Open segments meet in a single non-collinear interior point."""
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def point_in_triangle(p, tri, strict: bool = False) -> bool:
    s1 = orientation(tri[0], tri[1], p)
    s2 = orientation(tri[1], tri[2], p)
    s3 = orientation(tri[2], tri[0], p)
    if strict:
        return s1 == s2 == s3 and s1 != 0
    has_pos = s1 > 0 or s2 > 0 or s3 > 0
    has_neg = s1 < 0 or s2 < 0 or s3 < 0
    return not (has_pos and has_neg)


def triangle_area_twice(tri):
    """Twice the unsigned area."""
    v = ((tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1])
         - (tri[1][1] - tri[0][1]) * (tri[2][0] - tri[0][0]))
    return v if sign_of(v) >= 0 else -v


def _centroid_scaled(tri):
    # Centroid times 3, avoiding division; only used against scaled triangles.
    return (tri[0][0] + tri[1][0] + tri[2][0], tri[0][1] + tri[1][1] + tri[2][1])


def _scale3(tri):
    return tuple((3 * v[0], 3 * v[1]) for v in tri)


def interiors_disjoint_xy(t1, t2) -> bool:
    for p in t1:
        if point_in_triangle(p, t2, strict=True):
            return False
    for p in t2:
        if point_in_triangle(p, t1, strict=True):
            return False
    edges1 = [(t1[i], t1[(i + 1) % 3]) for i in range(3)]
    edges2 = [(t2[i], t2[(i + 1) % 3]) for i in range(3)]
    for a, b in edges1:
        for c, d in edges2:
            if segments_cross_properly(a, b, c, d):
                return False
    # Containment with all vertices on edges: test centroids (scaled by 3).
    if point_in_triangle(_centroid_scaled(t1), _scale3(t2), strict=True):
        return False
    if point_in_triangle(_centroid_scaled(t2), _scale3(t1), strict=True):
        return False
    return True


def triangles_touch_xy(t1, t2) -> bool:
    """Closed triangles share at least one point."""
    for p in t1:
        if point_in_triangle(p, t2):
            return True
    for p in t2:
        if point_in_triangle(p, t1):
            return True
    edges1 = [(t1[i], t1[(i + 1) % 3]) for i in range(3)]
    edges2 = [(t2[i], t2[(i + 1) % 3]) for i in range(3)]
    return any(segments_intersect(a, b, c, d)
               for a, b in edges1 for c, d in edges2)


def segments_overlap_positively(a, b, c, d) -> bool:
    """Collinear closed segments sharing a subsegment of positive length."""
    if orientation(a, b, c) != 0 or orientation(a, b, d) != 0:
        return False
    dx, dy = b[0] - a[0], b[1] - a[1]

    def param(p):
        return (p[0] - a[0]) * dx + (p[1] - a[1]) * dy

    lo1, hi1 = 0, param(b)
    p2, q2 = param(c), param(d)
    lo2, hi2 = (p2, q2) if sign_of(q2 - p2) >= 0 else (q2, p2)
    lo = lo1 if sign_of(lo2 - lo1) <= 0 else lo2
    hi = hi1 if sign_of(hi2 - hi1) <= 0 else hi2
    return sign_of(hi - lo) > 0


def triangles_share_edge_xy(t1, t2) -> bool:
    edges1 = [(t1[i], t1[(i + 1) % 3]) for i in range(3)]
    edges2 = [(t2[i], t2[(i + 1) % 3]) for i in range(3)]
    return any(segments_overlap_positively(a, b, c, d)
               for a, b in edges1 for c, d in edges2)


# -- tile-level wrappers ----------------------------------------------------


def tile_orientation_sign(tile_or_vertices) -> int:
    v = tile_or_vertices.xy() if isinstance(tile_or_vertices, Tile) else tile_or_vertices
    return orientation(v[0], v[1], v[2])


def chirality_of_vertices(right_angle, short_end, long_end) -> Chirality:
    """Sign of (right-angle -> long leg) x (right-angle -> short leg)."""
    p = (right_angle.real, right_angle.imag)
    l = (long_end.real, long_end.imag)
    s = (short_end.real, short_end.imag)
    sgn = orientation(p, l, s)
    if sgn == 0:
        raise ValueError("degenerate vertex triple")
    return Chirality.MINUS if sgn < 0 else Chirality.PLUS


def interiors_disjoint(t1: Tile, t2: Tile) -> bool:
    return interiors_disjoint_xy(t1.xy(), t2.xy())


def tiles_touch(t1: Tile, t2: Tile) -> bool:
    return triangles_touch_xy(t1.xy(), t2.xy())


def point_in_tile(p: ExactScalar, tile: Tile, strict: bool = False) -> bool:
    return point_in_triangle((p.real, p.imag), tile.xy(), strict=strict)


def congruence_motion(t1: Tile, t2: Tile) -> RigidMotion | None:
    """The unique direct isometry with g(t1) = t2, or None across chiralities."""
    if t1.chirality is not t2.chirality:
        return None
    return t2.motion.compose(t1.motion.inverse())
