"""The pinwheel inflate-and-subdivide rule and supertile construction.

The MINUS reference triangle (0,0), (2,0), (2,1) sits as the central piece of
its own next-level triangle with vertices (-2,1), (2,-1), (3,1), which is the
image of the reference under the similarity z -> (2-i)z + (-2+i).  Iterating
that similarity and re-subdividing yields arbitrarily large triangles around
the seed whose subdivisions agree, which is the fixed-point construction used
throughout: supertile(n) contains supertile(n-1) tile for tile as the
descendants of child 0.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .errors import LimitExceededError, SelfCheckError
from .motions import RigidMotion, Similarity
from .scalars import ExactScalar
from .tiles import (
    Chirality,
    Tile,
    chirality_of_vertices,
    interiors_disjoint_xy,
    point_in_triangle,
    triangle_area_twice,
    triangles_touch_xy,
)

DEFAULT_MAX_TILES = 390_625  # 5**8
MAX_TILES_ENV = "PINWHEEL_MAX_TILES"

# Multiplier of the inflation similarity: modulus sqrt5, argument -alpha.
INFLATION_MULTIPLIER = ExactScalar(2, -1)

# Similarity carrying the MINUS reference onto its enclosing next-level
# triangle, and its mirror for PLUS.
EXPANSION = {
    Chirality.MINUS: Similarity(1, -1, 0, ExactScalar(-2, 1)),
    Chirality.PLUS: Similarity(1, 1, 0, ExactScalar(-2, -1)),
}

# The five pieces subdividing the inflated MINUS reference, listed as
# (chirality, motion) with the central piece first.  The PLUS rule is the
# mirror image.
_MINUS_PIECES = (
    (Chirality.MINUS, RigidMotion.identity()),
    (Chirality.MINUS, RigidMotion(0, 2, ExactScalar(2, 1))),
    (Chirality.PLUS, RigidMotion(0, 0, ExactScalar(-2, 1))),
    (Chirality.PLUS, RigidMotion.identity()),
    (Chirality.PLUS, RigidMotion(0, 1, ExactScalar(2, -1))),
)


class SubdivisionRule:
    """Five-piece decomposition of the inflated prototiles.

    `pieces[MINUS]` places five unit tiles inside the inflated MINUS
    reference; `pieces[PLUS]` is its mirror image.  The decomposition is
    validated on first use by an exact cover check (areas, pairwise interior
    disjointness, containment) so the hard-coded placement cannot drift.
    """

    def __init__(self):
        self.inflation = INFLATION_MULTIPLIER
        self.pieces = {
            Chirality.MINUS: _MINUS_PIECES,
            Chirality.PLUS: tuple((c.mirrored, g.conjugated())
                                  for c, g in _MINUS_PIECES),
        }
        self._self_check()

    def parent_triangle(self, chirality: Chirality):
        """Vertices of the inflated reference of the given handedness."""
        ref = Tile.reference(chirality)
        exp = EXPANSION[chirality]
        return tuple(exp.apply(v) for v in ref.vertices)

    def piece_tiles(self, chirality: Chirality) -> tuple[Tile, ...]:
        return tuple(Tile(c, g) for c, g in self.pieces[chirality])

    def chirality_census(self, chirality: Chirality) -> dict[Chirality, int]:
        census = {Chirality.MINUS: 0, Chirality.PLUS: 0}
        for c, _ in self.pieces[chirality]:
            census[c] += 1
        return census

    def _self_check(self) -> None:
        for chirality in (Chirality.MINUS, Chirality.PLUS):
            tiles = self.piece_tiles(chirality)
            parent = self.parent_triangle(chirality)
            parent_xy = tuple((v.real, v.imag) for v in parent)
            xys = [t.xy() for t in tiles]
            if triangle_area_twice(parent_xy) != 10:
                raise SelfCheckError("inflated reference does not have area 5")
            for xy in xys:
                if triangle_area_twice(xy) != 2:
                    raise SelfCheckError("subdivision piece does not have area 1")
                for v in xy:
                    if not point_in_triangle(v, parent_xy):
                        raise SelfCheckError("subdivision piece leaves the parent")
            for i in range(5):
                for j in range(i + 1, 5):
                    if not interiors_disjoint_xy(xys[i], xys[j]):
                        raise SelfCheckError("subdivision pieces overlap")
            for t in tiles:
                if chirality_of_vertices(*t.vertices) is not t.chirality:
                    raise SelfCheckError("subdivision piece has wrong handedness")
            census = self.chirality_census(chirality)
            if census[chirality] != 2 or census[chirality.mirrored] != 3:
                raise SelfCheckError("subdivision chirality census is off")


@lru_cache(maxsize=1)
def subdivision_rule() -> SubdivisionRule:
    return SubdivisionRule()


def inflate(tile: Tile) -> list[Tile]:
    """The five tiles subdividing the inflated image of `tile`.

    The union is tile.motion applied to the inflated reference, i.e. the
    sqrt5-larger triangle enclosing `tile` with `tile` as its central piece
    (inflate(t)[0] == t).
    """
    rule = subdivision_rule()
    g = tile.motion
    return [Tile(c, g.compose(h)) for c, h in rule.pieces[tile.chirality]]


# -- compact supertile representation ---------------------------------------
#
# Tiles are stored as 5-tuples (chirality sign, a, b, tx, ty).  Coordinates
# are Gaussian rationals whose denominators are powers of five: tiles rotated
# by multiples of 2*alpha cannot have integer vertices, so denominators of
# exactly that form are the sharp invariant.  All heavy geometry runs on
# plain Fractions.


@lru_cache(maxsize=None)
def unit_ratio(a: int, b: int) -> tuple[int, int, int]:
    """((2+i)/sqrt5)**a * i**b as (p, q, den) with value (p+qi)/den.

    Defined for even a, which is the only case arising inside tilings.
    """
    if a % 2:
        raise ValueError("odd alpha exponent has no Gaussian representation")
    m = a // 2
    p, q = 1, 0
    base = (3, 4) if m >= 0 else (3, -4)
    for _ in range(abs(m)):
        p, q = p * base[0] - q * base[1], p * base[1] + q * base[0]
    for _ in range(b % 4):
        p, q = -q, p
    return p, q, 5 ** abs(m)


_REF_XY = {
    -1: ((2, 0), (2, 1), (0, 0)),
    1: ((2, 0), (2, -1), (0, 0)),
}

# Subdivision steps in similarity coordinates: child = parent . step, where
# step = expansion^-1 . piece.  Entries are (child chirality sign, da, db,
# (tx, ty)) with translations over denominator 5 at worst.
_STEPS = {
    -1: (
        (-1, 1, 0, (Fraction(1), Fraction(0))),
        (-1, 1, 2, (Fraction(8, 5), Fraction(4, 5))),
        (1, 1, 0, (Fraction(0), Fraction(0))),
        (1, 1, 0, (Fraction(1), Fraction(0))),
        (1, 1, 1, (Fraction(2), Fraction(0))),
    ),
    1: (
        (1, -1, 0, (Fraction(1), Fraction(0))),
        (1, -1, 2, (Fraction(8, 5), Fraction(-4, 5))),
        (-1, -1, 0, (Fraction(0), Fraction(0))),
        (-1, -1, 0, (Fraction(1), Fraction(0))),
        (-1, -1, 3, (Fraction(2), Fraction(0))),
    ),
}


@lru_cache(maxsize=None)
def _coef_pair(p5: int, a: int, b: int) -> tuple[Fraction, Fraction]:
    """Coefficient sqrt5**p5 * rot**a * i**b as a Gaussian pair (needs p5-a even)."""
    if (p5 - a) % 2:
        raise ValueError("coefficient leaves the Gaussian rationals")
    m = (p5 - a) // 2
    p, q = 1, 0
    base = (2, 1) if a >= 0 else (2, -1)
    for _ in range(abs(a)):
        p, q = p * base[0] - q * base[1], p * base[1] + q * base[0]
    for _ in range(b % 4):
        p, q = -q, p
    scale = Fraction(5) ** (m - abs(a) if a < 0 else m)
    return p * scale, q * scale


@lru_cache(maxsize=1)
def _verify_steps() -> bool:
    """Recompute the step tables from the rule and expansion similarities."""
    rule = subdivision_rule()
    for sign, chirality in ((-1, Chirality.MINUS), (1, Chirality.PLUS)):
        inv = EXPANSION[chirality].inverse()
        for step, (pc, pg) in zip(_STEPS[sign], rule.pieces[chirality]):
            sim = inv.compose(Similarity.from_motion(pg))
            tx, ty = sim.t.as_fraction_pair()
            got = (1 if pc is Chirality.PLUS else -1, sim.a, sim.b, (tx, ty))
            if step != got or sim.p5 != -1:
                raise SelfCheckError("subdivision step table disagrees with the rule")
    return True


class Supertile:
    """Level-n supertile: 5**n unit tiles plus their generation tree.

    Tile i at level n has parent cell i // 5 at level n-1 and position i % 5
    within it; supertile(n-1) is exactly the block of descendants of cell 0.
    """

    def __init__(self, level: int, records: list[tuple[int, int, int, int, int]],
                 corner_triangle):
        self.level = level
        self.records = records
        self.corner_triangle = corner_triangle
        self._adjacency = None
        self._boundary = None
        self._depth = None
        self._lookup = None
        self._vertices = None

    def __len__(self) -> int:
        return len(self.records)

    def tile(self, i: int) -> Tile:
        s, a, b, tx, ty = self.records[i]
        chirality = Chirality.MINUS if s < 0 else Chirality.PLUS
        return Tile(chirality, RigidMotion(a, b, ExactScalar(tx, ty)))

    def tiles(self):
        return [self.tile(i) for i in range(len(self.records))]

    def path(self, i: int) -> tuple[int, ...]:
        """Positions from the root cell down to tile i."""
        digits = []
        for _ in range(self.level):
            digits.append(i % 5)
            i //= 5
        return tuple(reversed(digits))

    def parent_of(self, i: int) -> tuple[int, int]:
        """(parent cell index at level-1, position 0..4) of tile i."""
        if not 0 <= i < len(self.records):
            raise IndexError(f"tile index {i} out of range")
        if self.level == 0:
            raise ValueError("the seed supertile has no parent cells")
        return i // 5, i % 5

    def tile_vertices(self, i: int):
        if self._vertices is None:
            self._vertices = [None] * len(self.records)
        v = self._vertices[i]
        if v is None:
            s, a, b, tx, ty = self.records[i]
            p, q, den = unit_ratio(a, b)
            v = tuple((Fraction(p * rx - q * ry, den) + tx,
                       Fraction(p * ry + q * rx, den) + ty)
                      for rx, ry in _REF_XY[s])
            self._vertices[i] = v
        return v

    def lookup(self) -> dict:
        if self._lookup is None:
            self._lookup = {rec: i for i, rec in enumerate(self.records)}
        return self._lookup

    # -- geometry over the integer grid ------------------------------------

    def _buckets(self):
        # Coarse candidate index only; every decision below it is exact.
        buckets: dict[tuple[int, int], list[int]] = {}
        for i in range(len(self.records)):
            v = self.tile_vertices(i)
            xs = [float(p[0]) for p in v]
            ys = [float(p[1]) for p in v]
            for cx in range(int(min(xs) - 0.01) - 1, int(max(xs) + 0.01) + 1):
                for cy in range(int(min(ys) - 0.01) - 1, int(max(ys) + 0.01) + 1):
                    buckets.setdefault((cx, cy), []).append(i)
        return buckets

    def adjacency(self) -> list[list[int]]:
        """Closed-intersection neighbours of every tile (edge or vertex contact)."""
        if self._adjacency is not None:
            return self._adjacency
        n = len(self.records)
        neighbours: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for ids in self._buckets().values():
            for ii in range(len(ids)):
                for jj in range(ii + 1, len(ids)):
                    i, j = ids[ii], ids[jj]
                    if i > j:
                        i, j = j, i
                    if (i, j) in seen:
                        continue
                    seen.add((i, j))
                    if triangles_touch_xy(self.tile_vertices(i), self.tile_vertices(j)):
                        neighbours[i].add(j)
                        neighbours[j].add(i)
        self._adjacency = [sorted(s) for s in neighbours]
        return self._adjacency

    def boundary_mask(self) -> list[bool]:
        """Tiles touching the boundary of the supertile triangle."""
        if self._boundary is not None:
            return self._boundary
        corners = self.corner_triangle
        edges = [(corners[k], corners[(k + 1) % 3]) for k in range(3)]
        from .tiles import on_segment
        mask = []
        for i in range(len(self.records)):
            mask.append(any(on_segment(p, a, b)
                            for p in self.tile_vertices(i) for a, b in edges))
        self._boundary = mask
        return mask

    def interior_depth(self) -> list[int]:
        """Ring distance to the boundary-touching tiles (0 = touching)."""
        if self._depth is not None:
            return self._depth
        adj = self.adjacency()
        mask = self.boundary_mask()
        n = len(self.records)
        depth = [0 if mask[i] else -1 for i in range(n)]
        frontier = [i for i in range(n) if mask[i]]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for i in frontier:
                for j in adj[i]:
                    if depth[j] < 0:
                        depth[j] = d
                        nxt.append(j)
            frontier = nxt
        self._depth = [x if x >= 0 else n for x in depth]
        return self._depth

    def to_json_obj(self) -> dict:
        return {
            "level": self.level,
            "tiles": [
                {"chirality": "MINUS" if s < 0 else "PLUS",
                 "motion": {"a": a, "b": b,
                            "t": [f"{tx}", f"{ty}", "0", "0"], "refl": False}}
                for s, a, b, tx, ty in self.records
            ],
        }


def max_tile_budget() -> int:
    raw = os.environ.get(MAX_TILES_ENV)
    if raw is None:
        return DEFAULT_MAX_TILES
    try:
        value = int(raw)
    except ValueError as exc:
        raise LimitExceededError(f"invalid {MAX_TILES_ENV}={raw!r}") from exc
    if value <= 0:
        raise LimitExceededError(f"{MAX_TILES_ENV} must be positive")
    return value


def expand_cells(cells, levels: int):
    """Subdivide similarity-placed cells `levels` times down to smaller cells.

    Each cell is (chirality sign, p5, a, b, tx, ty) with Fraction
    translations; returns the list in depth-first order, so descendants of
    input cell k occupy the contiguous block [k * 5**levels, (k+1) * 5**levels).
    """
    current = list(cells)
    for _ in range(levels):
        nxt = []
        for s, p5, a, b, tx, ty in current:
            cre, cim = _coef_pair(p5, a, b)
            for cs, da, db, (sx, sy) in _STEPS[s]:
                ntx = cre * sx - cim * sy + tx
                nty = cre * sy + cim * sx + ty
                nxt.append((cs, p5 - 1, a + da, (b + db) % 4, ntx, nty))
        current = nxt
    return current


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise SelfCheckError("expected an integer translation")
    return x.numerator


def root_cell(n: int) -> tuple[int, int, int, int, Fraction, Fraction]:
    """The level-n triangle around the seed, as a similarity-placed cell."""
    tx, ty = Fraction(0), Fraction(0)
    for _ in range(n):
        tx, ty = 2 * tx + ty - 2, -tx + 2 * ty + 1  # z -> (2-i) z + (-2+i)
    return (-1, n, -n, 0, tx, ty)


def supertile(n: int, max_tiles: int | None = None) -> Supertile:
    """The level-n supertile around the seed tile.

    Level 0 is the seed (0,0), (2,0), (2,1) at the identity; each subsequent
    level re-subdivides the inflated triangle of the previous one, so
    supertile(n) contains supertile(n-1) as the descendants of cell 0.
    """
    if n < 0:
        raise ValueError("supertile level must be non-negative")
    _verify_steps()
    budget = max_tiles if max_tiles is not None else max_tile_budget()
    if 5 ** n > budget:
        raise LimitExceededError(
            f"supertile({n}) needs {5 ** n} tiles, over the budget of {budget}"
            f" (raise {MAX_TILES_ENV} to override)")
    root = root_cell(n)
    leaves = expand_cells([root], n)
    records = []
    for s, p5, a, b, tx, ty in leaves:
        if p5 != 0 or a % 2:
            raise SelfCheckError("supertile leaf is not a unit tile")
        records.append((s, a, b, _as_int(tx), _as_int(ty)))
    rs, rp5, ra, rb, rtx, rty = root
    cre, cim = _coef_pair(rp5, ra, rb)
    corner = []
    for rx, ry in _REF_XY[rs]:
        corner.append((_as_int(cre * rx - cim * ry + rtx),
                       _as_int(cre * ry + cim * rx + rty)))
    return Supertile(n, records, tuple(corner))
