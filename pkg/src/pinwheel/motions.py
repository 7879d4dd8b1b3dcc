"""Direct plane isometries with symbolic rotation exponents.

A rotation is stored as a pair of exponents (a, b): `a` counts rotations by
alpha = arctan(1/2) (multiplication by (2+i)/sqrt5) and `b` counts quarter
turns (multiplication by i).  Since alpha is an irrational multiple of pi the
pair (a, b mod 4) determines the rotation uniquely, so motions compose by
adding exponents and are never recovered from raw units.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .scalars import ExactScalar


@lru_cache(maxsize=None)
def rotation_unit(a: int, b: int) -> ExactScalar:
    """The unit ((2+i)/sqrt5)**a * i**b as an exact scalar."""
    base = ExactScalar(Fraction(2, 5), Fraction(1, 5), 0, 0) * ExactScalar(0, 0, 1, 0)
    return (base ** a) * (ExactScalar(0, 1) ** (b % 4))


@dataclass(frozen=True)
class RigidMotion:
    """Direct isometry p -> u*p + t with u = ((2+i)/sqrt5)**a * i**b.

    `refl` conjugates the argument before rotating; it exists only to define
    the mirror prototile and is rejected by composition.
    """

    a: int
    b: int
    t: ExactScalar
    refl: bool = False

    def __post_init__(self):
        object.__setattr__(self, "b", self.b % 4)
        if not isinstance(self.t, ExactScalar):
            object.__setattr__(self, "t", ExactScalar(self.t))

    @classmethod
    def identity(cls) -> "RigidMotion":
        return cls(0, 0, ExactScalar(0))

    @classmethod
    def translation(cls, t: ExactScalar) -> "RigidMotion":
        return cls(0, 0, t)

    @property
    def unit(self) -> ExactScalar:
        return rotation_unit(self.a, self.b)

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0 and self.t.is_zero() and not self.refl

    def apply(self, p: ExactScalar) -> ExactScalar:
        if self.refl:
            p = p.conjugate()
        return self.unit * p + self.t

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        """The motion p -> self(other(p))."""
        if self.refl or other.refl:
            raise ValueError("reflections do not participate in composition")
        return RigidMotion(self.a + other.a, self.b + other.b,
                           self.unit * other.t + self.t)

    def inverse(self) -> "RigidMotion":
        if self.refl:
            raise ValueError("reflections do not participate in composition")
        inv_unit = rotation_unit(-self.a, -self.b)
        return RigidMotion(-self.a, -self.b, -(inv_unit * self.t))

    def conjugated(self) -> "RigidMotion":
        """The mirror-image motion conj . self . conj (still direct)."""
        if self.refl:
            raise ValueError("reflections do not participate in composition")
        return RigidMotion(-self.a, -self.b, self.t.conjugate())

    def key(self) -> tuple:
        return (self.a, self.b, *self.t.key(), self.refl)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "t": list(self.t.serialize()),
                "refl": self.refl}

    @classmethod
    def from_dict(cls, d: dict) -> "RigidMotion":
        return cls(int(d["a"]), int(d["b"]), ExactScalar.parse(d["t"]),
                   bool(d.get("refl", False)))


@lru_cache(maxsize=None)
def _sim_coefficient(p5: int, a: int, b: int) -> ExactScalar:
    return (ExactScalar(0, 0, 1, 0) ** p5) * rotation_unit(a, b)


@dataclass(frozen=True)
class Similarity:
    """Direct similarity p -> c*p + t with c = sqrt5**p5 * ((2+i)/sqrt5)**a * i**b.

    Internal carrier for substitution bookkeeping: supertile construction
    composes these exactly and only ever reads off unit-scale results.
    """

    p5: int
    a: int
    b: int
    t: ExactScalar

    def __post_init__(self):
        object.__setattr__(self, "b", self.b % 4)

    @property
    def coefficient(self) -> ExactScalar:
        return _sim_coefficient(self.p5, self.a, self.b)

    def apply(self, p: ExactScalar) -> ExactScalar:
        return self.coefficient * p + self.t

    def compose(self, other: "Similarity") -> "Similarity":
        return Similarity(self.p5 + other.p5, self.a + other.a, self.b + other.b,
                          self.coefficient * other.t + self.t)

    def inverse(self) -> "Similarity":
        c = _sim_coefficient(-self.p5, -self.a, -self.b)
        return Similarity(-self.p5, -self.a, -self.b, -(c * self.t))

    def conjugated(self) -> "Similarity":
        return Similarity(self.p5, -self.a, -self.b, self.t.conjugate())

    def as_motion(self) -> RigidMotion:
        if self.p5 != 0:
            raise ValueError(f"similarity with scale exponent {self.p5} is not rigid")
        return RigidMotion(self.a, self.b, self.t)

    @classmethod
    def from_motion(cls, g: RigidMotion) -> "Similarity":
        if g.refl:
            raise ValueError("reflections do not participate in composition")
        return cls(0, g.a, g.b, g.t)
