"""Exact arithmetic in the number field Q(i, sqrt(5)).

Every coordinate in this package is an :class:`ExactScalar`, written on the
Q-basis {1, i, sqrt5, i*sqrt5}.  Because that set is a basis, representations
are unique and equality is componentwise rational equality; no floating point
ever enters a predicate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class RealQuad:
    """Real number a + b*sqrt(5) with exact sign and comparisons."""

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    def __repr__(self) -> str:
        return f"RealQuad({self.a!r}, {self.b!r})"

    def sign(self) -> int:
        a, b = self.a, self.b
        if not b:
            return _sgn(a)
        if not a:
            return _sgn(b)
        sa, sb = _sgn(a), _sgn(b)
        if sa == sb:
            return sa
        # Opposite signs: the term with the larger square magnitude wins.
        return sa * _sgn(a * a - 5 * b * b)

    def _coerce(self, other) -> "RealQuad":
        if isinstance(other, RealQuad):
            return other
        if isinstance(other, (int, Fraction)):
            return RealQuad(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to RealQuad")

    def __add__(self, other):
        o = self._coerce(other)
        return RealQuad(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return RealQuad(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RealQuad(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        return RealQuad(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (RealQuad, int, Fraction)):
            return (self - other).sign() == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 5.0 ** 0.5


_FR_ZERO = Fraction(0)
_FR_ONE = Fraction(1)


class ExactScalar:
    """Element c1 + c2*i + c3*sqrt5 + c4*i*sqrt5 of Q(i, sqrt5).

    A plane point x + iy is stored with x = c1 + c3*sqrt5 and
    y = c2 + c4*sqrt5.  All field operations are exact.
    """

    __slots__ = ("c1", "c2", "c3", "c4")

    def __init__(self, c1: RationalLike = 0, c2: RationalLike = 0,
                 c3: RationalLike = 0, c4: RationalLike = 0) -> None:
        self.c1 = c1 if isinstance(c1, Fraction) else Fraction(c1)
        self.c2 = c2 if isinstance(c2, Fraction) else Fraction(c2)
        self.c3 = c3 if isinstance(c3, Fraction) else Fraction(c3)
        self.c4 = c4 if isinstance(c4, Fraction) else Fraction(c4)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_xy(cls, x: RationalLike, y: RationalLike = 0) -> "ExactScalar":
        """Point x + iy with rational coordinates."""
        return cls(x, y)

    @classmethod
    def parse(cls, parts) -> "ExactScalar":
        """Inverse of :meth:`serialize`: four 'p/q' strings."""
        return cls(*(Fraction(p) for p in parts))

    # -- structure queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.c1 or self.c2 or self.c3 or self.c4)

    def is_gaussian(self) -> bool:
        """True when the sqrt5 components vanish."""
        return not (self.c3 or self.c4)

    def is_gaussian_integer(self) -> bool:
        return (self.is_gaussian() and self.c1.denominator == 1
                and self.c2.denominator == 1)

    @property
    def real(self) -> RealQuad:
        return RealQuad(self.c1, self.c3)

    @property
    def imag(self) -> RealQuad:
        return RealQuad(self.c2, self.c4)

    def as_fraction_pair(self) -> tuple[Fraction, Fraction]:
        if not self.is_gaussian():
            raise ValueError(f"{self!r} has irrational coordinates")
        return self.c1, self.c2

    def as_int_pair(self) -> tuple[int, int]:
        if not self.is_gaussian_integer():
            raise ValueError(f"{self!r} is not a Gaussian integer")
        return self.c1.numerator, self.c2.numerator

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, ExactScalar):
            return ExactScalar(self.c1 + other.c1, self.c2 + other.c2,
                               self.c3 + other.c3, self.c4 + other.c4)
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.c1 + other, self.c2, self.c3, self.c4)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ExactScalar(-self.c1, -self.c2, -self.c3, -self.c4)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactScalar(self.c1 * other, self.c2 * other,
                               self.c3 * other, self.c4 * other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        a1, a2, a3, a4 = self.c1, self.c2, self.c3, self.c4
        b1, b2, b3, b4 = other.c1, other.c2, other.c3, other.c4
        if not (a3 or a4 or b3 or b4):
            # Gaussian fast path; most tiling coordinates live here.
            return ExactScalar(a1 * b1 - a2 * b2, a1 * b2 + a2 * b1)
        return ExactScalar(
            a1 * b1 - a2 * b2 + 5 * (a3 * b3 - a4 * b4),
            a1 * b2 + a2 * b1 + 5 * (a3 * b4 + a4 * b3),
            a1 * b3 + a3 * b1 - a2 * b4 - a4 * b2,
            a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ExactScalar":
        """Complex conjugate: negates the i-components."""
        return ExactScalar(self.c1, -self.c2, self.c3, -self.c4)

    def sqrt5_conjugate(self) -> "ExactScalar":
        """Galois conjugate sending sqrt5 to -sqrt5."""
        return ExactScalar(self.c1, self.c2, -self.c3, -self.c4)

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt5)")
        p = self * self.conjugate()            # lands in Q(sqrt5)
        norm = (p * p.sqrt5_conjugate()).c1    # lands in Q, nonzero
        return self.conjugate() * p.sqrt5_conjugate() * (_FR_ONE / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (_FR_ONE / other)
        if isinstance(other, ExactScalar):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int) -> "ExactScalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = ExactScalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactScalar):
            return (self.c1 == other.c1 and self.c2 == other.c2
                    and self.c3 == other.c3 and self.c4 == other.c4)
        if isinstance(other, (int, Fraction)):
            return self.c1 == other and not (self.c2 or self.c3 or self.c4)
        return NotImplemented

    def __hash__(self):
        return hash((self.c1, self.c2, self.c3, self.c4))

    def key(self) -> tuple[int, ...]:
        """Canonical 8-integer fingerprint (numerator/denominator pairs)."""
        return (self.c1.numerator, self.c1.denominator,
                self.c2.numerator, self.c2.denominator,
                self.c3.numerator, self.c3.denominator,
                self.c4.numerator, self.c4.denominator)

    def serialize(self) -> tuple[str, str, str, str]:
        return (str(self.c1), str(self.c2), str(self.c3), str(self.c4))

    def __repr__(self) -> str:
        return f"ExactScalar({self.c1}, {self.c2}, {self.c3}, {self.c4})"

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
SQRT5 = ExactScalar(0, 0, 1)


def sign_of(x) -> int:
    """Exact sign of an int, Fraction or RealQuad quantity."""
    if isinstance(x, RealQuad):
        return x.sign()
    return _sgn(x)
