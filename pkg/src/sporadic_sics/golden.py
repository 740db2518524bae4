"""Exact arithmetic in the golden field Q(sqrt 5)."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Union[int, Fraction]


@total_ordering
class GoldenScalar:
    """An exact number ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    Instances are immutable and hashable. Integers and fractions are
    promoted automatically in arithmetic and comparisons.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x: "GoldenScalar | Rational") -> "GoldenScalar":
        if isinstance(x, GoldenScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to GoldenScalar")

    def __repr__(self) -> str:
        return f"GoldenScalar({self._a}, {self._b})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        return f"{self._a}{'+' if self._b >= 0 else '-'}{abs(self._b)}√5"

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __eq__(self, other: object) -> bool:
        try:
            o = GoldenScalar.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return self._a == o._a and self._b == o._b

    def __lt__(self, other: "GoldenScalar | Rational") -> bool:
        return (self - other).sign() < 0

    def sign(self) -> int:
        """Sign of the real number, decided exactly."""
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with 5 b^2
        if a * a > 5 * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __add__(self, other: "GoldenScalar | Rational") -> "GoldenScalar":
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenScalar(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __neg__(self) -> "GoldenScalar":
        return GoldenScalar(-self._a, -self._b)

    def __pos__(self) -> "GoldenScalar":
        return self

    def __sub__(self, other: "GoldenScalar | Rational") -> "GoldenScalar":
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenScalar(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: "GoldenScalar | Rational") -> "GoldenScalar":
        return GoldenScalar.coerce(other) - self

    def __mul__(self, other: "GoldenScalar | Rational") -> "GoldenScalar":
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenScalar(
            self._a * o._a + 5 * self._b * o._b,
            self._a * o._b + self._b * o._a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenScalar":
        """Galois conjugate ``a - b*sqrt(5)``."""
        return GoldenScalar(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``."""
        return self._a * self._a - 5 * self._b * self._b

    def inverse(self) -> "GoldenScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
        c = self.conjugate()
        return GoldenScalar(c._a / n, c._b / n)

    def __truediv__(self, other: "GoldenScalar | Rational") -> "GoldenScalar":
        try:
            o = GoldenScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: "GoldenScalar | Rational") -> "GoldenScalar":
        return GoldenScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "GoldenScalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = GoldenScalar(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self._b == 0

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * 5 ** 0.5

    def to_pair(self) -> list[str]:
        """Serialize as ``[a, b]`` with each rational written ``p`` or ``p/q``."""
        return [str(self._a), str(self._b)]

    @classmethod
    def from_pair(cls, pair: list[str]) -> "GoldenScalar":
        return cls(Fraction(pair[0]), Fraction(pair[1]))


PHI = GoldenScalar(Fraction(1, 2), Fraction(1, 2))
SQRT5 = GoldenScalar(0, 1)
