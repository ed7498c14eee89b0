"""Exact numbers in a single quadratic extension Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values throughout the
package.  :class:`Quad` is only introduced when a square root that is not
rational shows up (Hesse-quadric roots, branch directions).  ``d`` is an
integer that is not a perfect square; ``d < 0`` encodes the complex case,
``sqrt(d) = i*sqrt(|d|)``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = ["Quad", "as_fraction", "sqrt_rational", "is_zero", "norm", "conj"]

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _split_square(n: int) -> tuple[int, int]:
    """Write n = s**2 * r with r free of small square factors."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    s = 1
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > n:
            break
        while n % pp == 0:
            n //= pp
            s *= p
    r = math.isqrt(n)
    if r * r == n:
        s *= r
        n = 1
    return s, sign * n


class Quad:
    """a + b*sqrt(d) with rational a, b."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 0):
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        if self.b and d in (0, 1):
            raise ValueError("radical part requires a non-square discriminant")
        self.d = int(d)

    @classmethod
    def sqrt(cls, d: int) -> "Quad":
        return cls(0, 1, d)

    # -- coercion -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.b and self.b and other.d != self.d:
                raise ValueError(f"mixed quadratic fields d={self.d} and d={other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return Quad(other, 0, self.d)
        if isinstance(other, float):
            raise TypeError("cannot mix floating values into exact arithmetic")
        return NotImplemented

    def _field(self, other: "Quad") -> int:
        return self.d if self.b or not other.b else other.d

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.a - o.a, self.b - o.b, self._field(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quad(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        return Quad(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "Quad":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Quad division by zero")
        return Quad(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Quad division by zero")
            return Quad(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Quad(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ----------------------------------------------------
    def conj(self) -> "Quad":
        return Quad(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Galois norm a^2 - d b^2 (|z|^2 when d < 0)."""
        return self.a * self.a - self.d * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, Quad):
            if not self.b and not other.b:
                return self.a == other.a
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Sign of a real element, decided exactly."""
        if self.d < 0 and self.b:
            raise ValueError("sign of a non-real number")
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sa == 0:
            return sb
        # opposite signs: compare a^2 with d b^2
        diff = a * a - self.d * b * b
        return sa if diff > 0 else sb

    def __float__(self):
        if self.d < 0 and self.b:
            raise TypeError("complex value has no float")
        return float(self.a) + float(self.b) * math.sqrt(self.d) if self.b else float(self.a)

    def __complex__(self):
        if not self.b:
            return complex(float(self.a))
        if self.d < 0:
            return complex(float(self.a), float(self.b) * math.sqrt(-self.d))
        return complex(float(self))

    def __repr__(self):
        return f"Quad({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        rad = "i" if self.d == -1 else (f"sqrt({self.d})" if self.d > 0 else f"i*sqrt({-self.d})")
        sign = "+" if self.b > 0 else "-"
        coef = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        head = f"{self.a} {sign} " if self.a else ("-" if sign == "-" else "")
        return f"{head}{coef}{rad}"


def sqrt_rational(q) -> Fraction | Quad:
    """Exact square root of a rational, in Q when possible, else in Q(sqrt(d))."""
    q = as_fraction(q)
    if q == 0:
        return Fraction(0)
    p, r = q.numerator, q.denominator
    s, d = _split_square(p * r)
    if d == 1:
        return Fraction(s, r)
    return Quad(0, Fraction(s, r), d)


def is_zero(x, tol: float = 0.0) -> bool:
    if isinstance(x, float):
        return abs(x) <= tol
    if isinstance(x, complex):
        return abs(x) <= tol
    return not x


def conj(x):
    if isinstance(x, Quad):
        return x.conj()
    if isinstance(x, complex):
        return x.conjugate()
    return x


def norm(x):
    """x * conj(x); rational for exact inputs."""
    if isinstance(x, Quad):
        return x.norm()
    if isinstance(x, complex):
        return abs(x) ** 2
    return x * x
