"""Truncated power series in two variables (u, v) and curve jets in one (t).

A :class:`Jet2` of order N stores every coefficient of total degree <= N.
Three coefficient domains exist and are never mixed silently:

``exact``
    rationals, stored as integer numerators over one common denominator
    so the hot loops run on machine integers;
``quad``
    elements of one quadratic extension (:class:`~sharksfin.scalar.Quad`);
``float``
    binary floating point, used by the normal-form pipeline.

Exact jets are promoted to ``quad`` on contact with a ``quad`` jet;
exact/float mixing raises :class:`TypeError`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sharksfin.jets import kernel
from sharksfin.scalar import Quad, as_fraction, sqrt_rational

__all__ = [
    "Jet2",
    "MapJet2",
    "CurveJet",
    "JetError",
    "series_mul",
    "series_compose",
    "series_elem",
    "partial_derivative",
    "directional_iterate",
]

EXACT, QUAD, FLOAT = "exact", "quad", "float"


class JetError(ValueError):
    """Precondition violation in jet arithmetic."""


def _kind_of(values: Iterable) -> str:
    kind = EXACT
    for x in values:
        if isinstance(x, float):
            return FLOAT
        if isinstance(x, Quad):
            kind = QUAD
        elif isinstance(x, complex):
            raise TypeError("complex floating coefficients are not supported")
    return kind


def _normalize(nums: list, den: int) -> tuple[tuple, int]:
    g = math.gcd(den, *nums)
    if g > 1:
        return tuple(x // g for x in nums), den // g
    return tuple(nums), den


class Jet2:
    """Truncated bivariate power series sum c_ij u^i v^j, i + j <= order."""

    __slots__ = ("order", "kind", "_c", "_den")

    def __init__(self, order: int, coeffs: Mapping | Sequence | None = None, kind: str | None = None):
        if order < 0:
            raise JetError("truncation order must be non-negative")
        n = kernel.size(order)
        values = [0] * n
        if coeffs is None:
            pass
        elif isinstance(coeffs, Mapping):
            for (i, j), c in coeffs.items():
                if i < 0 or j < 0:
                    raise JetError(f"negative exponent {(i, j)}")
                if i + j <= order:
                    values[kernel.index(i, j)] += c
        else:
            if len(coeffs) != n:
                raise JetError(f"expected {n} coefficients for order {order}, got {len(coeffs)}")
            values = list(coeffs)
        if kind is None:
            kind = _kind_of(values)
        self.order = order
        self.kind = kind
        if kind == EXACT:
            fr = [as_fraction(x) for x in values]
            den = math.lcm(*(x.denominator for x in fr)) if fr else 1
            self._c, self._den = _normalize([x.numerator * (den // x.denominator) for x in fr], den)
        elif kind == FLOAT:
            self._c = tuple(float(x) for x in values)
            self._den = 1
        elif kind == QUAD:
            self._c = tuple(x if isinstance(x, Quad) else as_fraction(x) for x in values)
            self._den = 1
        else:
            raise JetError(f"unknown coefficient kind {kind!r}")

    @classmethod
    def _raw(cls, order: int, kind: str, c, den=1) -> "Jet2":
        obj = object.__new__(cls)
        obj.order = order
        obj.kind = kind
        if kind == EXACT:
            obj._c, obj._den = _normalize(list(c), den)
        else:
            obj._c = tuple(c)
            obj._den = 1
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, order: int, kind: str = EXACT) -> "Jet2":
        zero = 0.0 if kind == FLOAT else 0
        return cls._raw(order, kind, [zero] * kernel.size(order))

    @classmethod
    def constant(cls, value, order: int, kind: str | None = None) -> "Jet2":
        return cls(order, {(0, 0): value}, kind=kind)

    @classmethod
    def u(cls, order: int, kind: str = EXACT) -> "Jet2":
        return cls(order, {(1, 0): 1}, kind=kind)

    @classmethod
    def v(cls, order: int, kind: str = EXACT) -> "Jet2":
        return cls(order, {(0, 1): 1}, kind=kind)

    @classmethod
    def from_terms(cls, order: int, terms: Iterable[tuple[int, int, object]], kind: str | None = None) -> "Jet2":
        table: dict = {}
        for i, j, c in terms:
            table[(i, j)] = table.get((i, j), 0) + c
        return cls(order, table, kind=kind)

    # -- access -------------------------------------------------------
    def _value(self, k: int):
        c = self._c[k]
        if self.kind == EXACT:
            return Fraction(c, self._den) if self._den != 1 else Fraction(c)
        return c

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        if i < 0 or j < 0 or i + j > self.order:
            raise JetError(f"monomial {ij} outside order {self.order}")
        return self._value(kernel.index(i, j))

    def coeff(self, i: int, j: int):
        """Coefficient of u^i v^j; zero beyond the order is *not* implied."""
        return self[i, j]

    def values(self) -> list:
        return [self._value(k) for k in range(len(self._c))]

    def terms(self) -> list[tuple[int, int, object]]:
        """Nonzero (i, j, coefficient) triples in graded order."""
        mons = kernel.monomials(self.order)
        return [(*mons[k], self._value(k)) for k in range(len(self._c)) if self._c[k]]

    def homogeneous(self, d: int) -> list:
        """Coefficients of degree d, ordered by increasing power of v."""
        start = d * (d + 1) // 2
        return [self._value(start + j) for j in range(d + 1)]

    @property
    def constant_term(self):
        return self._value(0)

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.kind == FLOAT:
            return all(abs(x) <= tol for x in self._c)
        return not any(self._c)

    def max_abs(self) -> float:
        if self.kind == QUAD:
            return max((abs(complex(x)) for x in self._c), default=0.0)
        return max((abs(float(x)) for x in self._c), default=0.0) / self._den

    def low_degree_vanishes(self, degree: int, tol: float = 0.0) -> bool:
        """True when all coefficients of total degree < degree are zero."""
        n = kernel.size(degree - 1) if degree > 0 else 0
        if self.kind == FLOAT:
            return all(abs(x) <= tol for x in self._c[:n])
        return not any(self._c[:n])

    # -- conversion ---------------------------------------------------
    def to_float(self) -> "Jet2":
        if self.kind == FLOAT:
            return self
        if self.kind == QUAD:
            return Jet2._raw(self.order, FLOAT, [float(x) for x in self._c])
        den = self._den
        return Jet2._raw(self.order, FLOAT, [x / den for x in self._c])

    def to_quad(self) -> "Jet2":
        if self.kind == QUAD:
            return self
        if self.kind == FLOAT:
            raise TypeError("cannot promote a floating jet to exact arithmetic")
        return Jet2._raw(self.order, QUAD, self.values())

    def truncate(self, order: int) -> "Jet2":
        if order > self.order:
            raise JetError(f"cannot raise order {self.order} to {order}")
        n = kernel.size(order)
        return Jet2._raw(order, self.kind, self._c[:n], self._den)

    def pad(self, order: int) -> "Jet2":
        """Same coefficients at a higher order, new terms set to zero."""
        if order < self.order:
            return self.truncate(order)
        zero = 0.0 if self.kind == FLOAT else 0
        extra = kernel.size(order) - len(self._c)
        return Jet2._raw(order, self.kind, list(self._c) + [zero] * extra, self._den)

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _unify(a: "Jet2", b: "Jet2") -> tuple["Jet2", "Jet2"]:
        if a.order != b.order:
            raise JetError(f"truncation order mismatch: {a.order} vs {b.order}")
        if a.kind == b.kind:
            return a, b
        kinds = {a.kind, b.kind}
        if FLOAT in kinds:
            raise TypeError("exact and floating jets cannot be mixed")
        return a.to_quad(), b.to_quad()

    def _scalar_jet(self, s) -> "Jet2":
        if self.kind == FLOAT and isinstance(s, (int, Fraction)):
            s = float(s)
        return Jet2.constant(s, self.order, kind=None if not isinstance(s, (int, Fraction)) else self.kind)

    def __add__(self, other):
        if not isinstance(other, Jet2):
            other = self._scalar_jet(other)
        a, b = Jet2._unify(self, other)
        if a.kind == EXACT:
            if a._den == b._den:
                return Jet2._raw(a.order, EXACT, [x + y for x, y in zip(a._c, b._c)], a._den)
            den = math.lcm(a._den, b._den)
            sa, sb = den // a._den, den // b._den
            return Jet2._raw(a.order, EXACT, [x * sa + y * sb for x, y in zip(a._c, b._c)], den)
        return Jet2._raw(a.order, a.kind, [x + y for x, y in zip(a._c, b._c)])

    __radd__ = __add__

    def __neg__(self):
        return Jet2._raw(self.order, self.kind, [-x for x in self._c], self._den)

    def __sub__(self, other):
        if not isinstance(other, Jet2):
            other = self._scalar_jet(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "Jet2":
        if self.kind == EXACT and isinstance(s, (int, Fraction)):
            s = Fraction(s)
            return Jet2._raw(self.order, EXACT, [x * s.numerator for x in self._c], self._den * s.denominator)
        if self.kind == FLOAT:
            s = float(s)
            return Jet2._raw(self.order, FLOAT, [x * s for x in self._c])
        if isinstance(s, float):
            raise TypeError("exact jet scaled by a float")
        base = self.to_quad() if self.kind == EXACT else self
        return Jet2._raw(self.order, QUAD, [x * s for x in base._c])

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            return self.scale(other)
        a, b = Jet2._unify(self, other)
        if a.kind == EXACT:
            return Jet2._raw(a.order, EXACT, kernel.mul_int(a._c, b._c, a.order), a._den * b._den)
        if a.kind == FLOAT:
            return Jet2._raw(a.order, FLOAT, kernel.mul_float(a._c, b._c, a.order))
        return Jet2._raw(a.order, QUAD, kernel.mul_generic(a._c, b._c, a.order))

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, s):
        if isinstance(s, Jet2):
            return self * series_elem("inverse", s)
        if self.kind == FLOAT:
            return self.scale(1.0 / float(s))
        if isinstance(s, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(s))
        return self.scale(1 / s)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Jet2.constant(1.0 if self.kind == FLOAT else 1, self.order, kind=self.kind)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Jet2):
            return NotImplemented
        if self.order != other.order:
            return False
        if self.kind == EXACT and other.kind == EXACT:
            return self._den == other._den and self._c == other._c
        return self.values() == other.values()

    def __hash__(self):
        return hash((self.order, tuple(self.values())))

    def allclose(self, other: "Jet2", tol: float = 1e-9) -> bool:
        a = self.to_float().values()
        b = other.to_float().values() if other.order == self.order else other.pad(self.order).to_float().values()
        return all(abs(x - y) <= tol for x, y in zip(a, b))

    # -- calculus -----------------------------------------------------
    def deriv(self, var: str) -> "Jet2":
        """Formal partial derivative; the result has order N - 1."""
        if var not in ("u", "v"):
            raise JetError(f"unknown variable {var!r}")
        if self.order == 0:
            return Jet2.zero(0, self.kind)
        out_order = self.order - 1
        mons = kernel.monomials(out_order)
        out = []
        for i, j in mons:
            if var == "u":
                out.append((i + 1) * self._c[kernel.index(i + 1, j)])
            else:
                out.append((j + 1) * self._c[kernel.index(i, j + 1)])
        return Jet2._raw(out_order, self.kind, out, self._den)

    def compose(self, inner: "MapJet2") -> "Jet2":
        return series_compose(self, inner)

    def evaluate(self, u, v):
        """Evaluate the polynomial (float arithmetic for float jets); works on numpy arrays."""
        mons = kernel.monomials(self.order)
        total = 0
        for k, (i, j) in enumerate(mons):
            c = self._c[k]
            if c:
                if self.kind == EXACT:
                    c = c / self._den
                elif self.kind == QUAD:
                    c = float(c)
                total = total + c * (u ** i) * (v ** j)
        return total

    def __repr__(self):
        return f"Jet2(order={self.order}, kind={self.kind!r}, {self.format()})"

    def format(self, names: tuple[str, str] = ("u", "v")) -> str:
        parts = []
        for i, j, c in self.terms():
            mon = "*".join(
                p for p in (
                    (names[0] if i == 1 else f"{names[0]}^{i}") if i else "",
                    (names[1] if j == 1 else f"{names[1]}^{j}") if j else "",
                ) if p
            )
            parts.append(f"({c})*{mon}" if mon else f"({c})")
        return " + ".join(parts) if parts else "0"


class MapJet2:
    """Jet of a map germ (R^2, 0) -> (R^2, 0): two components of equal order."""

    __slots__ = ("f1", "f2")

    def __init__(self, f1: Jet2, f2: Jet2, *, check_origin: bool = True):
        if f1.order != f2.order:
            raise JetError(f"component orders differ: {f1.order} vs {f2.order}")
        if f1.kind != f2.kind:
            f1, f2 = Jet2._unify(f1, f2)
        if check_origin and (f1._c[0] or f2._c[0]):
            raise JetError("map germ must send 0 to 0 (nonzero constant term)")
        self.f1 = f1
        self.f2 = f2

    @classmethod
    def from_terms(cls, order: int, first, second, kind: str | None = None) -> "MapJet2":
        """Build from {(i, j): c} mappings or (i, j, c) iterables."""
        def mk(spec):
            if isinstance(spec, Jet2):
                return spec
            if isinstance(spec, Mapping):
                return Jet2(order, spec, kind=kind)
            return Jet2.from_terms(order, spec, kind=kind)
        return cls(mk(first), mk(second))

    @classmethod
    def identity(cls, order: int, kind: str = EXACT) -> "MapJet2":
        return cls(Jet2.u(order, kind), Jet2.v(order, kind))

    @classmethod
    def linear(cls, matrix, order: int, kind: str | None = None) -> "MapJet2":
        """(u, v) -> matrix @ (u, v)."""
        (a, b), (c, d) = matrix
        return cls(Jet2(order, {(1, 0): a, (0, 1): b}, kind=kind), Jet2(order, {(1, 0): c, (0, 1): d}, kind=kind))

    @property
    def order(self) -> int:
        return self.f1.order

    @property
    def kind(self) -> str:
        return self.f1.kind

    def __iter__(self):
        yield self.f1
        yield self.f2

    def __getitem__(self, k: int) -> Jet2:
        return (self.f1, self.f2)[k]

    def __eq__(self, other):
        if not isinstance(other, MapJet2):
            return NotImplemented
        return self.f1 == other.f1 and self.f2 == other.f2

    def __hash__(self):
        return hash((self.f1, self.f2))

    def __repr__(self):
        return f"MapJet2(order={self.order}, kind={self.kind!r},\n  f1={self.f1.format()},\n  f2={self.f2.format()})"

    def allclose(self, other: "MapJet2", tol: float = 1e-9) -> bool:
        return self.f1.allclose(other.f1, tol) and self.f2.allclose(other.f2, tol)

    def to_float(self) -> "MapJet2":
        return MapJet2(self.f1.to_float(), self.f2.to_float())

    def to_quad(self) -> "MapJet2":
        return MapJet2(self.f1.to_quad(), self.f2.to_quad())

    def truncate(self, order: int) -> "MapJet2":
        return MapJet2(self.f1.truncate(order), self.f2.truncate(order))

    def pad(self, order: int) -> "MapJet2":
        return MapJet2(self.f1.pad(order), self.f2.pad(order))

    def __add__(self, other: "MapJet2") -> "MapJet2":
        return MapJet2(self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other: "MapJet2") -> "MapJet2":
        return MapJet2(self.f1 - other.f1, self.f2 - other.f2)

    def scale(self, s) -> "MapJet2":
        return MapJet2(self.f1.scale(s), self.f2.scale(s))

    def compose(self, inner: "MapJet2") -> "MapJet2":
        """self o inner."""
        return MapJet2(series_compose(self.f1, inner), series_compose(self.f2, inner))

    def then_linear(self, matrix) -> "MapJet2":
        """matrix @ self (a linear change on the target)."""
        (a, b), (c, d) = matrix
        return MapJet2(self.f1.scale(a) + self.f2.scale(b), self.f1.scale(c) + self.f2.scale(d))

    def linear_part(self) -> tuple[tuple, tuple]:
        return ((self.f1[1, 0], self.f1[0, 1]), (self.f2[1, 0], self.f2[0, 1]))

    def jacobian_det(self) -> Jet2:
        """(f1)_u (f2)_v - (f1)_v (f2)_u, of order N - 1."""
        return self.f1.deriv("u") * self.f2.deriv("v") - self.f1.deriv("v") * self.f2.deriv("u")

    def inverse(self) -> "MapJet2":
        """Compositional inverse of a jet with invertible linear part."""
        (a, b), (c, d) = self.linear_part()
        det = a * d - b * c
        if (abs(det) < 1e-14) if self.kind == FLOAT else (det == 0):
            raise JetError("linear part is not invertible")
        inv_lin = ((d / det, -b / det), (-c / det, a / det))
        lin = MapJet2.linear(((a, b), (c, d)), self.order, kind=self.kind)
        nonlinear = self - lin
        ident = MapJet2.identity(self.order, EXACT if self.kind == QUAD else self.kind)
        psi = MapJet2.linear(inv_lin, self.order, kind=self.kind)
        # psi = L^-1 (id - N o psi); each pass fixes one more degree
        for _ in range(self.order):
            psi = (ident - nonlinear.compose(psi)).then_linear(inv_lin)
        return psi

    def evaluate(self, u, v):
        return self.f1.evaluate(u, v), self.f2.evaluate(u, v)


class CurveJet:
    """Jet of a curve germ t -> (x(t), y(t)) with x(0) = y(0) = 0."""

    __slots__ = ("order", "x", "y")

    def __init__(self, order: int, x: Sequence, y: Sequence, *, check_origin: bool = True):
        x = list(x) + [0] * (order + 1 - len(x))
        y = list(y) + [0] * (order + 1 - len(y))
        if len(x) != order + 1 or len(y) != order + 1:
            raise JetError("too many coefficients for the curve order")
        if check_origin and (x[0] or y[0]):
            raise JetError("curve germ must pass through 0")
        self.order = order
        self.x = tuple(x)
        self.y = tuple(y)

    def derivative_at_zero(self, k: int) -> tuple:
        if k > self.order:
            raise JetError(f"derivative {k} exceeds curve order {self.order}")
        f = math.factorial(k)
        return (self.x[k] * f, self.y[k] * f)

    def reparametrize(self, coeffs: Sequence) -> "CurveJet":
        """self(t(s)) where t(s) = sum coeffs[k] s^k with coeffs[0] = 0."""
        coeffs = list(coeffs)[: self.order + 1]
        kind = _kind_of(self.x + self.y + tuple(coeffs))
        t = CurveJet(self.order, coeffs, [0.0 if kind == FLOAT else 0])
        xs = compose_with_curve(Jet2(self.order, {(k, 0): c for k, c in enumerate(self.x)}, kind=kind), t)
        ys = compose_with_curve(Jet2(self.order, {(k, 0): c for k, c in enumerate(self.y)}, kind=kind), t)
        return CurveJet(self.order, xs, ys)

    def as_map(self, order: int | None = None) -> MapJet2:
        """Embed as a u-only map jet (padding with zeros up to ``order``)."""
        order = self.order if order is None else order
        kind = _kind_of(self.x + self.y)
        x = Jet2(order, {(k, 0): c for k, c in enumerate(self.x) if k <= order}, kind=kind)
        y = Jet2(order, {(k, 0): c for k, c in enumerate(self.y) if k <= order}, kind=kind)
        return MapJet2(x, y, check_origin=False)

    def map(self, fn) -> "CurveJet":
        return CurveJet(self.order, [fn(c) for c in self.x], [fn(c) for c in self.y], check_origin=False)

    def __repr__(self):
        return f"CurveJet(order={self.order}, x={list(map(str, self.x))}, y={list(map(str, self.y))})"


def compose_with_curve(outer: Jet2, curve: CurveJet, order: int | None = None) -> list:
    """Coefficients of outer(curve(t)) up to ``order`` (default: min of the orders).

    Asking for a higher order than the curve carries is only meaningful when
    the missing curve terms cannot reach that degree (e.g. outer has no linear
    part); the caller decides.
    """
    if order is None:
        order = min(outer.order, curve.order)
    inner = curve.as_map(order)
    base = outer.pad(order) if outer.order < order else outer.truncate(order)
    res = series_compose(base, inner)
    return [res[k, 0] for k in range(order + 1)]


def map_compose_curve(f: MapJet2, curve: CurveJet, order: int | None = None) -> CurveJet:
    xs = compose_with_curve(f.f1, curve, order)
    ys = compose_with_curve(f.f2, curve, order)
    return CurveJet(len(xs) - 1, xs, ys, check_origin=False)


# -- free-function surface ------------------------------------------------

def series_mul(a: Jet2, b: Jet2) -> Jet2:
    return a * b


def series_compose(outer: Jet2, inner: MapJet2) -> Jet2:
    """outer(inner_1, inner_2) truncated at the common order."""
    g1, g2 = inner.f1, inner.f2
    if g1._c[0] or g2._c[0]:
        raise JetError("inner map has a nonzero constant term")
    if outer.order != g1.order:
        raise JetError(f"truncation order mismatch: {outer.order} vs {g1.order}")
    order = outer.order
    kinds = {outer.kind, g1.kind, g2.kind}
    if kinds == {EXACT}:
        d = math.lcm(g1._den, g2._den)
        n1 = g1._c if g1._den == d else [x * (d // g1._den) for x in g1._c]
        n2 = g2._c if g2._den == d else [x * (d // g2._den) for x in g2._c]
        if d == 1:
            scaled = outer._c
        else:
            # outer(x/d, y/d): coefficient of degree k picks up d^(N-k), overall 1/d^N
            powers = [d ** (order - k) for k in range(order + 1)]
            mons = kernel.monomials(order)
            scaled = [c * powers[mons[k][0] + mons[k][1]] for k, c in enumerate(outer._c)]
        nums = kernel.compose_int(scaled, n1, n2, order)
        return Jet2._raw(order, EXACT, nums, outer._den * d ** order)
    if FLOAT in kinds:
        if kinds != {FLOAT}:
            raise TypeError("exact and floating jets cannot be mixed")
        return Jet2._raw(order, FLOAT, kernel.compose_float(outer._c, g1._c, g2._c, order))
    o, a, b = outer.to_quad(), g1.to_quad(), g2.to_quad()
    return Jet2._raw(order, QUAD, kernel.compose_generic(o._c, a._c, b._c, order))


def partial_derivative(a: Jet2, var: str) -> Jet2:
    return a.deriv(var)


def _series_sum(x: Jet2, coeffs: list) -> Jet2:
    """sum_k coeffs[k] x^k by Horner, x with zero constant term."""
    acc = Jet2.constant(coeffs[-1], x.order, kind=x.kind)
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def series_elem(kind: str, arg: Jet2) -> Jet2:
    """sin, cos, sqrt or inverse (1/arg) of a jet, truncated at its order."""
    n = arg.order
    floating = arg.kind == FLOAT
    c0 = arg.constant_term

    def conv(q: Fraction):
        return float(q) if floating else q

    if kind in ("sin", "cos"):
        if (abs(c0) > 0) if floating else bool(c0):
            raise JetError(f"{kind} requires an argument with zero constant term")
        if kind == "sin":
            coeffs = [conv(Fraction((-1) ** ((k - 1) // 2), math.factorial(k)) if k % 2 else Fraction(0)) for k in range(n + 1)]
        else:
            coeffs = [conv(Fraction((-1) ** (k // 2), math.factorial(k)) if k % 2 == 0 else Fraction(0)) for k in range(n + 1)]
        return _series_sum(arg, coeffs or [conv(Fraction(0))])
    if kind == "inverse":
        if (c0 == 0):
            raise JetError("inverse requires a unit constant term")
        x = arg - c0
        inv0 = (1.0 / c0) if floating else (1 / (c0 if isinstance(c0, Quad) else Fraction(c0)))
        # 1/(c0 + x) = (1/c0) sum (-x/c0)^k
        y = x.scale(-inv0)
        coeffs = [conv(Fraction(1))] * (n + 1)
        return _series_sum(y, coeffs).scale(inv0)
    if kind == "sqrt":
        if floating:
            if c0 <= 0:
                raise JetError("sqrt requires a positive constant term")
            root = math.sqrt(c0)
        else:
            if isinstance(c0, Quad) and not c0.is_rational():
                raise JetError("sqrt of a constant outside Q is not representable exactly")
            c0 = Fraction(c0.a) if isinstance(c0, Quad) else c0
            if c0 <= 0:
                raise JetError("sqrt requires a positive constant term")
            root = sqrt_rational(c0)
            if isinstance(root, Quad):
                raise JetError("constant term is not a square in Q; use the floating mode")
        x = (arg - c0).scale((1.0 / c0) if floating else 1 / Fraction(c0))
        coeffs = []
        b = Fraction(1)
        for k in range(n + 1):
            coeffs.append(conv(b))
            b = b * (Fraction(1, 2) - k) / (k + 1)
        return _series_sum(x, coeffs).scale(root)
    raise JetError(f"unknown elementary function {kind!r}")


def directional_iterate(f: MapJet2, eta: Sequence, k: int) -> tuple:
    """Value at 0 of eta^k f for the constant field eta.

    eta^k f(0) = sum_m binom(k, m) eta1^m eta2^(k-m) d^k f/du^m dv^(k-m)(0)
               = k! * (degree-k part of f)(eta).
    """
    if k < 0:
        raise JetError("iterate count must be non-negative")
    if k > f.order:
        raise JetError(f"iterate {k} exceeds truncation order {f.order}")
    e1, e2 = eta
    fact = math.factorial(k)
    out = []
    for comp in f:
        coeffs = comp.homogeneous(k)
        total = 0
        for j, c in enumerate(coeffs):
            if c:
                total = total + c * (e1 ** (k - j)) * (e2 ** j)
        if isinstance(total, int):
            total = Fraction(total)
        out.append(total * fact)
    return tuple(out)
