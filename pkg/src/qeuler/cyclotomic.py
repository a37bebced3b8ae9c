"""Exact arithmetic in cyclotomic fields.

An element of the field generated by a primitive m-th root of unity is
stored as a polynomial in that root with Fraction coefficients, reduced
modulo the m-th cyclotomic polynomial.  The reduction is canonical, so
two equal elements always carry identical coefficient vectors and
equality is plain coefficient comparison.  Elements of different orders
interoperate by promotion to the lcm order (the root of order m is the
(M/m)-th power of the root of order M).
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .ntheory import divisors, euler_phi


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError("order must be >= 1")
    # x^m - 1 divided by the cyclotomic polynomials of all proper divisors
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m):
        if d < m:
            poly = _div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _div_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, divisor monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division was not exact")
    return out


class CyclotomicRational:
    """Exact element of the order-m cyclotomic field."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs, reduce: bool = True):
        if order < 1:
            raise ValueError("order must be >= 1")
        cs = [Fraction(c) for c in coeffs]
        if reduce:
            cs = _reduce(order, cs)
        else:
            deg = euler_phi(order)
            if len(cs) != deg:
                raise ValueError(f"expected {deg} coefficients for order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("CyclotomicRational is immutable")

    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicRational":
        return cls(order, [Fraction(value)])

    @classmethod
    def root(cls, order: int, power: int = 1) -> "CyclotomicRational":
        """The chosen primitive root of unity of the given order, raised to power."""
        power %= order
        return cls(order, [0] * power + [1])

    # -- structure ---------------------------------------------------

    def in_order(self, new_order: int) -> "CyclotomicRational":
        """Rewrite in the field of order new_order (old order must divide it)."""
        if new_order == self.order:
            return self
        if new_order % self.order:
            raise ValueError("can only promote to a multiple of the order")
        step = new_order // self.order
        raw = [Fraction(0)] * (euler_phi(self.order) * step + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] += c
        return CyclotomicRational(new_order, raw)

    def _match(self, other):
        if isinstance(other, CyclotomicRational):
            if other.order == self.order:
                return self, other
            m = lcm(self.order, other.order)
            return self.in_order(m), other.in_order(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicRational.from_rational(self.order, other)
        return None, None

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return CyclotomicRational(
            a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)], reduce=False
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicRational(self.order, [-c for c in self.coeffs], reduce=False)

    def __sub__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return CyclotomicRational(
            a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)], reduce=False
        )

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        raw = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return CyclotomicRational(a.order, raw)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        inv = _invert_mod(list(self.coeffs), phi)
        return CyclotomicRational(self.order, inv)

    def __truediv__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CyclotomicRational.from_rational(self.order, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / conversions --------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicRational):
            a, b = self._match(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*z{self.order}^{i}" if i > 1 else f"{c}*z{self.order}")
        return " + ".join(terms) if terms else "0"


def _reduce(order: int, raw: list[Fraction]) -> list[Fraction]:
    # fold exponents modulo order first (root^order = 1), then reduce by
    # the cyclotomic polynomial to the canonical degree
    folded = [Fraction(0)] * order
    for i, c in enumerate(raw):
        if c:
            folded[i % order] += c
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    for i in range(order - 1, deg - 1, -1):
        c = folded[i]
        if c:
            for j in range(deg + 1):
                folded[i - deg + j] -= c * phi[j]
    return folded[:deg]


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _poly_trim(a[: len(b) - 1])


def _invert_mod(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    # extended Euclid in Q[x]; mod is irreducible so the gcd is a unit
    r0, r1 = list(mod), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        s = _poly_sub(s0, _poly_mul(q, s1))
        r0, s0, r1, s1 = r1, s1, r, s
    # r0 is a nonzero constant
    c = r0[0]
    out = [x / c for x in s0]
    out += [Fraction(0)] * (len(mod) - 1 - len(out))
    return out[: len(mod) - 1]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def cyclotomic_reduce(coeffs, order: int) -> CyclotomicRational:
    """Canonical representative of a raw root-of-unity polynomial."""
    return CyclotomicRational(order, coeffs)
