"""Fixed-precision p-adic numbers with valuation and precision tracking.

A nonzero value is p^v * unit with the unit known modulo p^prec, i.e.
the value is known to absolute precision v + prec.  Arithmetic never
claims more digits than survive: relative precision is the minimum of
the operands under multiplication and division, absolute precision the
minimum under addition.  Zeros produced by cancellation remember the
absolute precision down to which they are known to vanish; the exact
zero carries infinite valuation.

Equality and hashing are representation-based (same p, v, unit, prec).
Use ``congruent_to`` / ``indistinguishable_from`` for value comparisons
at a precision level.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import inf

from .ntheory import int_valuation, is_prime


class PrecisionLossError(ArithmeticError):
    """Raised when a computation cannot certify the requested precision."""


def _check_prime(p: int):
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


class Padic:
    """Element of Q_p at finite precision (p an odd prime)."""

    __slots__ = ("p", "v", "unit", "prec")

    def __init__(self, p: int, v, unit: int, prec: int):
        _check_prime(p)
        if unit == 0:
            if v is not inf and not isinstance(v, int):
                raise ValueError("zero needs an integer precision bound or inf")
            prec = 0
        else:
            if prec < 1:
                raise ValueError("nonzero value needs at least one known digit")
            unit %= p**prec
            if unit == 0:
                v = v + prec
            elif unit % p == 0:
                raise ValueError("unit part must be coprime to p")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "prec", prec if unit else 0)

    def __setattr__(self, *a):
        raise AttributeError("Padic is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "Padic":
        return cls(p, inf, 0, 0)

    @classmethod
    def from_int(cls, n: int, p: int, prec: int) -> "Padic":
        if n == 0:
            return cls.zero(p)
        v = int_valuation(n, p)
        return cls(p, v, n // p**v, prec)

    @classmethod
    def from_rational(cls, r, p: int, prec: int) -> "Padic":
        r = Fraction(r)
        if r == 0:
            return cls.zero(p)
        vn = int_valuation(r.numerator, p)
        vd = int_valuation(r.denominator, p)
        num = r.numerator // p**vn
        den = r.denominator // p**vd
        unit = num * pow(den, -1, p**prec)
        return cls(p, vn - vd, unit, prec)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        """True when indistinguishable from zero at the carried precision."""
        return self.unit == 0

    def is_exact_zero(self) -> bool:
        return self.unit == 0 and self.v is inf

    def valuation(self):
        """v_p of the value; for inexact zeros, the certified lower bound."""
        return self.v

    def abs_prec(self):
        return self.v if self.unit == 0 else self.v + self.prec

    def digits(self) -> list[int]:
        """Base-p digits of the unit part, least significant first."""
        out = []
        u = self.unit
        for _ in range(self.prec):
            u, r = divmod(u, self.p)
            out.append(r)
        return out

    def lift(self) -> int:
        """Integer representative p^v * unit (requires v >= 0)."""
        if self.unit == 0:
            return 0
        if self.v < 0:
            raise ValueError("negative valuation has no integer lift")
        return self.p**self.v * self.unit

    def at_prec(self, prec: int) -> "Padic":
        """Truncate the relative precision (never inflates knowledge)."""
        if self.unit == 0:
            return self
        return Padic(self.p, self.v, self.unit, min(self.prec, prec))

    # -- arithmetic --------------------------------------------------------

    def _same(self, other) -> "Padic":
        if isinstance(other, Padic):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        if isinstance(other, int):
            return Padic.from_int(other, self.p, self.prec or 1)
        if isinstance(other, Fraction):
            return Padic.from_rational(other, self.p, self.prec or 1)
        return NotImplemented

    def __add__(self, other):
        b = self._same(other)
        if b is NotImplemented:
            return b
        if self.is_exact_zero():
            return b
        if b.is_exact_zero():
            return self
        absres = min(self.abs_prec(), b.abs_prec())
        w = min(self.v, b.v)
        k = absres - w
        if k <= 0:
            return Padic(self.p, absres, 0, 0)
        total = (
            self.unit * self.p ** (self.v - w) + b.unit * self.p ** (b.v - w)
        ) % self.p**k
        if total == 0:
            return Padic(self.p, absres, 0, 0)
        t = int_valuation(total, self.p)
        if t >= k:
            return Padic(self.p, absres, 0, 0)
        return Padic(self.p, w + t, total // self.p**t, k - t)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return Padic(self.p, self.v, self.p**self.prec - self.unit, self.prec)

    def __sub__(self, other):
        b = self._same(other)
        if b is NotImplemented:
            return b
        return self + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._same(other)
        if b is NotImplemented:
            return b
        if self.is_exact_zero() or b.is_exact_zero():
            return Padic.zero(self.p)
        if self.unit == 0 or b.unit == 0:
            return Padic(self.p, self.v + b.v, 0, 0)
        prec = min(self.prec, b.prec)
        return Padic(self.p, self.v + b.v, self.unit * b.unit, prec)

    __rmul__ = __mul__

    def inverse(self) -> "Padic":
        if self.unit == 0:
            raise ZeroDivisionError("inverse of (indistinguishable-from-)zero")
        return Padic(self.p, -self.v, pow(self.unit, -1, self.p**self.prec), self.prec)

    def __truediv__(self, other):
        b = self._same(other)
        if b is NotImplemented:
            return b
        if b.unit == 0:
            raise ZeroDivisionError("division by (indistinguishable-from-)zero")
        if self.is_exact_zero():
            return self
        if self.unit == 0:
            return Padic(self.p, self.v - b.v, 0, 0)
        prec = min(self.prec, b.prec)
        unit = self.unit * pow(b.unit, -1, self.p**prec)
        return Padic(self.p, self.v - b.v, unit, prec)

    def __rtruediv__(self, other):
        b = self._same(other)
        if b is NotImplemented:
            return b
        return b / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = Padic(self.p, 0, 1, self.prec or 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons ------------------------------------------------------

    def congruent_to(self, other, k: int) -> bool:
        """Certified v_p(self - other) >= k.

        Raises PrecisionLossError when the carried precision cannot decide.
        """
        d = self - self._same(other)
        if d.unit == 0:
            if d.v >= k:
                return True
            raise PrecisionLossError(
                f"difference known only to O(p^{d.v}), cannot certify depth {k}"
            )
        return d.v >= k

    def indistinguishable_from(self, other) -> bool:
        return (self - self._same(other)).unit == 0

    def __eq__(self, other):
        if not isinstance(other, Padic):
            return NotImplemented
        return (self.p, self.v, self.unit, self.prec) == (
            other.p,
            other.v,
            other.unit,
            other.prec,
        )

    def __hash__(self):
        return hash((self.p, self.v, self.unit, self.prec))

    def __repr__(self):
        if self.is_exact_zero():
            return f"0 (exact, {self.p}-adic)"
        if self.unit == 0:
            return f"O({self.p}^{self.v})"
        if self.v == 0:
            lead = f"{self.unit}"
        else:
            lead = f"{self.unit}*{self.p}^{self.v}"
        return f"{lead} + O({self.p}^{self.abs_prec()})"


def padic_from_rational(r, p: int, prec: int) -> Padic:
    """Q -> Q_p at the requested relative precision."""
    return Padic.from_rational(r, p, prec)


def int_mod_to_padic(x: int, p: int, abs_prec: int) -> Padic:
    """Wrap an integer known modulo p^abs_prec, tracking the digits that survive."""
    x %= p**abs_prec
    if x == 0:
        return Padic(p, abs_prec, 0, 0)
    v = int_valuation(x, p)
    return Padic(p, v, x // p**v, abs_prec - v)


def teichmuller_lift(a: int, p: int, prec: int) -> int:
    """The (p-1)-th root of unity congruent to a mod p, as an integer mod p^prec.

    Returns 0 when p divides a.  Computed by iterating x <- x^p, which
    stabilizes modulo p^prec after at most prec - 1 steps.
    """
    _check_prime(p)
    return _teichmuller_cached(a % p, p, prec)


@lru_cache(maxsize=None)
def _teichmuller_cached(a: int, p: int, prec: int) -> int:
    if a == 0:
        return 0
    mod = p**prec
    x = a
    while True:
        y = pow(x, p, mod)
        if y == x:
            return x
        x = y


def fraction_valuation(r, p: int):
    """v_p of a rational number, inf for zero."""
    r = Fraction(r)
    if r == 0:
        return inf
    return int_valuation(r.numerator, p) - int_valuation(r.denominator, p)
