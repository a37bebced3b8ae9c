"""The three q regimes and the shared combinatorial primitives.

Every operation in the package declares which q it accepts through
``QParameter``: an exact rational (any q != -1), a complex float inside
the unit disk, or a p-adic number with |1-q|_p < 1.  The brackets and
generalized binomials below are polymorphic over Fraction, complex and
Padic scalars.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic import Padic

# q = -1 would make the weight 1+q vanish and poison every formula, so it
# is rejected at construction time rather than deep inside a division.


@dataclass(frozen=True)
class QParameter:
    """Tagged q value: exact rational, complex float, or p-adic."""

    value: Fraction | complex | Padic

    def __post_init__(self):
        v = self.value
        if isinstance(v, Padic):
            d = 1 - v
            if not (d.is_zero() or d.valuation() >= 1):
                raise ValueError("p-adic q needs |1-q|_p < 1")
        elif isinstance(v, Fraction):
            if v == -1:
                raise ValueError("q = -1 is not allowed")
        elif isinstance(v, complex):
            if abs(v) >= 1:
                raise ValueError("float q needs |q| < 1")
        else:
            raise TypeError(f"unsupported q type {type(v).__name__}")

    @classmethod
    def exact(cls, value) -> "QParameter":
        return cls(Fraction(value))

    @classmethod
    def from_float(cls, value) -> "QParameter":
        return cls(complex(value))

    @classmethod
    def padic(cls, value: Padic) -> "QParameter":
        return cls(value)

    @property
    def kind(self) -> str:
        if isinstance(self.value, Fraction):
            return "exact"
        if isinstance(self.value, Padic):
            return "padic"
        return "float"


def as_scalar(q):
    """Accept a QParameter or a raw scalar; validate and unwrap."""
    if isinstance(q, QParameter):
        return q.value
    if isinstance(q, int):
        return QParameter.exact(q).value
    if isinstance(q, float):
        return QParameter.from_float(q).value
    return QParameter(q if isinstance(q, (Padic, complex)) else Fraction(q)).value


def one_like(x):
    """Multiplicative unit in the scalar domain of x."""
    if isinstance(x, Padic):
        return Padic(x.p, 0, 1, x.prec or 1)
    if isinstance(x, complex):
        return complex(1)
    return Fraction(1)


def zero_like(x):
    if isinstance(x, Padic):
        return Padic.zero(x.p)
    if isinstance(x, complex):
        return complex(0)
    return Fraction(0)


_SUM_THRESHOLD = 64


def q_bracket(x: int, q, minus: bool = False):
    """The q-analog of the integer x.

    Plain mode is (1-q^x)/(1-q), with the limit value x substituted at
    q = 1.  With minus=True it is the sign-alternating companion
    (1-(-q)^x)/(1+q).  Small x is evaluated as the explicit geometric sum,
    which is the same value but avoids dividing by 1-q (and so keeps full
    p-adic precision and needs no q = 1 special case).
    """
    if x < 0:
        raise ValueError("q_bracket expects x >= 0")
    s = as_scalar(q)
    base = -s if minus else s
    if x <= _SUM_THRESHOLD:
        acc = zero_like(s)
        term = one_like(s)
        for _ in range(x):
            acc = acc + term
            term = term * base
        return acc
    if minus:
        return (one_like(s) - base**x) / (one_like(s) + s)
    # large x, plain mode: closed form needs q distinguishable from 1
    d = one_like(s) - s
    if isinstance(s, Padic):
        if d.is_exact_zero():
            return Padic.from_int(x, s.p, s.prec)
        if d.is_zero():
            raise ValueError("q indistinguishable from 1 at this precision")
    elif d == 0:
        return Fraction(x) if isinstance(s, Fraction) else complex(x)
    return (one_like(s) - s**x) / d


def gen_binomial(s, k: int):
    """Generalized binomial coefficient s(s-1)...(s-k+1)/k!.

    Total over Fraction, complex and Padic scalars; for Padic arguments
    the division by k! costs v_p(k!) digits of absolute precision, which
    the result records.
    """
    if k < 0:
        raise ValueError("gen_binomial expects k >= 0")
    if isinstance(s, int):
        s = Fraction(s)
    out = one_like(s)
    for j in range(k):
        out = out * (s - j) / (j + 1)
    return out
