"""q-Euler numbers and polynomials by exact recurrence.

The numbers E_{n,q} are defined operationally through the recurrence
obtained from the translation law of the alternating measure applied to
x^n:

    q * sum_{k<=n} C(n,k) E_{k,q}  +  E_{n,q}  =  (1+q) * [n == 0]

which solves to E_0 = 1 and, for n >= 1,

    E_{n,q} = -q/(1+q) * sum_{k<n} C(n,k) E_{k,q}.

This is exact in every scalar domain (rational, complex, p-adic); the
alternating power series is kept as a float-mode cross-check only, since
it converges only archimedeanly.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .padic import Padic
from .scalars import as_scalar, one_like, q_bracket, zero_like


class QEulerTable:
    """Growable table of E_{k,q} for one fixed q, filled on demand.

    Fills are serialized by a lock; the stored scalars are immutable, so
    concurrent reads after a fill are safe.
    """

    def __init__(self, q):
        self.q = as_scalar(q)
        self._one = one_like(self.q)
        self._neg_ratio = -self.q / (self._one + self.q)
        self._values = [self._one]
        self._lock = threading.Lock()

    def upto(self, n: int) -> None:
        if n < len(self._values):
            return
        with self._lock:
            while len(self._values) <= n:
                m = len(self._values)
                acc = zero_like(self.q)
                for k in range(m):
                    acc = acc + comb(m, k) * self._values[k]
                self._values.append(self._neg_ratio * acc)

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("negative index")
        self.upto(n)
        return self._values[n]


_tables: dict = {}
_tables_lock = threading.Lock()


def _table(q) -> QEulerTable:
    s = as_scalar(q)
    key = (type(s).__name__, s)
    with _tables_lock:
        tab = _tables.get(key)
        if tab is None:
            tab = QEulerTable(s)
            _tables[key] = tab
    return tab


def euler_number_q(n: int, q):
    """E_{n,q} in the scalar domain of q (memoized per q)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _table(q)[n]


def classical_euler(n: int) -> Fraction:
    """The classical Euler numbers (coefficients of 2/(e^t+1)), as the q = 1 case."""
    return euler_number_q(n, Fraction(1))


def euler_poly_q(n: int, x, q):
    """E_{n,q}(x) = sum_k C(n,k) x^(n-k) E_{k,q}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    tab = _table(q)
    tab.upto(n)
    s = as_scalar(q)
    if isinstance(s, Padic) and not isinstance(x, Padic):
        x = Padic.from_rational(Fraction(x), s.p, s.prec)
    elif isinstance(s, complex) and not isinstance(x, complex):
        x = complex(x)
    elif isinstance(s, Fraction) and not isinstance(x, (Fraction, int)):
        raise TypeError("exact q needs a rational x")
    acc = zero_like(s)
    xp = one_like(s)  # x^(n-k), built from the k = n term down
    for k in range(n, -1, -1):
        acc = acc + comb(n, k) * xp * tab[k]
        if k:
            xp = xp * x
    return acc


def check_translation_identity(n: int, k: int, q) -> Fraction:
    """Residual of the n-step translation law specialized to f(x) = x^k.

    Returns q^n E_{k,q}(n) + (-1)^(n-1) E_{k,q}
            - (1+q) sum_{l<n} (-1)^(n-l-1) q^l l^k,
    which must vanish identically for exact rational q.  The l = 0, k = 0
    term uses 0^0 = 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = as_scalar(q)
    if not isinstance(s, Fraction):
        raise TypeError("the exact identity check needs exact rational q")
    lhs = s**n * euler_poly_q(k, Fraction(n), s) + (-1) ** (n - 1) * euler_number_q(k, s)
    rhs = Fraction(0)
    for l in range(n):
        lk = Fraction(1) if k == 0 else Fraction(l) ** k
        rhs += (-1) ** (n - l - 1) * s**l * lk
    rhs *= q_bracket(2, s)
    return lhs - rhs


def gen_euler_number(n: int, chi, q, F: int):
    """Generalized q-Euler number attached to a character, by finite sum.

    E_{n,chi,q} = (1+q) F^n / (1+q^F) * sum_{a=1..F} (-1)^a q^a chi(a)
                  E_{n,q^F}(a/F),
    where F is any odd positive multiple of the character's modulus; the
    value does not depend on the admissible F chosen (the distribution
    property, exercised in the test suite).  chi must be callable on
    integers with a ``modulus`` attribute; its values must live in a
    domain compatible with q (cyclotomic/rational for exact q, p-adic
    for p-adic q).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if F < 1 or F % 2 == 0:
        raise ValueError(f"F must be an odd positive integer, got {F}")
    if F % chi.modulus:
        raise ValueError(f"F = {F} is not a multiple of the modulus {chi.modulus}")
    s = as_scalar(q)
    sF = s**F
    acc = None
    qa = one_like(s)
    for a in range(1, F + 1):
        qa = qa * s
        ca = chi(a)
        if _scalar_is_zero(ca):
            continue
        term = (-1) ** a * ca * qa * euler_poly_q(n, Fraction(a, F), sF)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = zero_like(s)
    return q_bracket(2, s) * F**n / q_bracket(2, sF) * acc


def _scalar_is_zero(v) -> bool:
    if isinstance(v, Padic):
        return v.is_exact_zero()
    return v == 0
