"""Archimedean evaluation of the alternating q-zeta and l-series.

All series here are [2]_q-weighted alternating sums with ratio |q| < 1,
so they converge for every complex s; each evaluation certifies its
truncation with a geometric tail bound (the growth factor (n+x)^sigma is
absorbed by a ratio correction, so the certificate is sound for
negative real parts as well).

At nonpositive integer s with rational q and x the terms are rational
and the partial sums are accumulated exactly; naive double-precision
accumulation cannot reach the advertised tolerances there because the
alternating terms grow to ~1e11 before decaying.  General complex s is
summed in compensated floating point.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .scalars import QParameter, q_bracket


@dataclass(frozen=True)
class SeriesBudget:
    """Truncation contract: certified tail below tolerance within max_terms."""

    tolerance: float = 1e-12
    max_terms: int = 500_000

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_BUDGET = SeriesBudget()


class SeriesBudgetError(ArithmeticError):
    """Budget exhausted; carries the partial sum and the unmet tail bound."""

    def __init__(self, message, partial, tail_bound):
        super().__init__(message)
        self.partial = partial
        self.tail_bound = tail_bound


def _as_unit_disk_q(q):
    if isinstance(q, QParameter):
        q = q.value
    if isinstance(q, int):
        q = Fraction(q)
    if isinstance(q, Fraction):
        if abs(q) >= 1:
            raise ValueError("the series need |q| < 1")
        return q
    q = complex(q)
    if abs(q) >= 1:
        raise ValueError("the series need |q| < 1")
    return q


def _tail_bound(q_abs: float, n: int, x: float, sigma: float, scale: float) -> float:
    """Bound on scale * sum_{m >= n} q_abs^m (m+x)^sigma, or inf if not yet geometric."""
    if q_abs == 0.0:
        return 0.0
    r = q_abs * (1.0 + 1.0 / (n + x)) ** sigma
    if r >= 1.0:
        return float("inf")
    return scale * q_abs**n * (n + x) ** sigma / (1.0 - r)


def _kahan_add(total: complex, comp: complex, term: complex):
    y = term - comp
    t = total + y
    comp = (t - total) - y
    return t, comp


def _is_nonpositive_int(s) -> int | None:
    if isinstance(s, int) and s <= 0:
        return s
    if isinstance(s, Fraction) and s.denominator == 1 and s <= 0:
        return int(s)
    if isinstance(s, complex) and s.imag == 0 and s.real == int(s.real) and s.real <= 0:
        return int(s.real)
    if isinstance(s, float) and s == int(s) and s <= 0:
        return int(s)
    return None


def _zeta_exact(n: int, x: Fraction, q: Fraction, budget: SeriesBudget, start: int):
    """Exact partial sum of [2]_q sum_{m>=start} (-1)^m q^m (m+x)^n, with tail bound."""
    two_q = q_bracket(2, q)
    scale = abs(float(two_q))
    q_abs = abs(float(q))
    xf = float(x)
    acc = Fraction(0)
    qa = q**start
    m = start
    while True:
        acc += (-1) ** m * qa * (m + x) ** n
        m += 1
        qa *= q
        bound = _tail_bound(q_abs, m, xf, float(n), scale)
        if bound < budget.tolerance:
            return two_q * acc, bound
        if m - start >= budget.max_terms:
            raise SeriesBudgetError(
                f"no certified tail after {budget.max_terms} terms",
                complex(two_q * acc),
                bound,
            )


def _zeta_float(s: complex, x: float, q: complex, budget: SeriesBudget, start: int):
    two_q = 1 + q
    scale = abs(two_q)
    q_abs = abs(q)
    sigma = max(0.0, -s.real)
    total, comp = 0j, 0j
    qa = q**start
    m = start
    while True:
        base = m + x
        term = (-1) ** m * qa * cmath.exp(-s * cmath.log(base)) if base != 0 else 0j
        total, comp = _kahan_add(total, comp, term)
        m += 1
        qa *= q
        bound = _tail_bound(q_abs, m, x, sigma, scale)
        if bound < budget.tolerance:
            return two_q * total, bound
        if m - start >= budget.max_terms:
            raise SeriesBudgetError(
                f"no certified tail after {budget.max_terms} terms",
                two_q * total,
                bound,
            )


def zeta_qE(s, x, q, budget: SeriesBudget = DEFAULT_BUDGET) -> complex:
    """[2]_q sum_{n>=0} (-1)^n q^n (n+x)^(-s) for x > 0, |q| < 1.

    (n+x)^(-s) uses the principal branch; n+x stays on the positive real
    axis so no cut is crossed.  At s = -n the n = 0 term contributes
    x^n with the 0^0 = 1 convention.
    """
    value, _ = zeta_qE_with_bound(s, x, q, budget)
    return value


def zeta_qE_with_bound(s, x, q, budget: SeriesBudget = DEFAULT_BUDGET):
    """As zeta_qE, also returning the certified tail bound."""
    qv = _as_unit_disk_q(q)
    if isinstance(x, complex):
        raise TypeError("x must be a positive real number")
    xv = Fraction(x)
    if xv <= 0:
        raise ValueError("x must be > 0")
    n = _is_nonpositive_int(s)
    if n is not None and isinstance(qv, Fraction):
        value, bound = _zeta_exact(-n, xv, qv, budget, start=0)
        return complex(value), bound
    return _zeta_float(complex(s), float(xv), complex(qv), budget, start=0)


def zeta_qE_at(s, q, budget: SeriesBudget = DEFAULT_BUDGET) -> complex:
    """[2]_q sum_{n>=1} (-1)^n q^n n^(-s).

    Because the sum starts at n = 1, the value at s = 0 is -q, which
    differs from E_{0,q} = 1 by exactly [2]_q (the documented n = 0
    anomaly of the special-value chain).
    """
    qv = _as_unit_disk_q(q)
    n = _is_nonpositive_int(s)
    if n is not None and isinstance(qv, Fraction):
        value, _ = _zeta_exact(-n, Fraction(0), qv, budget, start=1)
        return complex(value)
    value, _ = _zeta_float(complex(s), 0.0, complex(qv), budget, start=1)
    return value


def l_q_series(s, chi, q, budget: SeriesBudget = DEFAULT_BUDGET) -> complex:
    """[2]_q sum_{n>=1} (-1)^n q^n chi(n) n^(-s).

    Character values are taken through the fixed complex embedding of
    the cyclotomic field (canonical root of unity of order m to
    exp(2*pi*i/m)).
    """
    qv = _as_unit_disk_q(q)
    n = _is_nonpositive_int(s)
    if n is not None and isinstance(qv, Fraction):
        return complex(_l_q_exact(-n, chi, qv, budget))
    return _l_q_float(complex(s), chi, complex(qv), budget)


def _l_q_exact(n: int, chi, q: Fraction, budget: SeriesBudget):
    two_q = q_bracket(2, q)
    scale = abs(float(two_q))
    q_abs = abs(float(q))
    vals = [chi(r) for r in range(chi.modulus)] if chi.modulus > 1 else [chi(0)]
    acc = None
    qa = Fraction(1)
    m = 0
    while True:
        m += 1
        qa *= q
        cv = vals[m % chi.modulus] if chi.modulus > 1 else vals[0]
        if cv != 0:
            term = (-1) ** m * qa * m**n * cv
            acc = term if acc is None else acc + term
        bound = _tail_bound(q_abs, m + 1, 0.0, float(n), scale)
        if bound < budget.tolerance:
            return two_q * acc if acc is not None else Fraction(0)
        if m >= budget.max_terms:
            raise SeriesBudgetError(
                f"no certified tail after {budget.max_terms} terms",
                complex(two_q * acc) if acc is not None else 0j,
                bound,
            )


def _l_q_float(s: complex, chi, q: complex, budget: SeriesBudget):
    two_q = 1 + q
    scale = abs(two_q)
    q_abs = abs(q)
    sigma = max(0.0, -s.real)
    vals = [complex(chi(r)) for r in range(chi.modulus)] if chi.modulus > 1 else [complex(chi(0))]
    total, comp = 0j, 0j
    qa = 1 + 0j
    m = 0
    while True:
        m += 1
        qa *= q
        cv = vals[m % chi.modulus] if chi.modulus > 1 else vals[0]
        if cv != 0:
            term = (-1) ** m * qa * cv * cmath.exp(-s * cmath.log(m))
            total, comp = _kahan_add(total, comp, term)
        bound = _tail_bound(q_abs, m + 1, 0.0, sigma, scale)
        if bound < budget.tolerance:
            return two_q * total
        if m >= budget.max_terms:
            raise SeriesBudgetError(
                f"no certified tail after {budget.max_terms} terms",
                two_q * total,
                bound,
            )


def partial_zeta_Hq(
    s, a: int, F: int, q, budget: SeriesBudget = DEFAULT_BUDGET, mode: str = "closed"
) -> complex:
    """Partial q-zeta over the residue class a mod F (0 < a < F, F odd).

    mode="closed" evaluates (-1)^a q^a F^(-s) ([2]_q/[2]_{q^F})
    zeta_{q^F,E}(s, a/F); mode="direct" sums [2]_q (-1)^m q^m m^(-s)
    over m = a, a+F, a+2F, ... as an independent cross-check.
    """
    if not 0 < a < F:
        raise ValueError("need 0 < a < F")
    if F % 2 == 0:
        raise ValueError("F must be odd")
    qv = _as_unit_disk_q(q)
    if mode == "closed":
        # the prefactor scales the inner series' truncation error, so the
        # inner evaluation runs at a correspondingly tighter tolerance
        if isinstance(qv, Fraction):
            n = _is_nonpositive_int(s)
            if n is not None:
                pref = (
                    (-1) ** a
                    * qv**a
                    * Fraction(F) ** (-n)
                    * q_bracket(2, qv)
                    / q_bracket(2, qv**F)
                )
                inner_budget = SeriesBudget(
                    tolerance=budget.tolerance / max(1.0, abs(float(pref))),
                    max_terms=budget.max_terms,
                )
                inner, _ = _zeta_exact(-n, Fraction(a, F), qv**F, inner_budget, start=0)
                return complex(pref * inner)
        qc = complex(qv)
        pref = (
            (-1) ** a
            * qc**a
            * cmath.exp(-complex(s) * cmath.log(F))
            * (1 + qc)
            / (1 + qc**F)
        )
        inner_budget = SeriesBudget(
            tolerance=budget.tolerance / max(1.0, abs(pref)),
            max_terms=budget.max_terms,
        )
        inner, _ = _zeta_float(complex(s), a / F, qc**F, inner_budget, start=0)
        return pref * inner
    if mode != "direct":
        raise ValueError(f"unknown mode {mode!r}")
    return _partial_direct(s, a, F, qv, budget)


def _partial_direct(s, a, F, qv, budget: SeriesBudget):
    n = _is_nonpositive_int(s)
    if n is not None and isinstance(qv, Fraction):
        k = -n
        two_q = q_bracket(2, qv)
        acc = Fraction(0)
        qa = qv**a
        m = a
        while True:
            acc += (-1) ** m * qa * m**k
            m += F
            qa *= qv**F
            bound = _tail_bound(abs(float(qv)), m, 0.0, float(k), abs(float(two_q)))
            if bound < budget.tolerance:
                return complex(two_q * acc)
            if m > a + budget.max_terms * F:
                raise SeriesBudgetError("no certified tail", complex(two_q * acc), bound)
    q = complex(qv)
    sc = complex(s)
    sigma = max(0.0, -sc.real)
    total, comp = 0j, 0j
    qa = q**a
    qF = q**F
    m = a
    while True:
        term = (-1) ** m * qa * cmath.exp(-sc * cmath.log(m))
        total, comp = _kahan_add(total, comp, term)
        m += F
        qa *= qF
        bound = _tail_bound(abs(q), m, 0.0, sigma, abs(1 + q))
        if bound < budget.tolerance:
            return (1 + q) * total
        if m > a + budget.max_terms * F:
            raise SeriesBudgetError("no certified tail", (1 + q) * total, bound)
