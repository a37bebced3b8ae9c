"""p-adic interpolation of the generalized q-Euler numbers.

The interpolating function is assembled from per-residue terms

    H(s, a | F) = (-1)^a q^a <a>^(-s) ([2]_q/[2]_{q^F})
                  sum_k C(-s, k) (F/a)^k E_{k,q^F}

summed over 1 <= a <= F with p not dividing a, weighted by chi(a).  The
k-series converges on Z_p because p | F and p does not divide a, so the
k-th term has valuation at least k - v_p(k!); the truncation point K is
chosen from that bound and the first dropped term is checked at runtime.

At s = -n the value equals the generalized number attached to the twist
chi_n = chi * omega^(-n), taken pointwise at modulus lcm(d, p) (the twist
keeps p in its modulus, so its value at p vanishes and the "remove the
p-part" factor is identically absorbed).  The classical specialization
q = 1 is provided as an independent code path.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .characters import (
    DirichletCharacter,
    EmbeddedCharacter,
    EmbeddingError,
    OmegaTwist,
    embed_cyclotomic,
)
from .cyclotomic import CyclotomicRational
from .euler import euler_number_q, gen_euler_number
from .integral import angle
from .ntheory import int_valuation, is_prime
from .padic import Padic, PrecisionLossError
from .scalars import QParameter, q_bracket


def series_truncation_point(p: int, M: int) -> int:
    """Smallest K with K (p-2)/(p-1) >= M (dropped terms then sit above p^M)."""
    return -(-M * (p - 1) // (p - 2))


def _factorial_valuation(k: int, p: int) -> int:
    v = 0
    pk = p
    while pk <= k:
        v += k // pk
        pk *= p
    return v


@dataclass(frozen=True)
class PLContext:
    """Prime, q, character, period F, target precision M and truncation K."""

    p: int
    q: QParameter | Fraction | Padic
    chi: DirichletCharacter
    F: int
    M: int = 12
    K: int | None = None

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise ValueError("p must be an odd prime")
        if self.M < 1:
            raise ValueError("M must be >= 1")
        q = self.q if isinstance(self.q, QParameter) else (
            QParameter.padic(self.q) if isinstance(self.q, Padic) else QParameter.exact(Fraction(self.q))
        )
        if q.kind == "float":
            raise ValueError("p-adic interpolation needs exact rational or p-adic q")
        if q.kind == "exact" and q.value != 1:
            d = 1 - q.value
            if int_valuation(d.numerator, self.p) - int_valuation(d.denominator, self.p) < 1:
                raise ValueError("|1-q|_p < 1 is required")
        object.__setattr__(self, "q", q)
        if (self.p - 1) % self.chi.order:
            raise EmbeddingError(
                f"character order {self.chi.order} does not divide p - 1 = {self.p - 1}"
            )
        if self.F % 2 == 0 or self.F < 1:
            raise ValueError("F must be odd and positive")
        if self.F % self.p:
            raise ValueError("F must be a multiple of p")
        if self.F % self.chi.conductor:
            raise ValueError("F must be a multiple of the conductor")
        if self.K is None:
            object.__setattr__(self, "K", series_truncation_point(self.p, self.M))

    @property
    def chi_eff(self) -> DirichletCharacter:
        """The character actually evaluated: as given when F absorbs its
        modulus, otherwise its primitive part (F is conductor-admissible)."""
        if self.F % self.chi.modulus == 0:
            return self.chi
        return self.chi.primitive_part()

    @property
    def work_prec(self) -> int:
        return self.M + _factorial_valuation(self.K + 1, self.p) + 6

    def q_padic(self) -> Padic:
        qs = self.q.value
        if isinstance(qs, Padic):
            if qs.abs_prec() < self.work_prec:
                raise PrecisionLossError(
                    f"q carries {qs.abs_prec()} digits, {self.work_prec} needed"
                )
            return qs.at_prec(self.work_prec)
        return Padic.from_rational(qs, self.p, self.work_prec)

    def q_exact(self) -> Fraction | None:
        qs = self.q.value
        return qs if isinstance(qs, Fraction) else None


def _coerce_s(s, p: int, prec: int) -> Padic:
    if isinstance(s, Padic):
        if s.p != p:
            raise ValueError("s lives at a different prime")
        return s
    sp = Padic.from_rational(Fraction(s), p, prec)
    return sp


def _check_disk(s: Padic):
    # |s|_p < p^(1 - 1/(p-1)) intersected with Q_p is exactly Z_p
    if not s.is_zero() and s.valuation() < 0:
        raise ValueError("s lies outside the analyticity disk (need s in Z_p)")


def _certified_series(s: Padic, factors: list[Padic], M: int, W: int) -> Padic:
    """sum_{k<=K} C(-s,k) factors[k]; factors has K+2 entries and the last
    one is the first dropped term, asserted to sit above p^M."""
    p = s.p
    binom = Padic(p, 0, 1, W)
    acc = Padic.zero(p)
    neg_s = -s
    for k in range(len(factors) - 1):
        acc = acc + binom * factors[k]
        binom = binom * (neg_s - Padic.from_int(k, p, W)) / Padic.from_int(k + 1, p, W)
    dropped = binom * factors[-1]
    if not (dropped.is_zero() or dropped.valuation() >= M):
        raise PrecisionLossError(
            f"first dropped series term has valuation {dropped.valuation()} < {M}"
        )
    return acc


def angle_power(a: int, s, ctx: PLContext) -> Padic:
    """<a>^(-s) by the binomial series in (<a> - 1), certified below p^(-M).

    For integer s this telescopes to the direct power of the
    principal-unit part (asserted in the tests).
    """
    p, W = ctx.p, ctx.work_prec
    if a % p == 0:
        raise ValueError("a must be a p-adic unit")
    sp = _coerce_s(s, p, W)
    _check_disk(sp)
    b = angle(a, p, W) - 1
    factors = []
    bk = Padic(p, 0, 1, W)
    for _ in range(ctx.K + 2):
        factors.append(bk)
        bk = bk * b
    return _certified_series(sp, factors, ctx.M, W)


def _euler_factors(ctx: PLContext, exponent: int) -> list[Padic]:
    """E_{k, q^exponent} embedded in Z_p for k = 0 .. K+1."""
    W = ctx.work_prec
    qe = ctx.q_exact()
    if qe is not None:
        qF = qe**exponent
        return [
            Padic.from_rational(euler_number_q(k, qF), ctx.p, W)
            for k in range(ctx.K + 2)
        ]
    qF = ctx.q_padic() ** exponent
    return [euler_number_q(k, qF) for k in range(ctx.K + 2)]


def H_pq(s, a: int, ctx: PLContext) -> Padic:
    """One residue term of the interpolating sum (p must not divide a)."""
    p, W = ctx.p, ctx.work_prec
    if a % p == 0:
        raise ValueError("p divides a; the term is excluded from the sum")
    if not 0 < a < ctx.F:
        raise ValueError("need 0 < a < F")
    sp = _coerce_s(s, p, W)
    _check_disk(sp)
    qp = ctx.q_padic()
    ratio = Padic.from_rational(Fraction(ctx.F, a), p, W)
    euler = _euler_factors(ctx, ctx.F)
    factors = []
    rk = Padic(p, 0, 1, W)
    for k in range(ctx.K + 2):
        factors.append(rk * euler[k])
        rk = rk * ratio
    series = _certified_series(sp, factors, ctx.M, W)
    two_ratio = q_bracket(2, qp) / q_bracket(2, qp**ctx.F)
    return (-1) ** a * qp**a * angle_power(a, sp, ctx) * two_ratio * series


def l_pq(s, ctx: PLContext) -> Padic:
    """The interpolating function: chi-weighted sum of H terms over units a <= F.

    The returned value's carried precision is the minimum surviving over
    the terms (slack relative to M is visible on the result).
    """
    p = ctx.p
    sp = _coerce_s(s, p, ctx.work_prec)
    _check_disk(sp)
    emb = EmbeddedCharacter(ctx.chi_eff, p, ctx.work_prec)
    acc = Padic.zero(p)
    for a in range(1, ctx.F + 1):
        if a % p == 0:
            continue
        cv = emb(a)
        if cv.is_zero():
            continue
        acc = acc + cv * H_pq(sp, a, ctx)
    return acc


def thm7b_rhs(n: int, ctx: PLContext, primitive: bool = False) -> Padic:
    """Closed-form value at s = -n through the twisted generalized numbers.

    Default: the twist is evaluated pointwise at modulus lcm(d, p), whose
    value at p vanishes, so the correction term dies and the result is the
    single generalized number.  With primitive=True the primitive part of
    the twist is used instead and the correction term
    p^n chi_n(p) ([2]_q/[2]_{q^p}) E_{n,chi_n,q^p} is live; the two forms
    agree identically (tested).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p, W = ctx.p, ctx.work_prec
    tw = OmegaTwist(ctx.chi_eff, p, n)
    char = tw.primitive() if primitive else tw.as_character
    Fw = max(1, char.modulus)
    if Fw % 2 == 0:
        raise ValueError("twist modulus must stay odd")
    qe = ctx.q_exact()
    if qe is not None:
        e_q = gen_euler_number(n, char, qe, Fw)
        e_qp = gen_euler_number(n, char, qe**p, Fw)
        chi_p = char(p)
        correction = (
            Fraction(p) ** n
            * chi_p
            * q_bracket(2, qe)
            / q_bracket(2, qe**p)
            * e_qp
        )
        value = e_q - correction
        if isinstance(value, CyclotomicRational):
            return embed_cyclotomic(value, p, W)
        return Padic.from_rational(value, p, W)
    qp = ctx.q_padic()
    emb = EmbeddedCharacter(char, p, W)
    e_q = gen_euler_number(n, emb, qp, Fw)
    e_qp = gen_euler_number(n, emb, qp**p, Fw)
    correction = (
        Padic.from_int(p, p, W) ** n
        * emb(p)
        * (q_bracket(2, qp) / q_bracket(2, qp**p))
        * e_qp
    )
    return e_q - correction


def corollary8_lp(s, chi: DirichletCharacter, p: int, M: int, F: int) -> Padic:
    """The q = 1 specialization, written as its own code path.

    The [2] weights collapse to 1 and the interpolated numbers are the
    classical ones; must agree with l_pq at q = 1 (tested at seeded
    points).
    """
    ctx = PLContext(p=p, q=QParameter.exact(1), chi=chi, F=F, M=M)
    W = ctx.work_prec
    sp = _coerce_s(s, p, W)
    _check_disk(sp)
    classical = [
        Padic.from_rational(euler_number_q(k, Fraction(1)), p, W)
        for k in range(ctx.K + 2)
    ]
    emb = EmbeddedCharacter(ctx.chi_eff, p, W)
    acc = Padic.zero(p)
    for a in range(1, F + 1):
        if a % p == 0:
            continue
        cv = emb(a)
        if cv.is_zero():
            continue
        ratio = Padic.from_rational(Fraction(F, a), p, W)
        factors = []
        rk = Padic(p, 0, 1, W)
        for k in range(ctx.K + 2):
            factors.append(rk * classical[k])
            rk = rk * ratio
        series = _certified_series(sp, factors, M, W)
        acc = acc + (-1) ** a * cv * angle_power(a, sp, ctx) * series
    return acc


def twist_for(ctx: PLContext, n: int) -> OmegaTwist:
    """The twist interpolated at s = -n (shared by the integral path)."""
    return OmegaTwist(ctx.chi_eff, ctx.p, n)
