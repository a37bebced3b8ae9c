from fractions import Fraction

import pytest

from qeuler.characters import (
    EmbeddedCharacter,
    EmbeddingError,
    OmegaTwist,
    embed_cyclotomic,
    enumerate_characters,
    trivial_character,
)
from qeuler.euler import euler_number_q, euler_poly_q, gen_euler_number
from qeuler.integral import MeasureContext, witt_restricted_units
from qeuler.padic import Padic, PrecisionLossError, padic_from_rational
from qeuler.padic_l import (
    H_pq,
    PLContext,
    angle_power,
    corollary8_lp,
    l_pq,
    series_truncation_point,
    thm7b_rhs,
    twist_for,
)
from qeuler.scalars import QParameter, q_bracket


def quad(d):
    return next(c for c in enumerate_characters(d) if c.order == 2)


def ctx_for(p, qv, chi=None, M=12, F=None):
    chi = chi if chi is not None else trivial_character(1)
    if F is None:
        F = p
        while F % chi.conductor or F % 2 == 0:
            F += p
    return PLContext(p=p, q=QParameter.exact(qv), chi=chi, F=F, M=M)


def test_truncation_point_matches_valuation_bound():
    assert series_truncation_point(3, 12) == 24
    assert series_truncation_point(5, 12) == 16
    assert series_truncation_point(7, 12) == 15
    for p in (3, 5, 7):
        K = series_truncation_point(p, 12)
        assert K * (p - 2) / (p - 1) >= 12 > (K - 1) * (p - 2) / (p - 1)


def test_angle_power_at_zero_is_one():
    ctx = ctx_for(5, Fraction(6))
    assert angle_power(2, 0, ctx).congruent_to(1, 12)


def test_angle_power_integer_exponents_match_direct_power():
    from qeuler.integral import angle

    ctx = ctx_for(5, Fraction(6))
    W = ctx.work_prec
    for a in (2, 3, 7):
        av = angle(a, 5, W)
        for s in (-1, -2, -5, 3):
            got = angle_power(a, s, ctx)
            assert got.congruent_to(av ** (-s), 12)


def test_angle_power_example_p5():
    # <2> = 11 mod 25, so <2>^2 = 121 = 21 mod 25
    ctx = ctx_for(5, Fraction(6), M=10)
    got = angle_power(2, -2, ctx)
    assert got.congruent_to(21, 2)


def test_angle_power_domain_error():
    ctx = ctx_for(5, Fraction(6))
    with pytest.raises(ValueError):
        angle_power(2, Fraction(1, 5), ctx)


def test_H_term_at_s_zero_of_top_residue():
    p = 5
    qv = Fraction(6)
    ctx = ctx_for(p, qv)
    F = ctx.F
    a = F - 1
    got = H_pq(0, a, ctx)
    want = padic_from_rational(
        (-1) ** a * qv**a * q_bracket(2, qv) / q_bracket(2, qv**F), p, ctx.work_prec
    )
    assert got.congruent_to(want, 12)


def test_H_term_interpolates_partial_zeta():
    # at s = -n the term equals omega^(-n)(a) times the exact partial-zeta
    # special value
    p, qv = 5, Fraction(6)
    ctx = ctx_for(p, qv, M=10)
    F = ctx.F
    from qeuler.padic import teichmuller_lift

    W = ctx.work_prec
    for n in (1, 2, 3):
        for a in (1, 2, 4):
            raw = (
                (-1) ** a
                * qv**a
                * F**n
                * q_bracket(2, qv)
                / q_bracket(2, qv**F)
                * euler_poly_q(n, Fraction(a, F), qv**F)
            )
            om = pow(teichmuller_lift(a, p, W), (-n) % (p - 1), p**W)
            want = padic_from_rational(raw, p, W) * Padic.from_int(om, p, W)
            assert H_pq(-n, a, ctx).congruent_to(want, 10)


def test_H_series_terminates_for_integer_s():
    # C(n, k) vanishes beyond k = n, so tightening K cannot change the value
    p, qv = 5, Fraction(6)
    base = ctx_for(p, qv, M=10)
    small = PLContext(p=p, q=QParameter.exact(qv), chi=base.chi, F=base.F, M=10, K=6)
    for a in (1, 2):
        x = H_pq(-3, a, base)
        y = H_pq(-3, a, small)
        assert x.congruent_to(y, 10)


def test_l_interpolates_twisted_numbers():
    # the closed form at s = -n, both through the pointwise twist and the
    # primitive twist with its live correction factor
    for p, qv in ((3, Fraction(4)), (5, Fraction(1)), (7, Fraction(8))):
        ctx = ctx_for(p, qv, M=12)
        for n in (1, 2, 3, 4):
            series = l_pq(-n, ctx)
            closed = thm7b_rhs(n, ctx)
            closed_prim = thm7b_rhs(n, ctx, primitive=True)
            assert series.congruent_to(closed, 10), (p, qv, n)
            assert closed.congruent_to(closed_prim, 10), (p, qv, n)


def test_l_matches_unit_restricted_integral():
    for p, qv in ((3, Fraction(4)), (5, Fraction(6))):
        ctx = ctx_for(p, qv, M=10)
        for n in (1, 2, 3):
            tw = twist_for(ctx, n)
            mctx = MeasureContext(p=p, q=QParameter.exact(qv), d=tw.modulus, precision=10)
            integral = witt_restricted_units(n, tw, mctx)
            assert l_pq(-n, ctx).congruent_to(integral, 8), (p, qv, n)


def test_l_with_quadratic_character():
    chi = quad(3)
    for p in (5, 7):
        ctx = ctx_for(p, Fraction(1 + p), chi=chi, M=10)
        for n in (1, 2, 3):
            assert l_pq(-n, ctx).congruent_to(thm7b_rhs(n, ctx), 8), (p, n)


def test_twist_correction_term_vanishes_pointwise():
    ctx = ctx_for(5, Fraction(6), M=10)
    tw = twist_for(ctx, 4)  # -4 = 0 mod 4, the omega part is trivial
    assert tw.as_character(5) == 0
    assert tw.primitive().modulus == 1
    assert tw.primitive()(5) == 1


def test_p_multiples_subsum_equals_euler_factor():
    # the p-part of the residue sum collapses, through the measure scaling,
    # to the Euler-factor correction of the primitive twist
    p, qv, n = 5, Fraction(6), 4
    ctx = ctx_for(p, qv, M=10)
    tw = twist_for(ctx, n)
    prim = tw.primitive()
    F = ctx.F * p  # keep F/p a multiple of the twist conductor
    full = sum(
        prim(a)
        * (-1) ** a
        * qv**a
        * F**n
        * q_bracket(2, qv)
        / q_bracket(2, qv**F)
        * euler_poly_q(n, Fraction(a, F), qv**F)
        for a in range(1, F + 1)
    )
    pmult = sum(
        prim(p * b)
        * (-1) ** (p * b)
        * qv ** (p * b)
        * F**n
        * q_bracket(2, qv)
        / q_bracket(2, qv**F)
        * euler_poly_q(n, Fraction(p * b, F), qv**F)
        for b in range(1, F // p + 1)
    )
    assert full == gen_euler_number(n, prim, qv, F)
    euler_factor = (
        Fraction(p) ** n
        * prim(p)
        * q_bracket(2, qv)
        / q_bracket(2, qv**p)
        * gen_euler_number(n, prim, qv**p, F // p)
    )
    assert pmult == euler_factor
    assert full - pmult == gen_euler_number(n, twist_for(ctx, n).as_character, qv, F)


def test_corollary8_matches_general_path_at_q_one():
    for p in (3, 5, 7):
        chi = trivial_character(1)
        F = p
        ctx = PLContext(p=p, q=QParameter.exact(1), chi=chi, F=F, M=10)
        for s in (0, -1, -3, 7, 12):
            a = corollary8_lp(s, chi, p, 10, F)
            b = l_pq(s, ctx)
            assert a.congruent_to(b, 8), (p, s)


def test_corollary8_special_values_match_integral():
    p, n = 5, 2
    chi = trivial_character(1)
    ctx = PLContext(p=p, q=QParameter.exact(1), chi=chi, F=p, M=10)
    tw = twist_for(ctx, n)
    mctx = MeasureContext(p=p, q=QParameter.exact(1), d=tw.modulus, precision=10)
    integral = witt_restricted_units(n, tw, mctx)
    assert corollary8_lp(-n, chi, p, 10, p).congruent_to(integral, 8)


def test_padic_q_route_agrees_with_exact_route():
    p, M = 5, 10
    chi = trivial_character(1)
    exact_ctx = PLContext(p=p, q=QParameter.exact(6), chi=chi, F=p, M=M)
    q_pad = Padic.from_int(6, p, exact_ctx.work_prec + 2)
    padic_ctx = PLContext(p=p, q=QParameter.padic(q_pad), chi=chi, F=p, M=M)
    for n in (1, 2, 3):
        assert l_pq(-n, exact_ctx).congruent_to(l_pq(-n, padic_ctx), M - 1)
        assert thm7b_rhs(n, exact_ctx).congruent_to(thm7b_rhs(n, padic_ctx), M - 1)


def test_analyticity_lipschitz_proxy():
    # moving s by p^j moves the value by O(p^j)
    p = 5
    ctx = ctx_for(p, Fraction(6), M=14)
    base = l_pq(3, ctx)
    for j in (3, 4, 5, 6):
        moved = l_pq(3 + p**j * 2, ctx)
        assert (moved - base).valuation() >= j


def test_context_validation():
    chi = quad(5)
    with pytest.raises(ValueError):
        PLContext(p=5, q=QParameter.exact(6), chi=chi, F=10, M=8)  # even F
    with pytest.raises(ValueError):
        PLContext(p=5, q=QParameter.exact(6), chi=quad(3), F=5, M=8)  # conductor 3 missing
    with pytest.raises(ValueError):
        PLContext(p=3, q=QParameter.exact(6), chi=trivial_character(1), F=5, M=8)  # p | F fails
    # an order-4 character cannot embed at p = 3
    chi4 = next(c for c in enumerate_characters(5) if c.order == 4)
    with pytest.raises(EmbeddingError):
        PLContext(p=3, q=QParameter.exact(4), chi=chi4, F=15, M=8)


def test_q_admissibility():
    with pytest.raises(ValueError):
        PLContext(p=5, q=QParameter.exact(Fraction(1, 2)), chi=trivial_character(1), F=5, M=8)
