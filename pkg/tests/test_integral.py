from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler.characters import enumerate_characters, trivial_character
from qeuler.euler import classical_euler, euler_number_q
from qeuler.integral import (
    Integrand,
    MeasureContext,
    angle,
    measure_additivity_residual,
    measure_scaling_residual,
    mu_value,
    riemann_sum,
    teichmuller,
    witt_euler,
    witt_gen_euler,
    witt_level_sum,
    witt_restricted_units,
)
from qeuler.padic import Padic, fraction_valuation, padic_from_rational
from qeuler.scalars import QParameter, q_bracket


def ctx_exact(p, q, d=1, M=10):
    return MeasureContext(p=p, q=QParameter.exact(q), d=d, precision=M)


# -- measure values ------------------------------------------------------------


def test_mu_at_zero_is_inverse_bracket():
    ctx = ctx_exact(3, Fraction(2, 5))
    for N in (1, 2, 3):
        assert mu_value(0, N, ctx) == 1 / q_bracket(3**N, Fraction(2, 5), minus=True)


def test_mu_total_mass_is_one():
    q = Fraction(2, 5)
    ctx = ctx_exact(3, q)
    total = sum(mu_value(a, 1, ctx) for a in range(3))
    assert total == 1
    # the level-1 normalizer is 1 - q + q^2
    assert q_bracket(3, q, minus=True) == 1 - q + q * q


def test_mu_additivity_instance():
    q = Fraction(3, 7)
    ctx = ctx_exact(5, q)
    for a in (0, 2, 4):
        children = sum(mu_value(a + i * 5, 2, ctx) for i in range(5))
        assert mu_value(a, 1, ctx) == children


# -- Riemann sums ----------------------------------------------------------------


def test_constant_integrand_sums_to_one_every_level():
    ctx = ctx_exact(3, Fraction(1, 4))
    for N in (0, 1, 2, 3):
        assert riemann_sum(Integrand(0), N, ctx) == 1


def test_linear_integrand_level_one():
    q = Fraction(2, 5)
    ctx = ctx_exact(3, q)
    expected = (-q + 2 * q * q) / (1 - q + q * q)
    assert riemann_sum(Integrand(1), 1, ctx) == expected


def test_unit_restriction_drops_only_zero_terms_for_linear():
    q = Fraction(2, 5)
    ctx = ctx_exact(3, q)
    # x = 0 contributes 0 to the linear integrand, so the restricted sum at
    # level 1 equals the unrestricted one
    assert riemann_sum(Integrand(1, units_only=True), 1, ctx) == riemann_sum(
        Integrand(1), 1, ctx
    )


def test_riemann_sum_blocks_recombine_exactly():
    # splitting the summation range cannot change the exact value
    q = Fraction(1, 3)
    ctx = ctx_exact(3, q)
    full = riemann_sum(Integrand(2), 2, ctx)
    parts = Fraction(0)
    for x in range(9):
        parts += Fraction(x) ** 2 * (-q) ** x
    assert parts / q_bracket(9, q, minus=True) == full


# -- measure laws as polynomial identities -----------------------------------------


@given(
    p=st.sampled_from([3, 5]),
    N=st.integers(0, 4),
    d=st.sampled_from([1, 3]),
    data=st.data(),
)
@settings(max_examples=40, deadline=None)
def test_measure_additivity_polynomial_identity(p, N, d, data):
    a = data.draw(st.integers(0, d * p**N - 1))
    assert measure_additivity_residual(p, N, a, d) == {}


@given(p=st.sampled_from([3, 5]), N=st.integers(0, 4), data=st.data())
@settings(max_examples=40, deadline=None)
def test_measure_scaling_polynomial_identity(p, N, data):
    a = data.draw(st.integers(0, p**N - 1))
    assert measure_scaling_residual(p, N, a) == {}


# -- functional-equation defect ----------------------------------------------------


def test_translation_defect_valuation_grows():
    q = Fraction(4, 1)  # 1 + 3, so |1-q|_3 < 1
    ctx = ctx_exact(3, q)
    for k in (1, 2, 3):
        vals = []
        for N in range(1, 6):
            defect = (
                q * riemann_sum(Integrand(k, shift=1), N, ctx)
                + riemann_sum(Integrand(k), N, ctx)
                - q_bracket(2, q) * (1 if k == 0 else 0)
            )
            vals.append(fraction_valuation(defect, 3))
        assert all(v2 >= v1 for v1, v2 in zip(vals[1:], vals[2:]))
        assert vals[-1] >= 4


def test_fermionic_translation_at_q_one():
    # the alternating measure at q = 1 satisfies
    # I(f(x+1)) + I(f) = 2 f(0), checked through exact level sums
    ctxq = ctx_exact(3, Fraction(1), M=8)
    for k in (0, 1, 2, 3):
        for N in (6, 7):
            defect = riemann_sum(Integrand(k, shift=1), N, ctxq) + riemann_sum(
                Integrand(k), N, ctxq
            ) - 2 * (1 if k == 0 else 0)
            assert fraction_valuation(defect, 3) >= N - 1


# -- fast kernel vs definitional loop -----------------------------------------------


def test_fast_kernel_matches_naive_plain():
    ctx = ctx_exact(3, Fraction(4), M=10)
    for n in range(5):
        for N in (1, 2, 3):
            exact = riemann_sum(Integrand(n), N, ctx)
            fast = witt_level_sum(n, ctx, N)
            assert fast.indistinguishable_from(
                padic_from_rational(exact, 3, fast.prec)
            )


def test_fast_kernel_matches_naive_with_character():
    chi = next(c for c in enumerate_characters(3) if not c.is_trivial())
    ctx = MeasureContext(p=5, q=QParameter.exact(6), d=3, precision=8)
    for n in range(4):
        for N in (1, 2):
            exact = riemann_sum(Integrand(n, chi=chi), N, ctx)
            fast = witt_level_sum(n, ctx, N, chi=chi)
            assert fast.indistinguishable_from(
                padic_from_rational(Fraction(exact), 5, fast.prec)
            )


def test_fast_kernel_matches_naive_units_only():
    chi = trivial_character(1)
    ctx = MeasureContext(p=3, q=QParameter.exact(4), d=1, precision=8)
    for n in range(4):
        exact = riemann_sum(Integrand(n, units_only=True), 2, ctx)
        fast = witt_level_sum(n, ctx, 2, chi=chi, units_only=True)
        assert fast.indistinguishable_from(padic_from_rational(exact, 3, fast.prec))


# -- Witt-style evaluations -----------------------------------------------------------


def test_witt_constant_is_one():
    ctx = ctx_exact(5, Fraction(6), M=8)
    v = witt_euler(0, ctx)
    assert v.congruent_to(1, 8)


def test_witt_linear_matches_closed_form():
    # E_{1,q} = -q/(1+q) at q = 1 + 3
    M = 8
    ctx = ctx_exact(3, Fraction(4), M=M)
    v = witt_euler(1, ctx)
    assert v.congruent_to(padic_from_rational(Fraction(-4, 5), 3, M), M)


def test_witt_classical_e4_vanishes():
    ctx = ctx_exact(5, Fraction(1), M=8)
    v = witt_euler(4, ctx)
    assert v.is_zero() or v.valuation() >= 8
    assert classical_euler(4) == 0


def test_witt_level_agreement_rate():
    for p in (3, 5):
        for qv in (Fraction(1), Fraction(1 + p)):
            ctx = ctx_exact(p, qv, M=12)
            for n in range(7):
                target = padic_from_rational(euler_number_q(n, qv), p, 20)
                for N in range(1, 7):
                    diff = witt_level_sum(n, ctx, N) - target
                    assert diff.valuation() >= N - 2


def test_witt_gen_euler_reduces_to_witt_euler_for_trivial_character():
    ctx = ctx_exact(5, Fraction(6), M=8)
    chi = trivial_character(1)
    for n in (1, 2, 3):
        a = witt_gen_euler(n, chi, ctx)
        b = witt_euler(n, ctx)
        assert a.indistinguishable_from(b)


def test_witt_gen_euler_quadratic_mod3():
    from qeuler.characters import embed_cyclotomic
    from qeuler.euler import gen_euler_number

    chi = next(c for c in enumerate_characters(3) if not c.is_trivial())
    M = 8
    ctx = MeasureContext(p=5, q=QParameter.exact(1), d=3, precision=M)
    for n in (0, 1, 2):
        got = witt_gen_euler(n, chi, ctx)
        want = embed_cyclotomic(Fraction(gen_euler_number(n, chi, Fraction(1), 3)), 5, M)
        assert got.congruent_to(want, M - 1)


def test_witt_restricted_units_drops_p_multiples():
    # with an omega twist the p | x terms vanish anyway, so restricted and
    # unrestricted sums agree
    from qeuler.characters import OmegaTwist

    tw = OmegaTwist(trivial_character(1), 3, 2)
    ctx = MeasureContext(p=3, q=QParameter.exact(4), d=1, precision=8)
    a = witt_restricted_units(2, tw, ctx)
    b = witt_gen_euler(2, tw, ctx)
    assert a.indistinguishable_from(b)


def test_witt_rejects_q_far_from_one():
    ctx = ctx_exact(3, Fraction(1, 2), M=6)  # |1 - 1/2|_3 = 1
    with pytest.raises(ValueError):
        witt_euler(1, ctx)


# -- Teichmuller and angle -------------------------------------------------------------


def test_teichmuller_fixed_points():
    assert teichmuller(1, 7, 5).congruent_to(1, 5)
    w = teichmuller(7 - 1, 7, 5)
    assert w.congruent_to(-1, 5)


def test_teichmuller_example_p5():
    w = teichmuller(2, 5, 2)
    assert w.lift() == 7
    assert pow(7, 4, 25) == 1


def test_teichmuller_zero_at_multiples():
    assert teichmuller(15, 5, 4).is_exact_zero()


def test_teichmuller_multiplicative_and_root_of_unity():
    p, M = 7, 6
    for a in (2, 3, 5, 10):
        wa = teichmuller(a, p, M)
        assert (wa ** (p - 1)).congruent_to(1, M)
        assert wa.congruent_to(a, 1)
        for b in (4, 11):
            assert teichmuller(a * b, p, M).indistinguishable_from(
                wa * teichmuller(b, p, M)
            )


def test_angle_examples():
    assert angle(1, 5, 4).congruent_to(1, 4)
    v = angle(2, 5, 2)
    assert v.lift() == 11
    for a in (2, 3, 4, 6, 7):
        assert angle(a, 5, 5).congruent_to(1, 1)


def test_angle_rejects_multiples_of_p():
    with pytest.raises(ValueError):
        angle(10, 5, 3)
