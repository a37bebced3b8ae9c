import cmath
from fractions import Fraction

import pytest

from qeuler.characters import enumerate_characters, trivial_character
from qeuler.euler import euler_number_q, euler_poly_q, gen_euler_number
from qeuler.scalars import q_bracket
from qeuler.zeta import (
    SeriesBudget,
    SeriesBudgetError,
    l_q_series,
    partial_zeta_Hq,
    zeta_qE,
    zeta_qE_at,
    zeta_qE_with_bound,
)

TIGHT = SeriesBudget(tolerance=1e-12)


def test_q_zero_degenerates_to_power():
    for n in (0, 1, 3):
        v = zeta_qE(-n, Fraction(1, 3), Fraction(0))
        assert v == complex(Fraction(1, 3) ** n)
        assert complex(euler_poly_q(n, Fraction(1, 3), Fraction(0))) == v
    assert zeta_qE_at(-2, Fraction(0)) == 0


def test_special_value_example_two_thirds():
    v = zeta_qE(-1, 1, Fraction(1, 2))
    assert abs(v - 2 / 3) < 1e-9
    assert euler_poly_q(1, Fraction(1), Fraction(1, 2)) == Fraction(2, 3)


def test_special_value_quarter_point():
    v = zeta_qE(-2, Fraction(1, 4), Fraction(3, 10))
    want = complex(euler_poly_q(2, Fraction(1, 4), Fraction(3, 10)))
    assert abs(v - want) < 1e-9


def test_special_values_grid():
    for qv in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
        for n in range(9):
            for x in (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2)):
                got = zeta_qE(-n, x, qv)
                want = complex(euler_poly_q(n, x, qv))
                assert abs(got - want) < 1e-9, (n, x, qv)


def test_number_series_special_values_and_anomaly():
    for qv in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
        for n in range(1, 9):
            got = zeta_qE_at(-n, qv)
            assert abs(got - complex(euler_number_q(n, qv))) < 1e-9
        # the n = 0 value differs from E_{0,q} = 1 by exactly [2]_q
        got0 = zeta_qE_at(0, qv)
        assert abs(got0 - complex(-qv)) < 1e-12
        assert abs(complex(euler_number_q(0, qv)) - got0 - complex(q_bracket(2, qv))) < 1e-12


def test_l_series_trivial_modulus_reduces_to_zeta():
    chi = trivial_character(1)
    for s in (-3, 0.7 + 1.1j):
        assert abs(l_q_series(s, chi, Fraction(2, 5)) - zeta_qE_at(s, Fraction(2, 5))) < 1e-10


def test_l_series_special_values_mod3_mod5():
    for d in (3, 5):
        for chi in enumerate_characters(d):
            for qv in (Fraction(1, 5), Fraction(3, 5)):
                for n in range(7):
                    got = l_q_series(-n, chi, qv)
                    want = complex(gen_euler_number(n, chi, qv, d))
                    assert abs(got - want) < 1e-8, (d, chi, n, qv)


def test_l_series_closed_form_at_zero():
    chi = next(c for c in enumerate_characters(3) if not c.is_trivial())
    q = Fraction(1, 2)
    F = 3
    closed = (
        q_bracket(2, q)
        / q_bracket(2, q**F)
        * sum((-1) ** a * q**a * chi(a) for a in range(1, F + 1))
    )
    assert abs(l_q_series(0, chi, q) - complex(closed)) < 1e-10


def test_partial_zeta_modes_agree_at_complex_s():
    s = 1.5 + 2j
    a, F, q = 2, 5, 0.4 + 0j
    closed = partial_zeta_Hq(s, a, F, q, mode="closed")
    direct = partial_zeta_Hq(s, a, F, q, mode="direct")
    assert abs(closed - direct) < 1e-9


def test_partial_zeta_special_value_closed_form():
    q = Fraction(2, 5)
    for F in (3, 5):
        for a in range(1, F):
            for n in range(5):
                got = partial_zeta_Hq(-n, a, F, q, mode="closed")
                want = complex(
                    (-1) ** a
                    * q**a
                    * F**n
                    * q_bracket(2, q)
                    / q_bracket(2, q**F)
                    * euler_poly_q(n, Fraction(a, F), q**F)
                )
                assert abs(got - want) < 1e-9
                direct = partial_zeta_Hq(-n, a, F, q, mode="direct")
                assert abs(direct - want) < 1e-9


def test_partial_zeta_reassembles_l_series():
    q = Fraction(2, 5)
    for d in (3, 5):
        for chi in enumerate_characters(d):
            for s in (-2, 1.25 - 0.5j):
                total = 0j
                for a in range(1, d):
                    total += complex(chi(a)) * partial_zeta_Hq(s, a, d, q)
                assert abs(total - l_q_series(s, chi, q)) < 1e-8


def test_tail_bound_exceeds_doubling_change():
    for (s, x, q) in ((-4, Fraction(1, 2), Fraction(9, 10)), (2.3 + 1j, 0.75, 0.6 + 0j)):
        loose, bound = zeta_qE_with_bound(s, x, q, SeriesBudget(tolerance=1e-6))
        tight, _ = zeta_qE_with_bound(s, x, q, SeriesBudget(tolerance=1e-14))
        assert abs(loose - tight) <= bound + 1e-13


def test_budget_exhaustion_carries_partial_and_bound():
    with pytest.raises(SeriesBudgetError) as err:
        zeta_qE(-6, 1, Fraction(99, 100), SeriesBudget(tolerance=1e-12, max_terms=10))
    assert err.value.tail_bound > 1e-12
    assert isinstance(err.value.partial, complex)


def test_x_domain_is_enforced():
    with pytest.raises(ValueError):
        zeta_qE(-1, 0, Fraction(1, 2))
    with pytest.raises(ValueError):
        zeta_qE(-1, Fraction(-1, 2), Fraction(1, 2))


def test_q_domain_is_enforced():
    with pytest.raises(ValueError):
        zeta_qE(-1, 1, Fraction(3, 2))
    with pytest.raises(ValueError):
        zeta_qE_at(-1, 1.0 + 0j)


def test_principal_branch_general_s():
    # cross-check one generic point against the straightforward series
    s, x, q = 0.5 - 1.2j, 0.8, 0.35 + 0.1j
    got = zeta_qE(s, x, q)
    brute = 0j
    for n in range(200):
        brute += (-1) ** n * q**n * cmath.exp(-s * cmath.log(n + x))
    brute *= 1 + q
    assert abs(got - brute) < 1e-10
