from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler.euler import (
    check_translation_identity,
    classical_euler,
    euler_number_q,
    euler_poly_q,
    gen_euler_number,
)
from qeuler.characters import enumerate_characters, trivial_character
from qeuler.scalars import QParameter, q_bracket


def classical_by_series_division(n: int) -> Fraction:
    """Independent oracle: t^n/n! coefficients of 2/(e^t+1) by power series division."""
    import math

    b = [Fraction(2)] + [Fraction(1, math.factorial(k)) for k in range(1, n + 1)]
    c = [Fraction(0)] * (n + 1)
    c[0] = Fraction(1)
    for k in range(1, n + 1):
        c[k] = -sum(c[j] * b[k - j] for j in range(k)) / b[0]
    return c[n] * math.factorial(n)


def series_number(n: int, q: Fraction, tail: Fraction = Fraction(1, 10**18)) -> Fraction:
    """Alternating series sum_{m>=1} (-1)^m q^m m^n, exact partial sum, |q| < 1."""
    acc = Fraction(0)
    qa = Fraction(1)
    m = 0
    while True:
        m += 1
        qa *= q
        acc += (-1) ** m * qa * m**n
        if qa * (m + n + 1) ** n / (1 - q) < tail:
            return q_bracket(2, q) * acc


def test_classical_anchor_values():
    expected = [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(0),
        Fraction(1, 4),
        Fraction(0),
        Fraction(-1, 2),
    ]
    assert [classical_euler(n) for n in range(6)] == expected


def test_classical_matches_series_division_oracle():
    for n in range(12):
        assert classical_euler(n) == classical_by_series_division(n)


def test_e0_is_one_for_any_q():
    for q in (Fraction(2, 7), Fraction(0), Fraction(5), 0.3 + 0.1j):
        assert euler_number_q(0, q) == 1


def test_e1_at_half_is_minus_third():
    assert euler_number_q(1, Fraction(1, 2)) == Fraction(-1, 3)


def test_e2_at_one_is_zero():
    assert euler_number_q(2, Fraction(1)) == 0


def test_recurrence_matches_series_at_rational_q():
    for q in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
        for n in range(11):
            exact = euler_number_q(n, q)
            approx = series_number(n, q) if n else q_bracket(2, q) / (1 + q)
            assert abs(exact - approx) < Fraction(1, 10**9)


def test_degenerate_q_zero():
    for n in range(6):
        assert euler_number_q(n, Fraction(0)) == (1 if n == 0 else 0)
        assert euler_poly_q(n, Fraction(2, 3), Fraction(0)) == Fraction(2, 3) ** n


def test_poly_at_zero_is_number():
    q = Fraction(3, 5)
    for n in range(8):
        assert euler_poly_q(n, Fraction(0), q) == euler_number_q(n, q)


def test_poly_degree_zero_is_one():
    assert euler_poly_q(0, Fraction(9, 2), Fraction(1, 3)) == 1


def test_poly_classical_root_at_half():
    assert euler_poly_q(1, Fraction(1, 2), Fraction(1)) == 0


rational_q = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=100
).filter(lambda r: r != -1)


def test_translation_identity_examples():
    assert check_translation_identity(3, 2, Fraction(2, 5)) == 0
    assert check_translation_identity(2, 0, Fraction(1, 3)) == 0
    # n = 1 is the single-step law itself
    for k in range(6):
        assert check_translation_identity(1, k, Fraction(4, 9)) == 0


@given(n=st.integers(1, 6), k=st.integers(0, 8), q=rational_q)
@settings(max_examples=60, deadline=None)
def test_translation_identity_random_q(n, k, q):
    assert check_translation_identity(n, k, q) == 0


def test_odd_n_sign_specialization_agrees():
    # for odd n the alternating sign (-1)^(n-l-1) equals (-1)^l, so the
    # generic law and its odd-step form are the same code path
    q = Fraction(3, 8)
    for n in (1, 3, 5):
        for k in range(5):
            lhs = q**n * euler_poly_q(k, Fraction(n), q) + euler_number_q(k, q)
            rhs = q_bracket(2, q) * sum(
                (-1) ** l * q**l * (Fraction(l) ** k if (l, k) != (0, 0) else 1)
                for l in range(n)
            )
            assert lhs == rhs
            assert check_translation_identity(n, k, q) == 0


# -- generalized numbers -------------------------------------------------------


def quadratic_mod3():
    chis = enumerate_characters(3)
    return next(c for c in chis if not c.is_trivial())


def test_gen_euler_quadratic_mod3_matches_series():
    chi = quadratic_mod3()
    q = Fraction(1, 2)
    exact = gen_euler_number(1, chi, q, 3)
    assert exact == Fraction(-1)
    # oracle: the chi-weighted alternating series
    acc = Fraction(0)
    qa = Fraction(1)
    for m in range(1, 200):
        qa *= q
        acc += (-1) ** m * qa * chi(m) * m
    assert abs(q_bracket(2, q) * acc - exact) < Fraction(1, 10**12)


def test_gen_euler_trivial_modulus_one():
    chi = trivial_character(1)
    for q in (Fraction(1, 2), Fraction(2, 7)):
        for n in range(1, 7):
            assert gen_euler_number(n, chi, q, 1) == euler_number_q(n, q)
        assert gen_euler_number(0, chi, q, 1) == 1 - q_bracket(2, q)


def test_gen_euler_distribution_independence():
    for d in (3, 5):
        for chi in enumerate_characters(d):
            for q in (Fraction(1, 2), Fraction(2, 7)):
                for n in range(5):
                    vals = [gen_euler_number(n, chi, q, F) for F in (d, 3 * d, 5 * d)]
                    assert vals[0] == vals[1] == vals[2]


def test_gen_euler_rejects_bad_F():
    chi = quadratic_mod3()
    with pytest.raises(ValueError):
        gen_euler_number(1, chi, Fraction(1, 2), 6)  # even
    with pytest.raises(ValueError):
        gen_euler_number(1, chi, Fraction(1, 2), 5)  # not a multiple of 3


def test_q_to_one_continuity():
    for n in range(10):
        assert euler_number_q(n, QParameter.exact(1)) == classical_by_series_division(n)
