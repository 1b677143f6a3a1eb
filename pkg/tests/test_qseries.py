"""Expansions in q-commuting variables and the associated theorems."""

import pytest

from qneg.laurent import ONE, ZERO, LaurentPoly, cyclotomic_poly, divides
from qneg.qbinom import qbinom
from qneg.qseries import (
    Direction,
    NormalSeries,
    extract_coeff,
    freshman_congruence,
    pochhammer_expansion,
    power_xy,
    series_mul,
    verify_chu_vandermonde,
)

FZ = Direction.FROM_ZERO
FI = Direction.FROM_INFINITY


def L(terms):
    return LaurentPoly.from_terms(terms)


# -- multiplication -----------------------------------------------------------


def test_square_of_x_plus_y():
    s = series_mul(power_xy(1, FZ, 8), power_xy(1, FZ, 8))
    assert s.n == 2
    assert s.coefficient(0) == ONE
    assert s.coefficient(1) == L({0: 1, 1: 1})  # 1 + q
    assert s.coefficient(2) == ONE


def test_multiplying_by_one_is_identity():
    one = power_xy(0, FZ, 10)
    s = power_xy(-2, FZ, 10)
    assert series_mul(s, one) == s
    assert series_mul(one, s) == s


@pytest.mark.parametrize("direction", [FZ, FI])
def test_inverse_telescopes(direction):
    product = series_mul(power_xy(-1, direction, 12), power_xy(1, direction, 12))
    assert product.n == 0
    lo, hi = product.window()
    for k in range(lo, hi + 1):
        assert product.coefficient(k) == (ONE if k == 0 else ZERO)


def test_direction_mismatch_rejected():
    with pytest.raises(ValueError):
        series_mul(power_xy(-1, FZ, 6), power_xy(-1, FI, 6))


def test_multiplicativity_on_common_window():
    for a in range(-3, 4):
        for b in range(-3, 4):
            for direction in (FZ, FI):
                product = series_mul(
                    power_xy(a, direction, 10), power_xy(b, direction, 10)
                )
                direct = power_xy(a + b, direction, 10)
                lo = max(product.window()[0], direct.window()[0])
                hi = min(product.window()[1], direct.window()[1])
                for k in range(lo, hi + 1):
                    assert product.coefficient(k) == direct.coefficient(k), (a, b, k)


# -- the expansions of (x+y)^n ---------------------------------------------------


def test_inverse_series_coefficients():
    s = power_xy(-1, FZ, 4)
    assert s.coefficient(3) == L({-6: -1})
    assert [s.coefficient(k) for k in range(4)] == [
        ONE,
        L({-1: -1}),
        L({-3: 1}),
        L({-6: -1}),
    ]


def test_square_coefficients():
    s = power_xy(2, FZ, 8)
    assert [s.coefficient(k) for k in range(3)] == [ONE, L({0: 1, 1: 1}), ONE]


def test_from_infinity_cross_oracle():
    s = power_xy(-3, FI, 8)
    assert s.coefficient(-5) == qbinom(-3, -5)
    assert s.coefficient(-4) == qbinom(-3, -4)


def test_binomial_theorem_both_directions():
    for n in range(-6, 7):
        from_zero = power_xy(n, FZ, 10)
        for k in range(0, 10):
            assert from_zero.coefficient(k) == qbinom(n, k), (n, k)
        from_inf = power_xy(n, FI, 10)
        for k in range(n, n - 10, -1):
            assert from_inf.coefficient(k) == qbinom(n, k), (n, k)


def test_extract_coeff_window_contract():
    s = power_xy(4, FZ, 16)
    assert extract_coeff(s, 5) == ZERO  # inside window, beyond support
    assert extract_coeff(s, 15) == ZERO
    with pytest.raises(ValueError):
        extract_coeff(s, 16)
    with pytest.raises(ValueError):
        extract_coeff(s, -1)  # from-zero expansion says nothing for k < 0
    t = power_xy(-3, FI, 8)
    with pytest.raises(ValueError):
        extract_coeff(t, -2)  # from-infinity expansion starts at k = n
    with pytest.raises(ValueError):
        extract_coeff(t, -11)


def test_power_xy_rejects_empty_window():
    with pytest.raises(ValueError):
        power_xy(3, FZ, 0)


def test_directions_coincide_for_nonnegative_powers():
    for n in range(0, 6):
        assert power_xy(n, FZ, 10).terms == power_xy(n, FI, 10).terms


# -- pochhammer expansion ----------------------------------------------------------


def test_pochhammer_geometric_oracle():
    # (-x; q)_{-1} = 1/(1 + x/q): coefficient of x^k is (-1)^k q^-k
    s = pochhammer_expansion(-1, 10)
    for k in range(10):
        assert s.coefficient(k) == LaurentPoly.q_power(-k, -1 if k % 2 else 1)


def test_pochhammer_quadratic():
    s = pochhammer_expansion(2, 4)
    assert s.coefficient(0) == ONE
    assert s.coefficient(1) == L({0: 1, 1: 1})
    assert s.coefficient(2) == L({1: 1})
    assert s.coefficient(3) == ZERO


def test_pochhammer_cross_oracle():
    s = pochhammer_expansion(-3, 6)
    assert s.coefficient(2) == qbinom(-3, 2).shift(1)


def test_commutative_q_binomial_theorem():
    for n in range(-5, 6):
        s = pochhammer_expansion(n, 10)
        for k in range(10):
            assert s.coefficient(k) == qbinom(n, k).shift(k * (k - 1) // 2), (n, k)


def test_pochhammer_window_contract():
    s = pochhammer_expansion(3, 5)
    with pytest.raises(ValueError):
        s.coefficient(5)
    with pytest.raises(ValueError):
        s.coefficient(-1)


# -- Chu-Vandermonde -----------------------------------------------------------------


def test_chu_vandermonde_examples():
    assert verify_chu_vandermonde(-3, -1, 4)
    assert verify_chu_vandermonde(2, 3, 2)
    assert verify_chu_vandermonde(-2, -2, -3)


def test_chu_vandermonde_sweeps():
    for n in range(-5, 6):
        for m in range(-5, 6):
            for k in range(0, 7):
                assert verify_chu_vandermonde(n, m, k), (n, m, k)
    for n in range(-4, 0):
        for m in range(-4, 0):
            for k in range(-6, 0):
                assert verify_chu_vandermonde(n, m, k), (n, m, k)


def test_chu_vandermonde_rejects_mixed_signs():
    with pytest.raises(ValueError):
        verify_chu_vandermonde(3, -2, -1)
    with pytest.raises(ValueError):
        verify_chu_vandermonde(-2, 3, -4)


# -- freshman's dream ------------------------------------------------------------------


def test_freshman_congruence_small():
    assert freshman_congruence(2)
    assert power_xy(2, FZ, 3).coefficient(1) == cyclotomic_poly(2)
    assert freshman_congruence(5)
    assert freshman_congruence(6)


def test_freshman_congruence_range():
    for m in range(2, 13):
        assert freshman_congruence(m), m


def test_freshman_congruence_rejects_small_m():
    with pytest.raises(ValueError):
        freshman_congruence(1)


def test_power_lift_mod_cyclotomic():
    # (x+y)^(nm) and the n-th power of (x^m + y^m) agree coefficient-wise
    # modulo Phi_m; the latter expands with q replaced by q^(m^2) at k = jm.
    for m in (2, 3, 4):
        phi = cyclotomic_poly(m)
        for n in range(-2, 3):
            for direction in (FZ, FI):
                series = power_xy(n * m, direction, 9)
                lo, hi = series.window()
                if direction is FZ:
                    js = range(0, hi // m + 2)
                else:
                    js = range(n, (lo - 1) // m - 1, -1)
                lifted = {
                    j * m: qbinom(n, j).inflate(m * m)
                    for j in js
                    if not qbinom(n, j).is_zero()
                }
                for k in range(lo, hi + 1):
                    diff = series.coefficient(k) - lifted.get(k, ZERO)
                    assert divides(phi, diff), (m, n, direction, k)
