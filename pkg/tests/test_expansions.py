"""Divided differences, Frechet derivatives, expansion and determinant
coefficients, and the Richardson extrapolation oracle.

Oracles: closed-form difference quotients, central finite differences, and
the det/theta^2 extrapolation; each closed form is checked against at least
one route that does not share its code path.
"""

import math

import numpy as np
import pytest

from powmean import (
    DEFAULT_TOL,
    DegenerateFrameError,
    DomainError,
    EXP,
    LOG,
    NonConvergenceError,
    Power,
    PreconditionError,
    alpha_log,
    alpha_power,
    det_coeff_log_pair,
    det_coeff_power_pair,
    det_coeff_rank_one,
    divided_diff_1,
    divided_diff_2,
    frechet_d1,
    frechet_d2,
    mat_fun,
    numeric_det_coeff,
    pd_rotation_difference,
    pd_rotation_pair,
    power_mean,
    random_pd,
    rank_one_difference,
    taylor_frame_log,
    taylor_frame_power,
)

from conftest import sym_rand


# ---------------------------------------------------------------------------
# divided differences
# ---------------------------------------------------------------------------

def test_dd1_square_is_sum():
    f = Power(2.0)
    assert divided_diff_1(f, 3.0, 5.0) == pytest.approx(8.0)


def test_dd1_confluent_is_derivative():
    f = Power(0.5)
    assert divided_diff_1(f, 4.0, 4.0) == pytest.approx(0.5 * 4.0 ** (-0.5))
    assert divided_diff_1(LOG, 2.0, 2.0) == pytest.approx(0.5)
    assert divided_diff_1(EXP, 1.0, 1.0) == pytest.approx(math.e)


def test_dd1_symmetric():
    f = Power(1.0 / 3.0)
    assert divided_diff_1(f, 2.0, 7.0) == divided_diff_1(f, 7.0, 2.0)


def test_dd2_square_is_one():
    f = Power(2.0)
    assert divided_diff_2(f, 1.0, 4.0, 9.0) == pytest.approx(1.0)
    assert divided_diff_2(f, 3.0, 3.0, 3.0) == pytest.approx(1.0)


@pytest.mark.parametrize("t", [0.5, 3.0])
@pytest.mark.parametrize("p", [0.25, -0.5, 2.0])
def test_dd2_double_node_closed_form(p, t):
    # f = x^(1/p):  f[2,2,t] = ((1/p - 1) 2^(1/p) - (1/p) 2^(1/p-1) t + t^(1/p)) / (2-t)^2
    f = Power(1.0 / p)
    expected = (
        (1.0 / p - 1.0) * 2.0 ** (1.0 / p)
        - (1.0 / p) * 2.0 ** (1.0 / p - 1.0) * t
        + t ** (1.0 / p)
    ) / (2.0 - t) ** 2
    assert divided_diff_2(f, 2.0, 2.0, t) == pytest.approx(expected, rel=1e-12)


def test_dd2_permutation_invariant():
    f = LOG
    nodes = (0.5, 2.0, 7.0)
    base = divided_diff_2(f, *nodes)
    import itertools

    for perm in itertools.permutations(nodes):
        assert abs(divided_diff_2(f, *perm) - base) <= 1e-12 * (1.0 + abs(base))


def test_dd2_triple_confluent_is_half_second_derivative():
    assert divided_diff_2(EXP, 2.0, 2.0, 2.0) == pytest.approx(0.5 * math.exp(2.0))


def test_dd_domain_errors():
    with pytest.raises(DomainError):
        divided_diff_1(LOG, -1.0, 2.0)
    with pytest.raises(DomainError):
        divided_diff_2(Power(-1.0), 0.0, 1.0, 2.0)


# ---------------------------------------------------------------------------
# Frechet derivatives
# ---------------------------------------------------------------------------

def test_frechet_d1_square_closed_form(rng):
    base = sym_rand(rng, 3)
    h = sym_rand(rng, 3)
    expected = base @ h + h @ base
    assert np.abs(frechet_d1(Power(2.0), base, h) - expected).max() <= 1e-10


def test_frechet_d1_diagonal_base_offdiagonal_direction():
    # the derivative is the Schur product with the divided-difference matrix
    p = 0.25
    s = 0.75
    base = np.diag([2.0, s])
    h = np.array([[0.0, 0.6], [0.6, 0.0]])
    f = Power(1.0 / p)
    out = frechet_d1(f, base, h)
    slope = (f(2.0) - f(s)) / (2.0 - s)
    assert out[0, 0] == pytest.approx(0.0, abs=1e-14)
    assert out[1, 1] == pytest.approx(0.0, abs=1e-14)
    assert out[0, 1] == pytest.approx(slope * 0.6, rel=1e-12)


def test_frechet_d2_square_closed_form(rng):
    base = sym_rand(rng, 2)
    h = sym_rand(rng, 2)
    k = sym_rand(rng, 2)
    expected = h @ k + k @ h
    assert np.abs(frechet_d2(Power(2.0), base, h, k) - expected).max() <= 1e-10


def test_frechet_d2_symmetric_bilinear(rng):
    base = random_pd(3, 91, 5.0)
    h = sym_rand(rng, 3)
    k = sym_rand(rng, 3)
    lhs = frechet_d2(LOG, base, h, k)
    rhs = frechet_d2(LOG, base, k, h)
    assert np.abs(lhs - rhs).max() <= 1e-11


def _fd1(f, base, h, step=1e-5):
    return (mat_fun(base + step * h, f) - mat_fun(base - step * h, f)) / (2.0 * step)


def _fd2(f, base, h, step=1e-3):
    def second(s):
        return (
            mat_fun(base + s * h, f) - 2.0 * mat_fun(base, f) + mat_fun(base - s * h, f)
        ) / (s * s)

    return (4.0 * second(step / 2.0) - second(step)) / 3.0


@pytest.mark.parametrize("f", [Power(0.5), Power(-1.0), LOG, EXP])
def test_frechet_vs_finite_difference(f, rng):
    base = random_pd(2, int(rng.integers(2**63)), 6.0) + np.diag([0.0, 0.4])
    h = sym_rand(rng, 2)
    d1 = frechet_d1(f, base, h)
    d2 = frechet_d2(f, base, h, h)
    assert np.abs(d1 - _fd1(f, base, h)).max() <= 1e-6 * (1.0 + np.abs(d1).max())
    assert np.abs(d2 - _fd2(f, base, h)).max() <= 1e-6 * (1.0 + np.abs(d2).max())


# ---------------------------------------------------------------------------
# Taylor frames
# ---------------------------------------------------------------------------

def test_power_frame_displayed_values():
    frame = taylor_frame_power(1.0, 2.0, 3.0)
    assert np.allclose(frame.base, np.diag([2.0, 5.0]))
    assert np.allclose(frame.first, [[0.0, -2.0], [-2.0, 0.0]])
    assert np.allclose(frame.second, np.diag([2.0, -2.0]))


def test_power_frame_trivial_at_unit_y():
    frame = taylor_frame_power(0.7, 3.0, 1.0)
    assert np.allclose(frame.first, 0.0)
    assert np.allclose(frame.second, 0.0)


def test_log_frame_displayed_values():
    frame = taylor_frame_log(math.e**2, math.e**-1)
    assert np.allclose(frame.base, np.diag([0.0, 1.0]))
    assert np.allclose(frame.first, [[0.0, 1.0], [1.0, 0.0]])
    assert np.allclose(frame.second, np.diag([-1.0, 1.0]))


def test_frames_degenerate_hypotheses():
    with pytest.raises(DegenerateFrameError):
        taylor_frame_power(0.5, 1.0, 1.0)  # x^p + y^p = 2
    with pytest.raises(DegenerateFrameError):
        taylor_frame_log(2.0, 0.5)  # x * y = 1
    with pytest.raises(PreconditionError):
        taylor_frame_power(0.0, 2.0, 3.0)


# ---------------------------------------------------------------------------
# expansion coefficients
# ---------------------------------------------------------------------------

def test_alpha_power_vanishes_at_unit_y():
    coeffs = alpha_power(0.3, 2.0, 1.0)
    assert coeffs.alpha11 == pytest.approx(0.0, abs=1e-14)
    assert coeffs.alpha12 == pytest.approx(0.0, abs=1e-14)


def test_alpha_power_closed_forms_match_frechet_route():
    from powmean.expansions import _second_order_matrix

    for p, x, y in [(1.0, 2.0, 3.0), (0.25, 0.5, 0.25), (-0.5, 0.3, 0.09)]:
        coeffs = alpha_power(p, x, y)
        c2 = _second_order_matrix(Power(1.0 / p), taylor_frame_power(p, x, y), DEFAULT_TOL)
        assert coeffs.alpha11 == pytest.approx(float(c2[0, 0]), rel=1e-9)


def test_alpha_model_matches_direct_mean_to_second_order():
    p, x, y = 1.0, 2.0, 3.0
    coeffs = alpha_power(p, x, y)
    mean_limit = ((x**p + y**p) / 2.0) ** (1.0 / p)
    t = 1e-3
    a, b = pd_rotation_pair(x, y, t)
    model = np.array(
        [
            [1.0 + coeffs.alpha11 * t * t, coeffs.alpha12 * t],
            [coeffs.alpha12 * t, mean_limit + coeffs.alpha22 * t * t],
        ]
    )
    defect = np.abs(power_mean(p, a, b) - model).max()
    assert defect <= 1e-8  # o(t^2): well below t^2 = 1e-6


def test_alpha_model_defect_ratio_shrinks_with_angle():
    p, x, y = 0.25, 0.5, 0.25
    coeffs = alpha_power(p, x, y)
    mean_limit = ((x**p + y**p) / 2.0) ** (1.0 / p)
    ratios = []
    for t in (1e-2, 1e-3, 1e-4):
        a, b = pd_rotation_pair(x, y, t)
        model = np.array(
            [
                [1.0 + coeffs.alpha11 * t * t, coeffs.alpha12 * t],
                [coeffs.alpha12 * t, mean_limit + coeffs.alpha22 * t * t],
            ]
        )
        ratios.append(float(np.abs(power_mean(p, a, b) - model).max()) / (t * t))
    assert ratios[0] > ratios[1] > ratios[2]


def test_alpha_log_equal_arguments():
    x = 0.25
    coeffs = alpha_log(x, x)
    assert coeffs.alpha12 == pytest.approx((1.0 - x) / 2.0, rel=1e-12)


def test_alpha_log_is_small_exponent_limit_of_alpha_power():
    x, y = 0.3, 0.8
    lim = alpha_power(1e-6, x, y)
    log_coeffs = alpha_log(x, y)
    assert log_coeffs.alpha11 == pytest.approx(lim.alpha11, rel=1e-3)
    assert log_coeffs.alpha12 == pytest.approx(lim.alpha12, rel=1e-3)
    assert log_coeffs.alpha22 == pytest.approx(lim.alpha22, rel=1e-3)


# ---------------------------------------------------------------------------
# determinant coefficients
# ---------------------------------------------------------------------------

def test_power_pair_coefficient_vanishes_at_equal_exponents():
    out = det_coeff_power_pair(0.7, 0.7, 0.5, 0.2)
    assert out.total == pytest.approx(0.0, abs=1e-14)
    assert out.total == out.delta1 + out.delta2


def test_power_pair_coefficient_vanishes_at_unit_y():
    out = det_coeff_power_pair(0.25, 1.5, 0.5, 1.0)
    assert out.total == pytest.approx(0.0, abs=1e-14)


def test_power_pair_negative_for_small_x():
    out = det_coeff_power_pair(0.25, 1.0, 0.01, 0.0001)
    assert out.total < 0.0
    assert out.wp == pytest.approx(1.0 - ((0.01**0.25 + 0.0001**0.25) / 2.0) ** 4.0)


def test_power_pair_degenerate_hypotheses():
    with pytest.raises(DegenerateFrameError):
        det_coeff_power_pair(0.5, 1.0, 1.0, 1.0)


def test_log_pair_negative_for_small_x():
    out = det_coeff_log_pair(1.0, 0.01, 0.0001)
    assert out.total < 0.0
    assert out.wp == pytest.approx(1.0 - math.sqrt(0.01 * 0.0001))


def test_log_pair_rejects_reciprocal_arguments():
    with pytest.raises(DegenerateFrameError):
        det_coeff_log_pair(1.0, 4.0, 0.25)


def test_log_pair_is_small_exponent_limit():
    for q, x, y in [(1.0, 0.01, 0.0001), (0.5, 0.2, 0.04), (2.0, 0.3, 0.6)]:
        lim = det_coeff_power_pair(1e-6, q, x, y).total
        log_val = det_coeff_log_pair(q, x, y).total
        assert log_val == pytest.approx(lim, rel=1e-3)


def test_rank_one_coefficient_values():
    assert det_coeff_rank_one(0.5, 0.5) == 0.0
    assert det_coeff_rank_one(0.25, 0.5) == pytest.approx(-3.791260736238831e-3, rel=1e-12)
    assert det_coeff_rank_one(0.25, 0.5) == det_coeff_rank_one(0.5, 0.25)


def test_rank_one_coefficient_sign_structure():
    grid = np.linspace(0.05, 0.95, 13)
    for p in grid:
        for q in grid:
            val = det_coeff_rank_one(float(p), float(q))
            if p == q:
                assert val == 0.0
            else:
                assert val < 0.0


def test_rank_one_domain():
    with pytest.raises(DomainError):
        det_coeff_rank_one(0.0, 0.5)
    with pytest.raises(DomainError):
        det_coeff_rank_one(0.5, 1.0)


# ---------------------------------------------------------------------------
# extrapolation oracle
# ---------------------------------------------------------------------------

def test_oracle_exact_quadratic_determinant():
    def difference(t):
        return np.array([[t, 0.0], [0.0, -2.5 * t]])

    # power-of-two angles keep every tableau operation exact
    result = numeric_det_coeff(difference, thetas=[2.0**-k for k in range(1, 9)])
    assert result.value == -2.5
    assert result.error == 0.0


def test_oracle_matches_rank_one_closed_form():
    closed = det_coeff_rank_one(0.25, 0.5)
    oracle = numeric_det_coeff(rank_one_difference(0.25, 0.5))
    assert abs(closed - oracle.value) <= 1e-4 * (1.0 + abs(closed))


def test_oracle_matches_power_pair_closed_form():
    closed = det_coeff_power_pair(1.0, 2.0, 0.5, 0.25).total
    oracle = numeric_det_coeff(pd_rotation_difference(1.0, 2.0, 0.5, 0.25))
    assert abs(closed - oracle.value) <= 1e-4 * (1.0 + abs(closed))


def test_oracle_handles_fractional_tail_orders():
    # exponents above 1/2 put fractional powers of the angle into the tail;
    # the family-aware elimination orders recover 1e-4 agreement anyway
    from powmean import rank_one_remainder_orders

    p, q = 0.7, 0.9
    orders = rank_one_remainder_orders(p, q)
    assert orders[0] == pytest.approx(2.0 / q - 2.0)
    assert orders[1] == pytest.approx(2.0 / p - 2.0)
    closed = det_coeff_rank_one(p, q)
    oracle = numeric_det_coeff(rank_one_difference(p, q), orders=orders)
    assert abs(closed - oracle.value) <= 1e-4 * (1.0 + abs(closed))


def test_oracle_validates_theta_sequence():
    fn = rank_one_difference(0.25, 0.5)
    with pytest.raises(PreconditionError):
        numeric_det_coeff(fn, thetas=[1e-3, 1e-2, 1e-1, 1.0])
    with pytest.raises(PreconditionError):
        numeric_det_coeff(fn, thetas=[0.1, 0.05])
    with pytest.raises(PreconditionError):
        numeric_det_coeff(fn, orders=(2.0, -1.0))
    with pytest.raises(PreconditionError):
        numeric_det_coeff(fn, thetas=[0.1, 0.05, 0.025, 0.0125], orders=(1, 2, 3, 4))


def test_oracle_flags_non_quadratic_input():
    def noisy(t):
        wobble = 1.0 + 0.5 * math.sin(1.0 / t)
        return np.array([[t * wobble, 0.0], [0.0, t]])

    with pytest.raises(NonConvergenceError):
        numeric_det_coeff(noisy)


def test_log_pair_statement_adjudicated_against_variant_grouping():
    # Two groupings of the log-family coefficient circulate: the implemented
    # one and a variant carrying an extra factor 1/2 on the delta1 bracket.
    # The extrapolation oracle and the p -> 0 limit both select the former.
    q, x, y = 1.0, 0.01, 0.0001
    breakdown = det_coeff_log_pair(q, x, y)
    statement = breakdown.total
    variant = 0.5 * breakdown.delta1 + breakdown.delta2
    oracle = numeric_det_coeff(pd_rotation_difference(0.0, q, x, y)).value
    bound = 1e-4 * (1.0 + abs(statement))
    assert abs(statement - oracle) <= bound
    assert abs(variant - oracle) > 10.0 * bound
    limit = det_coeff_power_pair(1e-6, q, x, y).total
    assert abs(statement - limit) <= 1e-3 * (1.0 + abs(statement))
