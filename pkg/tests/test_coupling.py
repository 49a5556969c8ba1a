import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from plasmonio import coupling as cp
from plasmonio.errors import AngleOutOfRange

P = cp.CouplingParams(omega0=1.0, gamma0=0.2, gamma_nr=0.05)


def test_gamma_theta_closed_form():
    th = np.radians(30.0)
    expected = 0.2 * 1.3 * np.sin(th) ** 2 / np.cos(th)
    assert cp.gamma_theta(P, 30.0, 1.3) == pytest.approx(expected, rel=1e-14)
    assert cp.gamma_theta(P, 0.0, 1.0) == 0.0


def test_angle_limits():
    with pytest.raises(AngleOutOfRange):
        cp.gamma_theta(P, 90.0, 1.0)
    with pytest.raises(AngleOutOfRange):
        cp.gamma_theta(P, -1.0, 1.0)
    # also usable as a plain ValueError
    with pytest.raises(ValueError):
        cp.angle_factor(120.0)


@settings(max_examples=50, deadline=None)
@given(g=st.floats(1e-3, 1e3), q=st.floats(2.0, 1e4), theta=st.floats(1.0, 89.0))
def test_from_gq_roundtrip(g, q, theta):
    p = cp.CouplingParams.from_gQ(g, q, theta)
    assert p.g(theta) == pytest.approx(g, rel=1e-10)
    assert p.Q == pytest.approx(q, rel=1e-12)


def test_params_validation():
    with pytest.raises(ValueError):
        cp.CouplingParams(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        cp.CouplingParams(1.0, -1.0, 1.0)
    with pytest.raises(ValueError):
        cp.CouplingParams(1.0, 1.0, 0.0)


def test_angle_and_wavevector_agree():
    # Gamma_k at k = sin(theta) omega/omega0 equals Gamma(theta, omega)
    omega = 1.4
    for theta in (10.0, 35.0, 70.0):
        k = np.sin(np.radians(theta)) * omega
        assert cp.gamma_k(P, k, omega) == pytest.approx(cp.gamma_theta(P, theta, omega), rel=1e-12)
        assert cp.angle_of(P, k, omega) == pytest.approx(theta, rel=1e-12)


def test_gamma_k_branches():
    assert cp.gamma_k(P, 1.0, 0.5) == 0.0
    assert cp.gamma_k(P, 1.0, 1.0) == np.inf
    assert cp.gamma_k(P, 1.0, 2.0) == pytest.approx(0.2 / np.sqrt(3.0))


def test_lamb_shift_branches():
    assert cp.lamb_shift_G(P, 1.0, 2.0) == 0.0
    assert cp.lamb_shift_G(P, 1.0, 0.6) == pytest.approx(-0.2 / 0.8)
    assert cp.lamb_shift_G(P, 1.0, 1.0) == -np.inf
    grid = np.linspace(1.01, 5.0, 50)
    assert np.all(cp.lamb_shift_G(P, 1.0, grid) == 0.0)


@pytest.mark.parametrize("k", [0.3, 1.0, 2.5])
@pytest.mark.parametrize("omega", [-7.0, -2.9, -1.1, -0.2, 0.0, 0.4, 0.95, 1.6, 3.3, 12.0])
def test_kramers_kronig_branches(k, omega):
    wk = k * P.omega0
    if abs(abs(omega) - wk) < 1e-6:
        pytest.skip("on the light cone")
    num = cp.kk_oracle_im_gamma(P, k, omega)
    ana = cp.im_gamma_analytic(P, k, omega)
    assert num == pytest.approx(ana, rel=1e-8, abs=1e-14)


def test_lamb_shift_from_kernel():
    # G = Im[Gamma(w) - Gamma*(-w)] = Im Gamma(w) + Im Gamma(-w), below and above the cone
    for omega in (0.3, 0.8, 1.5, 4.0):
        total = cp.im_gamma_analytic(P, 1.0, omega) + cp.im_gamma_analytic(P, 1.0, -omega)
        assert total == pytest.approx(cp.lamb_shift_G(P, 1.0, omega), abs=1e-12)


def test_light_cone_rejected():
    with pytest.raises(ValueError):
        cp.kk_oracle_im_gamma(P, 1.0, 1.0)
    with pytest.raises(ValueError):
        cp.im_gamma_analytic(P, 1.0, -1.0)


def test_electronic_gamma_step():
    assert cp.electronic_gamma(P, 0.5) == 0.05
    assert cp.electronic_gamma(P, -0.5) == 0.0
    np.testing.assert_array_equal(cp.electronic_gamma(P, np.array([-1.0, 0.0, 1.0])), [0, 0, 0.05])


def test_critical_angle_equal_rates():
    # sin^2/cos = 1 => cos = (sqrt(5) - 1) / 2
    theta = cp.critical_angle(cp.CouplingParams(1.0, 1.0, 1.0))
    assert theta == pytest.approx(np.degrees(np.arccos((np.sqrt(5) - 1) / 2)), abs=1e-5)
    assert theta == pytest.approx(51.827, abs=1e-3)


@settings(max_examples=40, deadline=None)
@given(ratio=st.floats(1e-3, 1e3))
def test_critical_angle_balances_rates(ratio):
    p = cp.CouplingParams(1.0, 1.0, ratio)
    theta = cp.critical_angle(p, tol_deg=1e-9)
    assert p.g(theta) == pytest.approx(1.0, rel=1e-6)


def test_normalized_wavevector():
    # k_phys = sqrt(eps_s) omega0 / c gives k = 1
    p = cp.CouplingParams(100.0, 1.0, 1.0, eps_s=12.9)
    omega = 100.0 * 1.602176634e-22 / 1.054571817e-34
    k_phys = np.sqrt(12.9) * omega / 299792458.0
    assert cp.normalized_wavevector(p, k_phys) == pytest.approx(1.0, rel=1e-9)


def test_rate_at_45_degrees():
    assert cp.gamma_theta(P, 45.0, 1.0) == pytest.approx(0.2 / np.sqrt(2), rel=1e-14)
    assert cp.gamma_theta(P, 45.0, 2.0) == pytest.approx(2 * cp.gamma_theta(P, 45.0, 1.0), rel=1e-14)


def test_zero_wavevector_does_not_radiate():
    assert cp.gamma_k(P, 0.0, 1.0) == 0.0
    assert cp.lamb_shift_G(P, 0.0, 1.0) == 0.0
    assert cp.kk_oracle_im_gamma(P, 0.0, 1.0) == 0.0


def test_static_shift():
    assert cp.lamb_shift_G(P, 0.7, 0.0) == pytest.approx(-0.2 * 0.7, rel=1e-14)


@pytest.mark.parametrize("omega", [1.3, 2.0, 5.0])
def test_kramers_kronig_odd_above_cone(omega):
    k = 0.8
    plus = cp.kk_oracle_im_gamma(P, k, omega)
    minus = cp.kk_oracle_im_gamma(P, k, -omega)
    assert plus == pytest.approx(-minus, rel=1e-6)


@pytest.mark.parametrize("omega", [0.1, 0.4, 0.7])
def test_shift_from_kramers_kronig_quadrature(omega):
    k = 0.8
    im_plus = cp.kk_oracle_im_gamma(P, k, omega)
    im_minus = cp.kk_oracle_im_gamma(P, k, -omega)
    assert im_plus + im_minus == pytest.approx(cp.lamb_shift_G(P, k, omega), abs=1e-4)


def test_electronic_rate_just_above_zero():
    assert cp.electronic_gamma(P, 1e-300) == 0.05


def test_critical_angle_limits():
    assert cp.critical_angle(cp.CouplingParams(1.0, 1e6, 1e-3)) < 0.1
    assert cp.critical_angle(cp.CouplingParams(1.0, 1e-3, 1e3)) > 89.9
