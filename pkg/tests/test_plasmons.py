from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from plasmonio import plasmons as pl
from plasmonio import wellbands as wb
from plasmonio.errors import NonPositiveSpectrum


def only(tr, idx):
    idx = list(idx)
    return replace(tr, pairs=[tr.pairs[i] for i in idx], frequencies=tr.frequencies[idx],
                   delta_pop=tr.delta_pop[idx], currents=tr.currents[idx])


@pytest.fixture(scope="module")
def dilute():
    profile = wb.WellProfile.square_well(15.0, Ns_cm2=1e12)
    return wb.well_transitions(profile, 10)


def test_single_transition_depolarization(dilute):
    one = only(dilute, [0])
    modes = pl.plasmon_modes(one)
    expected = one.frequencies[0] ** 2 + wb.plasma_frequency_sq(one)[0]
    assert modes.frequencies[0] ** 2 == pytest.approx(expected, rel=1e-10)
    assert modes.frequencies[0] > one.frequencies[0]


def test_coupling_matrix_symmetric(well15):
    _, tr, _ = well15
    cm = pl.build_coupling_matrix(tr)
    np.testing.assert_array_equal(cm.xi, cm.xi.T)
    assert np.all(np.diag(cm.xi) >= 0)


def test_dynamical_matrix_spectrum(well15):
    # the 2N x 2N Heisenberg matrix is solved independently of the reduced problem
    _, tr, modes = well15
    ev = np.linalg.eigvals(pl.dynamical_matrix(pl.build_coupling_matrix(tr)))
    assert np.max(np.abs(ev.imag)) < 1e-9 * modes.frequencies.max()
    pos = np.sort(ev.real[ev.real > 0])
    np.testing.assert_allclose(pos, modes.frequencies, rtol=1e-10)


def test_bogoliubov_vectors_are_eigenvectors(well15):
    _, tr, modes = well15
    d = pl.dynamical_matrix(pl.build_coupling_matrix(tr))
    for n, w in enumerate(modes.frequencies):
        v = np.concatenate([modes.x[n], modes.y[n]])
        np.testing.assert_allclose(d @ v, w * v, atol=1e-9 * w)


def test_symplectic_norms(well15):
    np.testing.assert_allclose(well15[2].symplectic_norms(), 1.0, atol=1e-8)


def test_f_sum_rule(well15):
    _, tr, modes = well15
    _, s_sp = pl.oscillator_strengths(tr)
    _, s_msp = pl.oscillator_strengths(modes)
    assert s_msp.sum() == pytest.approx(s_sp.sum(), rel=1e-8)


def test_bright_mode_dominates(well15):
    _, tr, modes = well15
    assert modes.weights.sum() == pytest.approx(1.0)
    assert modes.weights[modes.bright_index] > 0.5
    # the bright mode is blue-shifted above every bare transition it draws from
    assert modes.omega0 > tr.frequencies[np.argmax(np.abs(tr.integrated_currents))]
    assert modes.integrated_currents[modes.bright_index] > 0


def test_bright_rate_order_of_magnitude():
    # hbar Gamma0 ~ e^2 hbar Ns / (2 m* eps0 sqrt(eps_s) c): no wavefunction detail
    e, hbar, me, eps0, c = 1.602176634e-19, 1.054571817e-34, 9.1093837015e-31, 8.8541878128e-12, 299792458.0
    ns = 1e14 * 1e4
    estimate = e**2 * hbar * ns / (2 * 0.043 * me * eps0 * np.sqrt(12.9) * c) / e * 1e3
    assert estimate == pytest.approx(22.6, abs=0.1)
    profile = wb.WellProfile.square_well(100.0, Ns_cm2=1e14, grid_points=2048)
    g0 = pl.bright_gamma0(pl.plasmon_modes(wb.well_transitions(profile, 60)))
    assert 0.5 * estimate < g0 < 1.5 * estimate


def test_bright_rate_linear_in_density():
    profile = wb.WellProfile.square_well(100.0, grid_points=2048)
    ns = np.array([1e12, 1e13, 1e14])
    g0 = [pl.bright_gamma0(pl.plasmon_modes(wb.well_transitions(replace(profile, sheet_density=n), 60)))
          for n in ns]
    slope = np.polyfit(np.log(ns), np.log(g0), 1)[0]
    assert slope == pytest.approx(1.0, abs=0.05)


def test_mode_gamma0_matches_bright(well15):
    modes = well15[2]
    assert pl.mode_gamma0(modes)[modes.bright_index] == pl.bright_gamma0(modes)


def test_absorption_spectra_unit_area(well15):
    _, tr, modes = well15
    omega = np.linspace(-3000.0, 4000.0, 400001)
    a_sp = pl.absorption_spectrum(tr, 10.0, omega)
    a_msp = pl.absorption_spectrum(modes, 10.0, omega, reference=tr)
    # Lorentzian tails beyond the window hold ~2 gamma/(pi * range) of the area
    assert np.trapezoid(a_sp, omega) == pytest.approx(1.0, abs=2e-3)
    assert np.trapezoid(a_msp, omega) == pytest.approx(1.0, abs=2e-3)


def test_negative_coupling_rejected(dilute):
    cm = pl.build_coupling_matrix(dilute)
    bad = pl.CouplingMatrix(cm.bare_frequencies, -10.0 * np.abs(cm.xi) - 1e3 * np.eye(len(dilute)))
    with pytest.raises(NonPositiveSpectrum):
        pl.diagonalize_bogoliubov(bad, dilute)


def test_lorentzian_area():
    w = np.linspace(-1e4, 1e4, 2_000_001)
    assert np.trapezoid(pl.lorentzian(w, 3.0, 0.5), w) == pytest.approx(1.0, abs=1e-4)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 6), seed=st.integers(0, 2**31 - 1))
def test_random_coupling_invariants(n, seed):
    # any positive bare spectrum with a Gram coupling matrix stays stable
    rng = np.random.default_rng(seed)
    w = np.sort(rng.uniform(50.0, 300.0, n))
    a = rng.normal(size=(n, 4))
    xi = 5.0 * a @ a.T
    j = rng.normal(size=(n, 32))
    tr = wb.TransitionSet(np.linspace(0.0, 10.0, 32), [(0, k + 1) for k in range(n)], w,
                          np.ones(n), j)
    modes = pl.diagonalize_bogoliubov(pl.CouplingMatrix(w, xi), tr)
    np.testing.assert_allclose(modes.symplectic_norms(), 1.0, atol=1e-8)
    ev = np.linalg.eigvals(pl.dynamical_matrix(pl.CouplingMatrix(w, xi)))
    np.testing.assert_allclose(np.sort(ev.real[ev.real > 0]), modes.frequencies, rtol=1e-8)
    # a positive semidefinite coupling only pushes frequencies up
    assert modes.frequencies.min() >= w.min() * (1 - 1e-12)


def test_single_transition_coupling_element(dilute):
    one = only(dilute, [0])
    xi = pl.build_coupling_matrix(one).xi[0, 0]
    assert xi == pytest.approx(wb.plasma_frequency_sq(one)[0] / (4 * one.frequencies[0]), rel=1e-10)


def test_disjoint_currents_do_not_couple(dilute):
    two = only(dilute, [0, 0])
    cur = two.currents.copy()
    half = cur.shape[1] // 2
    cur[0, half:] = 0.0
    cur[1, :half] = 0.0
    xi = pl.build_coupling_matrix(replace(two, currents=cur)).xi
    assert xi[0, 1] == 0.0 and xi[0, 0] > 0 and xi[1, 1] > 0


def test_coupling_vanishes_with_density(dilute):
    xi = pl.build_coupling_matrix(dilute).xi
    thin = pl.build_coupling_matrix(dilute.scaled(1e-6)).xi
    np.testing.assert_allclose(thin, 1e-6 * xi, rtol=1e-10, atol=1e-12 * np.abs(thin).max())


def test_uncoupled_modes_are_bare_transitions(dilute):
    cm = pl.CouplingMatrix(dilute.frequencies, np.zeros((len(dilute),) * 2))
    modes = pl.diagonalize_bogoliubov(cm, dilute)
    np.testing.assert_allclose(modes.frequencies, np.sort(dilute.frequencies), rtol=1e-12)
    np.testing.assert_allclose(np.sort(np.abs(modes.integrated_currents)),
                               np.sort(np.abs(dilute.integrated_currents)), rtol=1e-10, atol=1e-30)
    np.testing.assert_allclose(modes.y, 0.0, atol=1e-12)
    omega = np.linspace(0.0, 400.0, 2001)
    np.testing.assert_allclose(pl.absorption_spectrum(modes, 10.0, omega, reference=dilute),
                               pl.absorption_spectrum(dilute, 10.0, omega), rtol=1e-9)


def test_single_transition_spectrum_shifts_rigidly(dilute):
    one = only(dilute, [0])
    modes = pl.plasmon_modes(one)
    shift = modes.frequencies[0] - one.frequencies[0]
    omega = np.linspace(0.0, 400.0, 2001)
    np.testing.assert_allclose(pl.absorption_spectrum(modes, 10.0, omega, reference=one),
                               pl.absorption_spectrum(one, 10.0, omega - shift), rtol=1e-10)


def test_doubling_populations_doubles_rate(well15):
    _, tr, modes = well15
    doubled = pl.plasmon_modes(tr.scaled(2.0))
    assert pl.bright_gamma0(doubled) / pl.bright_gamma0(modes) == pytest.approx(2.0, rel=0.05)
