import numpy as np
import pytest
from scipy.special import jv

from rotor_open_qs.densmat import partial_trace_bath, trace_distance
from rotor_open_qs.errors import LeakageError, ValidationError
from rotor_open_qs.floquet import (
    BathSpec,
    KickedSystemParams,
    bath_perturbation,
    build_floquet,
    build_kick,
    evolve,
    free_phases,
    interior_mask,
    kick_coefficients_fft,
    kick_matrix_elements,
    product_state,
    reduced_system_trajectory,
    unitarity_band,
    unitarity_deficit,
)
from rotor_open_qs.kraus import apply_bessel, build_channel

from oracles import bessel_series, random_density_matrix


def small_params(**kw):
    defaults = dict(g=0.2, tau=1.0, m_s=1.0, m_b=100.0, M_S=6, M_B=12)
    defaults.update(kw)
    return KickedSystemParams(**defaults)


def test_identity_kick_at_zero_strength():
    assert kick_matrix_elements(0.0, 0) == pytest.approx(1.0)
    for delta in (1, -1, 3):
        assert kick_matrix_elements(0.0, delta) == pytest.approx(0.0)


def test_kick_unitarity_sum_rule():
    delta = np.arange(-30, 31)
    for g in (0.5, 1.0, 2.0):
        total = np.sum(np.abs(kick_matrix_elements(g, delta)) ** 2)
        assert total == pytest.approx(1.0, abs=1e-12)


def test_kick_amplitude_against_power_series():
    val = kick_matrix_elements(0.5, 1)
    assert val.real == pytest.approx(0.0, abs=1e-15)
    assert val.imag == pytest.approx(-bessel_series(1, 0.5), abs=1e-14)
    # negative transfer carries the same amplitude
    assert kick_matrix_elements(0.5, -1) == pytest.approx(val, abs=1e-15)


def test_kick_coefficients_fft_cross_check():
    for g in (0.2, 1.0):
        n = np.arange(-12, 13)
        analytic = kick_matrix_elements(g, n)
        np.testing.assert_allclose(kick_coefficients_fft(g, 12), analytic, atol=1e-12)


def test_rapid_oscillation_tail():
    # the stationary-bath premise: amplitudes die far off the diagonal
    for g in (0.5, 1.0, 2.0):
        delta = int(np.ceil(g)) + 41
        assert abs(jv(delta, g)) < 1e-10


def test_zero_strength_floquet_is_diagonal():
    params = small_params(g=0.0)
    u = build_floquet(params)
    np.testing.assert_allclose(u, np.diag(free_phases(params)), atol=1e-14)


def test_kick_conserves_total_momentum_exactly():
    params = small_params(M_S=3, M_B=4)
    kick = build_kick(params.g, params.M_S, params.M_B)
    ms = np.arange(-params.M_S, params.M_S + 1)
    mb = np.arange(-params.M_B, params.M_B + 1)
    total = (ms[:, None] + mb[None, :]).reshape(-1)
    violating = total[:, None] != total[None, :]
    assert np.abs(kick[violating]).max() == 0.0


def test_one_kick_from_double_zero_populates_antidiagonal():
    params = small_params(g=0.7)
    u = build_floquet(params)
    psi0 = np.zeros(params.dim_product, dtype=complex)
    psi0[params.M_S * params.dim_b + params.M_B] = 1.0  # |0, 0>
    psi1 = (u @ psi0).reshape(params.dim_s, params.dim_b)
    for delta in range(-4, 5):
        pop = abs(psi1[params.M_S + delta, params.M_B - delta]) ** 2
        assert pop == pytest.approx(jv(delta, params.g) ** 2, abs=1e-12)
    # everything else is zero
    mask = np.ones_like(psi1, dtype=bool)
    idx = np.arange(-params.M_S, params.M_S + 1)
    for delta in idx:
        if abs(delta) <= params.M_B:
            mask[params.M_S + delta, params.M_B - delta] = False
    assert np.abs(psi1[mask]).max() < 1e-14


def test_unitarity_on_interior_block():
    params = small_params()
    u = build_floquet(params)
    mask = interior_mask(params, unitarity_band(params.g))
    assert unitarity_deficit(u, mask) < 1e-10


def test_discrete_time_translation():
    params = small_params(M_S=3, M_B=6)
    u = build_floquet(params)
    rng = np.random.default_rng(11)
    psi = rng.normal(size=params.dim_product) + 1j * rng.normal(size=params.dim_product)
    psi /= np.linalg.norm(psi)
    for n in range(1, 6):
        direct = np.linalg.matrix_power(u, n) @ psi
        stepped = evolve(params, psi, n, u=u)[-1]
        np.testing.assert_allclose(stepped, direct, atol=1e-11)


def test_evolve_zero_kicks_is_identity():
    params = small_params(M_S=3, M_B=6)
    rho = np.eye(params.dim_product, dtype=complex) / params.dim_product
    traj = evolve(params, rho, 0)
    assert len(traj) == 1
    np.testing.assert_allclose(traj[0], rho, atol=0)


def test_zero_coupling_keeps_system_entropy_constant():
    params = small_params(g=0.0, M_S=4, M_B=6)
    rng = np.random.default_rng(5)
    rho_s = random_density_matrix(params.dim_s, rng)
    reduced, _ = reduced_system_trajectory(params, rho_s, BathSpec.eigenstate(0), 4)
    entropies = []
    for r in reduced:
        lam = np.linalg.eigvalsh(r)
        lam = lam[lam > 1e-14]
        entropies.append(-np.sum(lam * np.log(lam)))
    np.testing.assert_allclose(entropies, entropies[0], atol=1e-10)


def test_one_kick_matches_stationary_channel():
    # with the bath in a momentum eigenstate the one-kick reduced dynamics
    # coincides with the Kraus channel (the stationary-bath map is exact here)
    params = small_params(g=0.2, m_b=1000.0, M_S=8, M_B=16)
    rng = np.random.default_rng(2)
    rho_s = random_density_matrix(params.dim_s, rng)
    reduced, _ = reduced_system_trajectory(params, rho_s, BathSpec.eigenstate(0), 1)
    channel = build_channel(params.g, params.N, params.M_S)
    expected = apply_bessel(channel, rho_s, leakage_tol=None)
    assert trace_distance(reduced[-1], expected) <= 0.01
    assert trace_distance(reduced[-1], expected) < 1e-12


def test_two_kick_stationary_map_error_decreases_with_bath_mass():
    # the first kick where the heavy-bath limit is non-trivial is the second:
    # compare with the shared-angle stationary map, whose error ~ tau/m_b
    from rotor_open_qs.kraus import apply_stationary_n, default_shift_cutoff

    rho_err = []
    for m_b in (100.0, 400.0):
        params = small_params(g=0.2, m_b=m_b, M_S=6, M_B=14)
        rho_s = np.zeros((params.dim_s, params.dim_s), dtype=complex)
        rho_s[params.M_S, params.M_S] = 1.0
        reduced, _ = reduced_system_trajectory(params, rho_s, BathSpec.eigenstate(0), 2)
        n_theta = 4 * (default_shift_cutoff(params.g) + params.M_S)
        ref = apply_stationary_n(params.g, params.N, n_theta, rho_s, 2)
        rho_err.append(trace_distance(reduced[-1], ref))
    assert rho_err[1] < rho_err[0]
    assert rho_err[0] <= 0.01


def test_bath_perturbation_zero_at_zero_coupling():
    params = small_params(g=0.0)
    assert bath_perturbation(params, BathSpec.flat(4)) == pytest.approx(0.0, abs=1e-13)


def test_bath_perturbation_scales_as_g_squared():
    gs = np.array([0.4, 0.2, 0.1, 0.05])
    dists = []
    for g in gs:
        params = small_params(g=g, M_S=5, M_B=14)
        dists.append(bath_perturbation(params, BathSpec.flat(6)))
    slope = np.polyfit(np.log(gs), np.log(dists), 1)[0]
    assert slope == pytest.approx(2.0, abs=0.1)
    # halving g quarters the perturbation
    ratios = np.array(dists[:-1]) / np.array(dists[1:])
    np.testing.assert_allclose(ratios, 4.0, rtol=0.12)


def test_bath_perturbation_bounded_by_g_squared():
    g = 0.2
    params = small_params(g=g, M_S=5, M_B=16)
    assert bath_perturbation(params, BathSpec.flat(8)) <= g**2


def test_leakage_error_when_cutoffs_too_small():
    with pytest.raises(LeakageError):
        build_floquet(small_params(g=3.0, M_S=2, M_B=3))


def test_params_validation():
    with pytest.raises(ValidationError, match="tau"):
        small_params(tau=0.0)
    with pytest.raises(ValidationError, match="mass"):
        small_params(m_b=-1.0)
    with pytest.raises(ValidationError, match="cutoff"):
        small_params(M_S=0)


def test_dimension_parameter_is_derived():
    params = small_params(m_s=2.0, tau=0.5)
    assert params.N == pytest.approx(2 * np.pi * 2.0 / 0.5)


def test_bath_spec_invariants():
    flat = BathSpec.flat(3)
    assert flat.weights.sum() == pytest.approx(1.0)
    with pytest.raises(ValidationError):
        BathSpec(N0=1, weights=np.array([0.5, 0.2, 0.5]))
    eig = BathSpec.eigenstate(0)
    np.testing.assert_allclose(eig.density_matrix(3)[3, 3], 1.0)


def test_product_state_partial_traces_back():
    params = small_params(M_S=3, M_B=5)
    rng = np.random.default_rng(9)
    rho_s = random_density_matrix(params.dim_s, rng)
    rho = product_state(params, rho_s, BathSpec.flat(2))
    np.testing.assert_allclose(
        partial_trace_bath(rho, (params.dim_s, params.dim_b)), rho_s, atol=1e-14
    )
