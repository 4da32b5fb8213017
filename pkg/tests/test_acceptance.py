"""Acceptance suite: one test per criterion, each printing a PASS line with
the measured values and runtime (run with `pytest tests/test_acceptance.py -v -s`
to see them). Tolerances are pinned here, not configurable.
"""

import time

import numpy as np
import pytest

from rotor_open_qs import cli
from rotor_open_qs.bathcorr import antinode_grid, kernel_value, off_diagonal_max
from rotor_open_qs.config import build_config
from rotor_open_qs.densmat import trace_distance
from rotor_open_qs.floquet import (
    BathSpec,
    KickedSystemParams,
    bath_perturbation,
    reduced_system_trajectory,
)
from rotor_open_qs.kraus import (
    apply_bessel,
    apply_quadrature,
    apply_stationary_n,
    build_channel,
    default_shift_cutoff,
    iterate,
)
from rotor_open_qs.lindblad import (
    continuous_evolve,
    double_scaling_generator,
    kicked_trajectory,
    make_generator,
)
from rotor_open_qs.mathieu import even_coefficients
from rotor_open_qs.two_rotor import entropy_vs_coupling, kernel_spectrum, reduced_spectrum

from oracles import (
    apply_superop,
    correlation_direct_sum,
    lindblad_kick_superop,
    random_density_matrix,
)


def report(num, name, elapsed, budget, detail):
    print(f"ACCEPTANCE {num:02d} {name}: PASS ({detail}) [{elapsed:.2f}s < {budget:.0f}s]")
    assert elapsed < budget, f"criterion {num} exceeded its runtime budget"


def ground_state(M):
    rho = np.zeros((2 * M + 1, 2 * M + 1), dtype=complex)
    rho[M, M] = 1.0
    return rho


@pytest.fixture(scope="module")
def entropy_sweep_at_unit_coupling(tmp_path_factory):
    out = tmp_path_factory.mktemp("accept") / "sweep.csv"
    config = build_config("entropy-sweep", {"g_grid": [1.0], "output": str(out)})
    start = time.perf_counter()
    cli.run(config)
    elapsed = time.perf_counter() - start
    with open(out, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    g, e2, s = map(float, lines[2].split(","))
    assert g == 1.0
    return e2, s, elapsed


def test_criterion_01_ground_state_energy_anchor(entropy_sweep_at_unit_coupling):
    e2, _, elapsed = entropy_sweep_at_unit_coupling
    assert e2 == pytest.approx(0.545, abs=0.001)
    report(1, "ground-state-energy-anchor", elapsed, 1.0, f"E2={e2:.6f} vs 0.545+-0.001")


def test_criterion_02_entropy_anchor(entropy_sweep_at_unit_coupling):
    _, s, elapsed = entropy_sweep_at_unit_coupling
    assert s == pytest.approx(0.38, abs=0.01)
    report(2, "entropy-anchor", elapsed, 1.0, f"S={s:.6f} vs 0.38+-0.01")


def test_criterion_03_entropy_monotone_in_coupling():
    start = time.perf_counter()
    grid = [0.25, 0.5, 1.0, 2.0, 4.0]
    entropies = [r.entropy for r in entropy_vs_coupling(grid)]
    elapsed = time.perf_counter() - start
    assert np.all(np.diff(entropies) > 0)
    report(
        3, "fig1-entropy-strictly-increasing", elapsed, 5.0,
        "S=" + "/".join(f"{s:.4f}" for s in entropies),
    )


def test_criterion_04_reduced_spectrum_vs_kernel_oracle():
    start = time.perf_counter()
    worst = 0.0
    for g in (0.5, 1.0, 2.0):
        mode = even_coefficients(g, 0)
        spec = reduced_spectrum(mode)
        want = np.sort(spec.as_probabilities())[::-1][:14]
        got = kernel_spectrum(mode, n_grid=512)[:14]
        worst = max(worst, float(np.abs(got - want).max()))
    elapsed = time.perf_counter() - start
    assert worst < 1e-8
    report(4, "reduced-spectrum-kernel-oracle", elapsed, 10.0, f"max|diff|={worst:.2e} < 1e-8")


def test_criterion_05_kraus_completeness():
    start = time.perf_counter()
    deficits = []
    for g in (0.1414, 1.0):
        n_cut = int(np.ceil(g + 30))
        channel = build_channel(g, 65.0, 32, n_cut=n_cut)
        deficits.append(channel.completeness_deficit())
    elapsed = time.perf_counter() - start
    assert max(deficits) < 1e-12
    report(
        5, "kraus-completeness", elapsed, 1.0,
        f"deficits={deficits[0]:.1e},{deficits[1]:.1e} < 1e-12",
    )


def test_criterion_06_bessel_equals_quadrature():
    start = time.perf_counter()
    M, g = 16, 0.1414
    N = float(2 * M + 1)
    channel = build_channel(g, N, M)
    n_theta = 4 * (default_shift_cutoff(g) + M)
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(10):
        rho = random_density_matrix(2 * M + 1, rng)
        a = apply_bessel(channel, rho, leakage_tol=None)
        b = apply_quadrature(g, N, n_theta, rho)
        worst = max(worst, float(np.abs(a - b).max()))
    elapsed = time.perf_counter() - start
    assert worst < 1e-10
    report(6, "bessel-vs-quadrature", elapsed, 30.0, f"max elementwise diff={worst:.2e} < 1e-10")


def test_criterion_07_fig2_kicked_trajectory():
    start = time.perf_counter()
    M, g = 32, 0.1414
    channel = build_channel(g, float(2 * M + 1), M)
    records, _ = iterate(channel, ground_state(M), 200)
    elapsed = time.perf_counter() - start
    entropies = np.array([r.entropy for r in records])
    trace_devs = np.abs(np.array([r.trace for r in records]) - 1.0)
    assert np.all(np.diff(entropies) >= -1e-9)
    assert trace_devs.max() < 1e-10
    report(
        7, "fig2-entropy-monotone-200-kicks", elapsed, 120.0,
        f"S(200)={entropies[-1]:.4f} min_dS={np.diff(entropies).min():.1e} "
        f"max_trace_dev={trace_devs.max():.1e}",
    )


def test_criterion_08_stationary_bath_convergence():
    start = time.perf_counter()
    g, M_S, M_B, tau = 0.2, 8, 20, 1.0
    rho_s = ground_state(M_S)
    one_kick_gap = 0.0
    two_kick = []
    for m_b in (100.0, 200.0, 400.0, 800.0):
        params = KickedSystemParams(g=g, tau=tau, m_s=1.0, m_b=m_b, M_S=M_S, M_B=M_B)
        reduced, _ = reduced_system_trajectory(params, rho_s, BathSpec.eigenstate(0), 2)
        channel = build_channel(g, params.N, M_S)
        one_kick_gap = max(
            one_kick_gap, trace_distance(reduced[1], apply_bessel(channel, rho_s))
        )
        n_theta = 4 * (default_shift_cutoff(g) + M_S)
        ref = apply_stationary_n(g, params.N, n_theta, rho_s, 2)
        two_kick.append(trace_distance(reduced[2], ref))
    elapsed = time.perf_counter() - start
    # one kick: the stationary-bath channel is exact for an eigenstate bath
    assert one_kick_gap < 1e-12
    # first non-trivial kick: distance to the stationary-bath map halves per
    # m_B doubling (monotone over the ladder)
    assert all(b < a for a, b in zip(two_kick, two_kick[1:]))
    report(
        8, "stationary-bath-mB-ladder", elapsed, 120.0,
        f"one-kick={one_kick_gap:.1e} (<1e-12); two-kick="
        + ">".join(f"{d:.2e}" for d in two_kick),
    )


def test_criterion_09_born_scaling():
    start = time.perf_counter()
    gs = np.array([0.4, 0.2, 0.1, 0.05])
    dists = []
    for g in gs:
        params = KickedSystemParams(g=float(g), tau=1.0, m_s=1.0, m_b=1000.0, M_S=8, M_B=20)
        dists.append(bath_perturbation(params, BathSpec.flat(8)))
    slope = np.polyfit(np.log(gs), np.log(dists), 1)[0]
    elapsed = time.perf_counter() - start
    assert slope == pytest.approx(2.0, abs=0.1)
    report(9, "born-scaling-slope", elapsed, 60.0, f"log-log slope={slope:.4f} vs 2.0+-0.1")


def test_criterion_10_fig3_lindblad_kicked():
    start = time.perf_counter()
    M, g = 16, 0.1414
    gen = make_generator(M, gamma=g**2 / 2.0, boundary="periodic")
    records, _ = kicked_trajectory(gen, 1.0, ground_state(M), 12000)
    elapsed = time.perf_counter() - start
    entropies = np.array([r.entropy for r in records])
    target = np.log(2 * M + 1)
    assert np.all(np.diff(entropies) >= -1e-9)
    assert entropies[-1] > 0.99 * target
    report(
        10, "fig3-approach-maximally-mixed", elapsed, 120.0,
        f"S(end)={entropies[-1]:.4f} vs ln(33)={target:.4f} "
        f"({100 * entropies[-1] / target:.2f}%), monotone",
    )


def test_criterion_11_lindblad_dense_oracle():
    start = time.perf_counter()
    M, tau = 8, 1.0
    gen = make_generator(M, gamma=0.1414**2 / 2.0, boundary="truncate")
    superop = lindblad_kick_superop(gen, tau)
    m = np.arange(-M, M + 1)
    ket = np.exp(-(m**2) / 6.0 + 0.2j * m)
    ket /= np.linalg.norm(ket)
    rho = np.outer(ket, ket.conj())
    rho_dense = rho.copy()
    worst = 0.0
    for _ in range(20):
        rho = cli.lindblad.kicked_flow_step(gen, tau, rho)
        rho_dense = apply_superop(superop, rho_dense)
        worst = max(worst, trace_distance(rho, rho_dense))
    elapsed = time.perf_counter() - start
    assert worst < 1e-6
    report(11, "lindblad-dense-superop-oracle", elapsed, 30.0, f"max dist={worst:.2e} < 1e-6")


def test_criterion_12_double_scaling_limit():
    start = time.perf_counter()
    M, g_prime = 4, 0.4
    m = np.arange(-M, M + 1)
    ket = np.exp(-(m**2) / 4.0 + 0.3j * m)
    ket /= np.linalg.norm(ket)
    rho0 = np.outer(ket, ket.conj())
    gen_c = make_generator(M, g_prime**2 / 2.0, boundary="periodic")
    _, target = continuous_evolve(gen_c, rho0, t_final=1.0, dt=0.002)
    errors = []
    for L in (8, 16, 32):
        tau = 1.0 / L
        gen_k = double_scaling_generator(M, g_prime, tau)
        _, rho = kicked_trajectory(gen_k, tau, rho0, L)
        errors.append(trace_distance(rho, target))
    elapsed = time.perf_counter() - start
    assert errors[1] < errors[0] and errors[2] < errors[1]
    report(
        12, "double-scaling-limit", elapsed, 60.0,
        "err(L=8,16,32)=" + ">".join(f"{e:.2e}" for e in errors),
    )


def test_criterion_13_bath_correlation_kernel():
    start = time.perf_counter()
    m_b = 1.0
    # equal-time value is exact arithmetic
    for N0 in (100, 1000, 10000):
        val = kernel_value(N0, m_b, 0.0)
        assert val.real == (2 * N0 + 1) / (4.0 * N0)
        assert val.imag == 0.0
    # off-diagonal max decays as 1/N0 across the ladder
    targets = np.linspace(1.0, 3.0, 9)
    maxima = [
        off_diagonal_max(N0, antinode_grid(N0, m_b, targets), m_b)
        for N0 in (100, 1000, 10000)
    ]
    ratios = [maxima[0] / maxima[1], maxima[1] / maxima[2]]
    assert all(r == pytest.approx(10.0, rel=0.1) for r in ratios)
    # closed form vs direct summation at N0 = 1000
    worst = 0.0
    for delta in np.linspace(0.05, 3.0, 31):
        diff = abs(kernel_value(1000, m_b, float(delta)) - correlation_direct_sum(1000, m_b, float(delta)))
        worst = max(worst, diff)
    elapsed = time.perf_counter() - start
    assert worst < 1e-13
    report(
        13, "bath-correlation-delta-limit", elapsed, 10.0,
        f"max|closed-direct|={worst:.1e} < 1e-13; "
        "N0*max=" + ",".join(f"{N0 * m:.3f}" for N0, m in zip((100, 1000, 10000), maxima)),
    )
