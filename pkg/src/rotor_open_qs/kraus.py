"""Stationary-bath one-kick CPTP map on the system rotor.

The channel is the Bessel-weighted Kraus family

    K_n = J_n(g) * (momentum shift by -n) * diag(e^{-i pi m^2 / N}),

whose completeness sum_n J_n(g)^2 = 1 is the Jacobi-Anger sum rule. Two
interchangeable applications are provided: the analytic Bessel selection rule
(`apply_bessel`) and an angle-grid quadrature built purely from FFTs of the
sampled kick phase (`apply_quadrature`). They must agree to 1e-10; the
quadrature path never touches Bessel functions, so the pair is a genuine
two-implementation check.

Momentum shifts drop amplitudes at the truncation edge (no wraparound; the
physical momentum lattice is unbounded). The resulting trace deficit is the
monitored leakage metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh
from scipy.special import jv

from .densmat import ENTROPY_FLOOR
from .errors import CompletenessError, LeakageError, QuadratureError, ShapeError

COMPLETENESS_TOL = 1e-12
LEAKAGE_TOL = 1e-8


def default_shift_cutoff(g: float) -> int:
    """Tail rule n_cut >= g + 30; J_n(g) is far below 1e-12 there."""
    return math.ceil(abs(g)) + 30


def bessel_weights(g: float, n_cut: int) -> np.ndarray:
    """J_n(g) for n = -n_cut..n_cut."""
    return jv(np.arange(-n_cut, n_cut + 1), g)


@dataclass(frozen=True)
class KrausChannel:
    """One-kick channel data: weights J_n(g) and free-kick phases."""

    g: float
    N: float  # dimension parameter 2 pi m_S / tau
    n_cut: int
    weights: np.ndarray  # J_n(g), n = -n_cut..n_cut
    free_phases: np.ndarray  # e^{-i pi m^2 / N}, m = -M..M

    @property
    def M(self) -> int:
        return (self.free_phases.size - 1) // 2

    @property
    def dim(self) -> int:
        return self.free_phases.size

    def completeness_deficit(self) -> float:
        return abs(float(np.sum(self.weights**2)) - 1.0)


def build_channel(g: float, N: float, M: int, n_cut: int | None = None) -> KrausChannel:
    """Assemble the channel; raises if the shift truncation breaks completeness."""
    if n_cut is None:
        n_cut = default_shift_cutoff(g)
    weights = bessel_weights(g, n_cut)
    deficit = abs(float(np.sum(weights**2)) - 1.0)
    if deficit > COMPLETENESS_TOL:
        raise CompletenessError(
            f"1 - sum J_n^2 = {deficit:.3e} at n_cut = {n_cut}; increase n_cut"
        )
    m = np.arange(-M, M + 1)
    phases = np.exp(-1j * np.pi * m.astype(float) ** 2 / N)
    return KrausChannel(g=g, N=N, n_cut=n_cut, weights=weights, free_phases=phases)


def _shifted(x: np.ndarray, n: int) -> np.ndarray:
    """Shift_n X Shift_n^dag: move both indices by +n, dropping what falls off."""
    d = x.shape[0]
    out = np.zeros_like(x)
    if abs(n) >= d:
        return out
    if n >= 0:
        out[n:, n:] = x[: d - n, : d - n]
    else:
        out[: d + n, : d + n] = x[-n:, -n:]
    return out


def _free_evolved(channel: KrausChannel, rho: np.ndarray) -> np.ndarray:
    u = channel.free_phases
    return (u[:, None] * rho) * u.conj()[None, :]


def apply_bessel(
    channel: KrausChannel, rho: np.ndarray, leakage_tol: float | None = LEAKAGE_TOL
) -> np.ndarray:
    """One kick via the Bessel selection rule: sum_n J_n^2 Shift_{-n} Uf rho Uf^dag Shift_{-n}^dag."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (channel.dim, channel.dim):
        raise ShapeError(f"expected {(channel.dim, channel.dim)}, got {rho.shape}")
    tilde = _free_evolved(channel, rho)
    out = np.zeros_like(tilde)
    for i, n in enumerate(range(-channel.n_cut, channel.n_cut + 1)):
        w = channel.weights[i] ** 2
        if w == 0.0:
            continue
        out += w * _shifted(tilde, -n)
    if leakage_tol is not None:
        leak = abs(np.real(np.trace(out)) - np.real(np.trace(rho)))
        if leak > leakage_tol:
            raise LeakageError(f"boundary leakage {leak:.3e} above {leakage_tol}; enlarge M")
    return out


def _require_resolved(g: float, M: int, N_theta: int) -> None:
    needed = 4 * (default_shift_cutoff(g) + M)
    if N_theta < needed:
        raise QuadratureError(
            f"N_theta = {N_theta} under-resolves the kick (need >= {needed}); "
            "the theta-average would disagree with the Bessel path"
        )


def _kick_matrix_at_angle(g: float, theta: float, M: int, n_grid: int) -> np.ndarray:
    """Momentum-basis matrix of e^{-i g cos(theta - theta_S)} via FFT sampling.

    Toeplitz in the momentum transfer; no Bessel identity enters, which keeps
    the quadrature route independent of the analytic one.
    """
    phi = 2.0 * np.pi * np.arange(n_grid) / n_grid
    c = np.fft.fft(np.exp(-1j * g * np.cos(theta - phi))) / n_grid
    m = np.arange(-M, M + 1)
    return c[(m[:, None] - m[None, :]) % n_grid]


def apply_quadrature(g: float, N: float, N_theta: int, rho: np.ndarray) -> np.ndarray:
    """One kick as a uniform theta-average of K_theta rho K_theta^dag.

    Requires N_theta >= 4 (n_cut + M) so aliased Fourier content is negligible;
    the uniform average is then exact (the integrand is a trigonometric
    polynomial of bounded degree).
    """
    rho = np.asarray(rho, dtype=complex)
    M = (rho.shape[0] - 1) // 2
    _require_resolved(g, M, N_theta)
    m = np.arange(-M, M + 1)
    uf = np.exp(-1j * np.pi * m.astype(float) ** 2 / N)
    tilde = (uf[:, None] * rho) * uf.conj()[None, :]
    out = np.zeros_like(tilde)
    for theta in 2.0 * np.pi * np.arange(N_theta) / N_theta:
        k_theta = _kick_matrix_at_angle(g, theta, M, N_theta)
        out += k_theta @ tilde @ k_theta.conj().T
    return out / N_theta


def apply_stationary_n(
    g: float, N: float, N_theta: int, rho: np.ndarray, n_kicks: int
) -> np.ndarray:
    """n kicks under a stationary bath: theta-average of the n-fold product.

    (1/2pi) int dtheta (K_theta Uf)^n rho (Uf^dag K_theta^dag)^n -- the kick
    angle is shared across kicks instead of averaged per kick, which is what
    the exact dynamics with a heavy stationary bath reduces to. For one kick
    this coincides with the Markovian channel; for n >= 2 the two differ by
    the bath-reset assumption.
    """
    rho = np.asarray(rho, dtype=complex)
    M = (rho.shape[0] - 1) // 2
    _require_resolved(g, M, N_theta)
    m = np.arange(-M, M + 1)
    uf = np.diag(np.exp(-1j * np.pi * m.astype(float) ** 2 / N))
    out = np.zeros_like(rho)
    for theta in 2.0 * np.pi * np.arange(N_theta) / N_theta:
        step = _kick_matrix_at_angle(g, theta, M, N_theta) @ uf
        op = np.linalg.matrix_power(step, n_kicks)
        out += op @ rho @ op.conj().T
    return out / N_theta


@dataclass(frozen=True)
class KickRecord:
    kick: int
    entropy: float
    trace: float
    purity: float


def _record(kick: int, rho: np.ndarray) -> KickRecord:
    lam = eigvalsh(rho)
    pos = lam[lam > ENTROPY_FLOOR]
    return KickRecord(
        kick=kick,
        entropy=float(-np.sum(pos * np.log(pos)) + 0.0),
        trace=float(np.real(np.trace(rho))),
        purity=float(np.real(np.vdot(rho, rho))),
    )


def iterate(
    channel: KrausChannel,
    rho0: np.ndarray,
    n_kicks: int,
    leakage_tol: float | None = LEAKAGE_TOL,
    record_every: int = 1,
) -> tuple[list[KickRecord], np.ndarray]:
    """Iterate the channel; returns per-kick records and the final state.

    The per-kick records carry entropy, trace (leakage shows up here) and
    purity. Kick 0 is the initial state.
    """
    rho = np.asarray(rho0, dtype=complex)
    records = [_record(0, rho)]
    for k in range(1, n_kicks + 1):
        rho = apply_bessel(channel, rho, leakage_tol=None)
        if leakage_tol is not None:
            leak = abs(np.real(np.trace(rho)) - 1.0)
            if leak > leakage_tol:
                raise LeakageError(
                    f"trace deficit {leak:.3e} above {leakage_tol} at kick {k}; enlarge M"
                )
        if k % record_every == 0 or k == n_kicks:
            records.append(_record(k, rho))
    return records, rho
