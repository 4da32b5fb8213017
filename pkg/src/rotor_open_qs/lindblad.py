"""GKSL sector: jump operators cos(theta_S), sin(theta_S), the kicked flow
operator, and the continuous double-scaling-limit evolution.

The dissipator is D[rho] = gamma (cos rho cos + sin rho sin - rho), with
cos = (S+ + S-)/2 and sin = (S+ - S-)/(2i) built from unit momentum shifts.
Algebraically cos rho cos + sin rho sin = (S+ rho S+^dag + S- rho S-^dag)/2,
a pure hopping channel.

Two boundary treatments are supported:

* ``truncate`` -- shifts drop amplitudes at the momentum cutoff. Then
  cos^2 + sin^2 = 1 holds on interior indices with value 1/2 on the two edge
  momenta, so unitality statements hold for interior-supported states and
  edge occupation is the quantity to monitor.
* ``periodic`` -- cyclic shifts, i.e. the system rotor treated as genuinely
  finite-dimensional. The generator is exactly unital and trace preserving,
  and the maximally mixed state is the long-time limit; this is the mode the
  decoherence (Fig.-3 style) runs use.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh

from .densmat import ENTROPY_FLOOR
from .errors import ShapeError, ToleranceError, ValidationError

BOUNDARIES = ("truncate", "periodic")
SERIES_TOL = 1e-14
SERIES_MAX_TERMS = 200
TRACE_DRIFT_TOL = 1e-8


def raising_operator(dim: int, periodic: bool) -> np.ndarray:
    """Unit momentum shift S+ (|m> -> |m+1>), truncated or cyclic."""
    s = np.zeros((dim, dim))
    idx = np.arange(dim - 1)
    s[idx + 1, idx] = 1.0
    if periodic:
        s[0, dim - 1] = 1.0
    return s


@dataclass(frozen=True)
class LindbladGenerator:
    """Jump operators, damping rate and free Hamiltonian on momenta -M..M.

    ``gamma`` is the per-kick weight g^2/2 when driving kicked_flow_step and
    the per-unit-time rate g'^2/2 when driving continuous_evolve.
    """

    M: int
    cos_op: np.ndarray
    sin_op: np.ndarray
    gamma: float
    hs: np.ndarray  # diagonal free energies m^2 / (2 m_S)
    boundary: str = "truncate"

    @property
    def dim(self) -> int:
        return 2 * self.M + 1


def make_generator(
    M: int, gamma: float, m_s: float = 1.0, boundary: str = "truncate"
) -> LindbladGenerator:
    if boundary not in BOUNDARIES:
        raise ValidationError(f"boundary must be one of {BOUNDARIES}, got {boundary!r}")
    if gamma < 0:
        raise ValidationError("damping rate must be >= 0")
    dim = 2 * M + 1
    s_plus = raising_operator(dim, periodic=(boundary == "periodic"))
    cos_op = 0.5 * (s_plus + s_plus.T)
    sin_op = (s_plus - s_plus.T) / 2.0j
    m = np.arange(-M, M + 1).astype(float)
    return LindbladGenerator(
        M=M, cos_op=cos_op, sin_op=sin_op, gamma=gamma,
        hs=m**2 / (2.0 * m_s), boundary=boundary,
    )


def double_scaling_generator(
    M: int, g_prime: float, tau: float, m_s: float = 1.0, boundary: str = "periodic"
) -> LindbladGenerator:
    """Kicked generator whose per-kick weight matches the continuous rate.

    A kick of weight w = (g'^2/2) tau per period accumulates the continuous
    damping g'^2/2 per unit time, so kicked trajectories with tau -> 0
    converge to continuous_evolve at fixed g' (first-order splitting error).
    Equivalently, the kick strength is g = g' sqrt(tau).
    """
    return make_generator(M, gamma=0.5 * g_prime**2 * tau, m_s=m_s, boundary=boundary)


def _check_dim(gen: LindbladGenerator, rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (gen.dim, gen.dim):
        raise ShapeError(f"expected {(gen.dim, gen.dim)}, got {rho.shape}")
    return rho


def dissipator(gen: LindbladGenerator, rho: np.ndarray) -> np.ndarray:
    """D[rho] = gamma (cos rho cos + sin rho sin - rho)."""
    rho = _check_dim(gen, rho)
    return gen.gamma * (
        gen.cos_op @ rho @ gen.cos_op + gen.sin_op @ rho @ gen.sin_op - rho
    )


def exp_dissipator(
    gen: LindbladGenerator,
    rho: np.ndarray,
    tol: float = SERIES_TOL,
    max_terms: int = SERIES_MAX_TERMS,
) -> np.ndarray:
    """exp(D)[rho] by the action-wise superoperator series sum_k D^k[rho]/k!."""
    rho = _check_dim(gen, rho)
    out = rho.copy()
    term = rho
    for k in range(1, max_terms + 1):
        term = dissipator(gen, term) / k
        out += term
        if np.abs(term).max() < tol:
            return out
    raise ToleranceError(f"dissipator exponential series not converged in {max_terms} terms")


def free_step(gen: LindbladGenerator, tau: float, rho: np.ndarray) -> np.ndarray:
    """rho -> e^{-i H_S tau} rho e^{i H_S tau} (H_S diagonal in momentum)."""
    rho = _check_dim(gen, rho)
    u = np.exp(-1j * gen.hs * tau)
    return (u[:, None] * rho) * u.conj()[None, :]


def kicked_flow_step(gen: LindbladGenerator, tau: float, rho: np.ndarray) -> np.ndarray:
    """One kick of the GKSL flow: free evolution over tau, then exp(D)."""
    return exp_dissipator(gen, free_step(gen, tau, rho))


def edge_occupation(rho: np.ndarray) -> float:
    """Population on the two extreme momenta (the truncation monitor)."""
    return float(np.real(rho[0, 0] + rho[-1, -1]))


@dataclass(frozen=True)
class FlowRecord:
    step_or_t: float
    entropy: float
    trace_dev: float
    edge_occupation: float


def _flow_record(label: float, rho: np.ndarray) -> FlowRecord:
    lam = eigvalsh(rho)
    pos = lam[lam > ENTROPY_FLOOR]
    return FlowRecord(
        step_or_t=label,
        entropy=float(-np.sum(pos * np.log(pos)) + 0.0),
        trace_dev=abs(float(np.real(np.trace(rho))) - 1.0),
        edge_occupation=edge_occupation(rho),
    )


def kicked_trajectory(
    gen: LindbladGenerator,
    tau: float,
    rho0: np.ndarray,
    n_kicks: int,
    record_every: int = 1,
) -> tuple[list[FlowRecord], np.ndarray]:
    """Iterate the kicked flow; records (kick, S, trace_dev, edge_occupation)."""
    rho = _check_dim(gen, rho0)
    records = [_flow_record(0, rho)]
    for k in range(1, n_kicks + 1):
        rho = kicked_flow_step(gen, tau, rho)
        if k % record_every == 0 or k == n_kicks:
            records.append(_flow_record(k, rho))
    return records, rho


def _rhs(gen: LindbladGenerator, rho: np.ndarray) -> np.ndarray:
    h = gen.hs
    comm = (h[:, None] - h[None, :]) * rho  # [H, rho] for diagonal H
    return -1j * comm + dissipator(gen, rho)


def continuous_evolve(
    gen: LindbladGenerator,
    rho0: np.ndarray,
    t_final: float,
    dt: float,
    record_every: int = 1,
) -> tuple[list[FlowRecord], np.ndarray]:
    """Fixed-step RK4 integration of rho' = -i[H_S, rho] + D[rho].

    Requires dt <= 0.1/gamma; aborts if the trace drifts beyond 1e-8 (the
    step-size instability signal).
    """
    rho = _check_dim(gen, rho0)
    if gen.gamma > 0 and dt > 0.1 / gen.gamma:
        raise ValidationError(f"dt = {dt} violates dt <= 0.1/gamma = {0.1 / gen.gamma}")
    n_steps = int(round(t_final / dt))
    records = [_flow_record(0.0, rho)]
    for k in range(1, n_steps + 1):
        k1 = _rhs(gen, rho)
        k2 = _rhs(gen, rho + 0.5 * dt * k1)
        k3 = _rhs(gen, rho + 0.5 * dt * k2)
        k4 = _rhs(gen, rho + dt * k3)
        rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        drift = abs(float(np.real(np.trace(rho))) - 1.0)
        if drift > TRACE_DRIFT_TOL:
            raise ToleranceError(
                f"trace drift {drift:.3e} above {TRACE_DRIFT_TOL} at t = {k * dt:.6g}; reduce dt"
            )
        if k % record_every == 0 or k == n_steps:
            records.append(_flow_record(k * dt, rho))
    return records, rho
