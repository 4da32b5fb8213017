"""Exact unitary evolution of the kicked two-rotor system on a truncated
product momentum basis.

This is the ground-truth oracle for the stationary-bath channel: the full
Floquet operator U = KICK * exp(-i p_S^2 tau / 2 m_S) (x) exp(-i p_B^2 tau / 2 m_B)
is built densely, with the kick expanded through the Jacobi-Anger selection
rule: a transition with relative momentum transfer delta carries amplitude
(-i)^delta J_delta(g) and conserves m_S + m_B exactly.

Basis indexing is row-major in (m_S, m_B); use densmat.partial_trace_bath /
partial_trace_system on the evolved matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import jv

from .densmat import partial_trace_bath, partial_trace_system, trace_distance
from .errors import LeakageError, ShapeError, ValidationError

MAX_PRODUCT_DIM = 16384
UNITARITY_TOL = 1e-10


@dataclass(frozen=True)
class KickedSystemParams:
    """Kick strength, period, masses and momentum cutoffs for both rotors."""

    g: float
    tau: float
    m_s: float
    m_b: float
    M_S: int
    M_B: int

    def __post_init__(self):
        if self.tau <= 0:
            raise ValidationError(f"tau must be > 0, got {self.tau}")
        if self.m_s <= 0 or self.m_b <= 0:
            raise ValidationError("masses must be > 0")
        if self.M_S < 1 or self.M_B < 1:
            raise ValidationError("momentum cutoffs must be >= 1")
        if self.dim_product > MAX_PRODUCT_DIM:
            raise ValidationError(
                f"product dimension {self.dim_product} exceeds the desk-scale cap {MAX_PRODUCT_DIM}"
            )

    @property
    def N(self) -> float:
        """System Hilbert-space dimension parameter 2 pi m_S / tau (derived, never set)."""
        return 2.0 * np.pi * self.m_s / self.tau

    @property
    def dim_s(self) -> int:
        return 2 * self.M_S + 1

    @property
    def dim_b(self) -> int:
        return 2 * self.M_B + 1

    @property
    def dim_product(self) -> int:
        return self.dim_s * self.dim_b


@dataclass(frozen=True)
class BathSpec:
    """Diagonal bath ensemble: weights c_nu over nu = -N0..N0."""

    N0: int
    weights: np.ndarray
    beta: float = 0.0

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "weights", w)
        if self.N0 < 0:
            raise ValidationError("N0 must be >= 0")
        if w.size != 2 * self.N0 + 1:
            raise ShapeError(f"need {2 * self.N0 + 1} weights, got {w.size}")
        if w.min() < 0 or w.max() > 1:
            raise ValidationError("bath weights must lie in [0, 1]")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValidationError(f"bath weights sum to {w.sum():.15g}, not 1")

    @classmethod
    def flat(cls, N0: int, beta: float = 0.0) -> "BathSpec":
        """The idealized flat cutoff: c_nu = 1/(2 N0 + 1) for |nu| <= N0."""
        n = 2 * N0 + 1
        return cls(N0=N0, weights=np.full(n, 1.0 / n), beta=beta)

    @classmethod
    def eigenstate(cls, nu: int = 0) -> "BathSpec":
        """Bath prepared in the single momentum eigenstate |nu>."""
        N0 = abs(nu)
        w = np.zeros(2 * N0 + 1)
        w[nu + N0] = 1.0
        return cls(N0=N0, weights=w)

    def density_matrix(self, M_B: int) -> np.ndarray:
        """Embed the diagonal ensemble in the 2 M_B + 1 dimensional bath space."""
        if self.N0 > M_B:
            raise ShapeError(f"bath cutoff N0 = {self.N0} exceeds M_B = {M_B}")
        diag = np.zeros(2 * M_B + 1)
        diag[M_B - self.N0 : M_B + self.N0 + 1] = self.weights
        return np.diag(diag).astype(complex)


def kick_matrix_elements(g: float, delta) -> complex | np.ndarray:
    """Amplitude (-i)^delta J_delta(g) of a momentum-conserving kick transition."""
    delta = np.asarray(delta)
    out = (-1j) ** delta * jv(delta, g)
    return out if out.ndim else complex(out)


def kick_coefficients_fft(g: float, n_max: int, n_grid: int | None = None) -> np.ndarray:
    """Fourier coefficients of e^{-i g cos(phi)} for n = -n_max..n_max via DFT.

    Independent cross-check of kick_matrix_elements (no Bessel functions).
    """
    if n_grid is None:
        n_grid = max(256, 8 * n_max)
    phi = 2.0 * np.pi * np.arange(n_grid) / n_grid
    c = np.fft.fft(np.exp(-1j * g * np.cos(phi))) / n_grid
    n = np.arange(-n_max, n_max + 1)
    return c[n % n_grid]


def shift_matrix(dim: int, n: int) -> np.ndarray:
    """Momentum raising by n on a truncated basis (drops amplitudes, no wraparound)."""
    s = np.zeros((dim, dim))
    if abs(n) < dim:
        if n >= 0:
            s[n:, :dim - n] = np.eye(dim - n)
        else:
            s[:dim + n, -n:] = np.eye(dim + n)
    return s


def tail_cutoff(g: float, tol: float = 1e-16) -> int:
    """Smallest n with |J_k(g)| below tol for all k > n."""
    n = max(2, math.ceil(abs(g)))
    while abs(jv(n, g)) > tol:
        n += 1
    return n


def unitarity_band(g: float, tol: float = UNITARITY_TOL) -> int:
    """Distance from the momentum edge beyond which columns stay unitary.

    A column leaks 2 sum_{delta > b} J_delta(g)^2 when it sits b away from the
    edge; return the smallest b keeping that below tol/2.
    """
    top = tail_cutoff(g, 1e-16)
    j2 = jv(np.arange(top + 2), g) ** 2
    for b in range(top + 1):
        if 2.0 * j2[b + 1 :].sum() < 0.5 * tol:
            return b
    return top


def build_kick(g: float, M_S: int, M_B: int, n_cut: int | None = None) -> np.ndarray:
    """Kick operator e^{-i g cos(theta_S - theta_B)} on the product basis."""
    if n_cut is None:
        n_cut = tail_cutoff(g)
    dim_s, dim_b = 2 * M_S + 1, 2 * M_B + 1
    kick = np.zeros((dim_s * dim_b, dim_s * dim_b), dtype=complex)
    for delta in range(-n_cut, n_cut + 1):
        amp = kick_matrix_elements(g, delta)
        if amp == 0:
            continue
        kick += amp * np.kron(shift_matrix(dim_s, delta), shift_matrix(dim_b, -delta))
    return kick


def free_phases(params: KickedSystemParams) -> np.ndarray:
    """Diagonal of the free one-period propagator on the product basis."""
    ms = np.arange(-params.M_S, params.M_S + 1).astype(float)
    mb = np.arange(-params.M_B, params.M_B + 1).astype(float)
    ps = np.exp(-1j * ms**2 * params.tau / (2.0 * params.m_s))
    pb = np.exp(-1j * mb**2 * params.tau / (2.0 * params.m_b))
    return np.kron(ps, pb)


def unitarity_deficit(u: np.ndarray, interior: np.ndarray | None = None) -> float:
    """max |(U^dag U - 1)[i, j]| restricted to interior columns/rows."""
    d = u.conj().T @ u - np.eye(u.shape[0])
    if interior is not None:
        d = d[np.ix_(interior, interior)]
    return float(np.abs(d).max())


def interior_mask(params: KickedSystemParams, band: int) -> np.ndarray:
    """Product-basis states at least `band` away from both momentum edges."""
    ms = np.arange(-params.M_S, params.M_S + 1)
    mb = np.arange(-params.M_B, params.M_B + 1)
    ok_s = np.abs(ms) <= params.M_S - band
    ok_b = np.abs(mb) <= params.M_B - band
    return np.kron(ok_s, ok_b).astype(bool)


def build_floquet(params: KickedSystemParams, n_cut: int | None = None) -> np.ndarray:
    """One-kick Floquet operator U = KICK * (free system phase x free bath phase).

    Raises LeakageError when the truncation band leaves no interior states or
    the kick fails unitarity there.
    """
    if n_cut is None:
        n_cut = tail_cutoff(params.g)
    u = build_kick(params.g, params.M_S, params.M_B, n_cut) * free_phases(params)[None, :]
    band = min(unitarity_band(params.g), n_cut)
    mask = interior_mask(params, band)
    if not mask.any():
        raise LeakageError(
            f"cutoffs (M_S={params.M_S}, M_B={params.M_B}) smaller than the kick band {band}"
        )
    deficiency = unitarity_deficit(u, mask)
    if deficiency > UNITARITY_TOL:
        raise LeakageError(
            f"interior unitarity deficiency {deficiency:.3e} above {UNITARITY_TOL}; enlarge cutoffs"
        )
    return u


def product_state(params: KickedSystemParams, rho_s: np.ndarray, bath: BathSpec) -> np.ndarray:
    """rho_S (x) rho_B on the product basis."""
    rho_s = np.asarray(rho_s, dtype=complex)
    if rho_s.shape != (params.dim_s, params.dim_s):
        raise ShapeError(f"system state must be {params.dim_s}x{params.dim_s}")
    return np.kron(rho_s, bath.density_matrix(params.M_B))


def evolve(
    params: KickedSystemParams,
    state0: np.ndarray,
    n_kicks: int,
    u: np.ndarray | None = None,
) -> list[np.ndarray]:
    """Apply the Floquet operator n_kicks times to a ket (1d) or density matrix (2d).

    Returns the trajectory including the initial state (length n_kicks + 1).
    """
    if u is None:
        u = build_floquet(params)
    state = np.asarray(state0, dtype=complex)
    traj = [state]
    for _ in range(n_kicks):
        if state.ndim == 1:
            state = u @ state
        elif state.ndim == 2:
            state = u @ state @ u.conj().T
        else:
            raise ShapeError("state must be a ket (1d) or a density matrix (2d)")
        traj.append(state)
    return traj


def reduced_system_trajectory(
    params: KickedSystemParams,
    rho_s0: np.ndarray,
    bath: BathSpec,
    n_kicks: int,
    u: np.ndarray | None = None,
) -> tuple[list[np.ndarray], list[float]]:
    """Exact reduced system states tr_B rho(n tau) and bath distances per kick.

    The second list holds the trace distance of tr_S rho(n tau) from the
    initial bath state (the stationary-bath diagnostic).
    """
    rho_b0 = bath.density_matrix(params.M_B)
    traj = evolve(params, product_state(params, rho_s0, bath), n_kicks, u=u)
    dims = (params.dim_s, params.dim_b)
    reduced = [partial_trace_bath(r, dims) for r in traj]
    bath_dist = [trace_distance(partial_trace_system(r, dims), rho_b0) for r in traj]
    return reduced, bath_dist


def bath_perturbation(
    params: KickedSystemParams,
    bath: BathSpec,
    n_kicks: int = 1,
    rho_s0: np.ndarray | None = None,
    u: np.ndarray | None = None,
) -> float:
    """Trace distance of the evolved bath from its initial state after n kicks.

    Defaults to the system prepared in the zero-momentum eigenstate. This is
    the Born-approximation diagnostic: it scales as g^2 for one kick.
    """
    if rho_s0 is None:
        rho_s0 = np.zeros((params.dim_s, params.dim_s), dtype=complex)
        rho_s0[params.M_S, params.M_S] = 1.0
    _, dist = reduced_system_trajectory(params, rho_s0, bath, n_kicks, u=u)
    return dist[-1]
