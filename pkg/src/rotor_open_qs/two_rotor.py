"""Static two-rotor entanglement: Mathieu mode -> reduced spectrum -> entropy.

For an even cosine mode with coefficients A_{2k}, the reduced state of one
rotor has eigenvalues p_0 = 2 A_0^2 and p_k = p_{-k} = A_{2k}^2 / 2; the sum
rule p_0 + 2 sum_k p_k = 1 is automatic from the Mathieu normalization.

A brute-force cross-check assembles the reduced kernel
rho_1(t, t') = integral over the traced angle of psi(t, .) conj(psi(t', .))
on a uniform grid and diagonalizes it numerically; the kernel depends only on
t - t', so it is circulant and its eigenfunctions are discrete Fourier modes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh

from .densmat import ReducedSpectrum, spectrum_entropy
from .errors import SectorError, ValidationError
from .mathieu import MathieuMode, coupling_to_q, even_coefficients, evaluate_ce, pendulum_energy

KERNEL_GRID_DEFAULT = 512


@dataclass(frozen=True)
class BoundStateResult:
    """One point of the entropy-vs-coupling sweep."""

    g: float
    E2: float
    spectrum: ReducedSpectrum
    entropy: float


def reduced_spectrum(mode: MathieuMode) -> ReducedSpectrum:
    """Reduced-state eigenvalues from the mode's Fourier coefficients."""
    if mode.normalization_defect() > 1e-10:
        raise ValidationError(
            f"mode not normalized (defect {mode.normalization_defect():.3e})"
        )
    c = mode.coeffs
    return ReducedSpectrum(p0=float(2.0 * c[0] ** 2), pk=c[1:] ** 2 / 2.0).validate()


def bound_state(
    g: float, order: int = 0, convention: str = "paper-numbers", K: int | None = None
) -> BoundStateResult:
    """Solve one coupling: mode, energy, reduced spectrum, entropy."""
    q = coupling_to_q(g, convention)
    mode = even_coefficients(q, order, K)
    spec = reduced_spectrum(mode)
    return BoundStateResult(
        g=g,
        E2=pendulum_energy(g, order // 2, convention, K),
        spectrum=spec,
        entropy=spectrum_entropy(spec),
    )


def entropy_vs_coupling(
    g_grid, order: int = 0, convention: str = "paper-numbers", K: int | None = None
) -> list[BoundStateResult]:
    """Entropy sweep over couplings (the Fig.-1 pipeline)."""
    g_grid = np.asarray(g_grid, dtype=float)
    if (g_grid < 0).any():
        raise ValueError("couplings must be >= 0")
    return [bound_state(g, order, convention, K) for g in g_grid]


def excited_state_spectrum(
    q: float, order: int, K: int | None = None
) -> BoundStateResult:
    """Reduced spectrum of a higher even cosine mode at Mathieu parameter q.

    The coupling/energy bookkeeping uses the paper-numbers convention (g = q).
    """
    if order % 2 != 0:
        raise SectorError(
            f"order {order}: odd / 2pi-periodic sector is not modeled"
        )
    mode = even_coefficients(q, order, K)
    spec = reduced_spectrum(mode)
    return BoundStateResult(
        g=q,
        E2=float(mode.a + q),
        spectrum=spec,
        entropy=spectrum_entropy(spec),
    )


def kernel_spectrum(
    mode: MathieuMode, n_grid: int = KERNEL_GRID_DEFAULT, com_m: int = 0
) -> np.ndarray:
    """Brute-force reduced-state eigenvalues via the assembled rho_1 kernel.

    Builds psi(t1, t2) = e^{i m (t1+t2)/2} ce((t1-t2)/2) / (sqrt(2) pi) on an
    n_grid x n_grid angle grid, integrates out t2 by the (uniform) trapezoidal
    rule and diagonalizes the resulting integral operator. Returns eigenvalues
    sorted descending. com_m must be even (pi-periodic sector).
    """
    if com_m % 2 != 0:
        raise SectorError("center-of-mass quantum number must be even in this sector")
    theta = 2.0 * np.pi * np.arange(n_grid) / n_grid
    diff = 0.5 * (theta[:, None] - theta[None, :])
    psi = np.exp(0.5j * com_m * (theta[:, None] + theta[None, :]))
    psi *= evaluate_ce(mode, diff.ravel()).reshape(n_grid, n_grid)
    psi /= np.sqrt(2.0) * np.pi
    w = 2.0 * np.pi / n_grid
    rho1 = w * (psi @ psi.conj().T)
    # eigenvalues of the integral operator: kernel matrix times the quadrature weight
    return np.sort(eigvalsh(w * rho1))[::-1]
