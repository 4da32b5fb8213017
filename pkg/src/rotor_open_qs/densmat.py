"""Density matrices on a truncated rotor momentum basis.

States live on integer momenta m in {-M, ..., M} (dim = 2M+1). Everything
here is a pure function of immutable inputs; matrices are validated against
the usual density-matrix invariants (Hermitian, unit trace, PSD) with
explicit tolerances so that violations name the offending invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigvalsh

from .errors import ShapeError, ValidationError

# Floor under the entropy log; eigensolver noise produces harmless tiny
# negatives that must contribute nothing.
ENTROPY_FLOOR = 1e-14

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
PSD_TOL = 1e-10


def momenta(M: int) -> np.ndarray:
    """Integer momentum labels for cutoff M, ordered -M..M."""
    return np.arange(-M, M + 1)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, PSD, unit-trace matrix over momenta -M..M.

    ``mat[i, j]`` is the element between momenta ``i - M`` and ``j - M``.
    """

    mat: np.ndarray
    basis_offset: int

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ShapeError(f"density matrix must be square, got {m.shape}")
        if m.shape[0] != 2 * self.basis_offset + 1:
            raise ShapeError(
                f"dim {m.shape[0]} inconsistent with basis_offset {self.basis_offset}"
            )

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def validate(self) -> "DensityMatrix":
        """Check Hermiticity, trace and positivity; raise ValidationError naming the failure."""
        herm = np.abs(self.mat - self.mat.conj().T).max()
        if herm > HERMITICITY_TOL:
            raise ValidationError(f"not Hermitian: max |rho - rho^dag| = {herm:.3e}")
        tr = self.mat.trace()
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValidationError(f"trace deviates from 1: tr = {tr:.15g}")
        lam_min = eigvalsh(self.mat)[0]
        if lam_min < -PSD_TOL:
            raise ValidationError(f"not PSD: min eigenvalue = {lam_min:.3e}")
        return self

    @classmethod
    def from_ket(cls, ket: np.ndarray, basis_offset: int) -> "DensityMatrix":
        k = np.asarray(ket, dtype=complex)
        k = k / np.linalg.norm(k)
        return cls(np.outer(k, k.conj()), basis_offset)

    @classmethod
    def momentum_eigenstate(cls, m: int, basis_offset: int) -> "DensityMatrix":
        ket = np.zeros(2 * basis_offset + 1)
        ket[m + basis_offset] = 1.0
        return cls.from_ket(ket, basis_offset)

    @classmethod
    def maximally_mixed(cls, basis_offset: int) -> "DensityMatrix":
        d = 2 * basis_offset + 1
        return cls(np.eye(d, dtype=complex) / d, basis_offset)


@dataclass(frozen=True)
class ReducedSpectrum:
    """Eigenvalues of a reduced rotor state: p0 plus pk for k = 1, 2, ...

    Each pk is counted twice (momenta +k and -k), so p0 + 2*sum(pk) = 1.
    """

    p0: float
    pk: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        object.__setattr__(self, "pk", np.asarray(self.pk, dtype=float))

    def validate(self) -> "ReducedSpectrum":
        probs = np.concatenate(([self.p0], self.pk))
        if probs.min() < -1e-12 or probs.max() > 1 + 1e-12:
            raise ValidationError(
                f"probabilities outside [0, 1]: min={probs.min():.3e} max={probs.max():.3e}"
            )
        total = self.p0 + 2.0 * self.pk.sum()
        if abs(total - 1.0) > 1e-10:
            raise ValidationError(f"sum rule p0 + 2*sum(pk) = {total:.15g} != 1")
        return self

    def as_probabilities(self) -> np.ndarray:
        """Full eigenvalue list with the +-k doubling made explicit."""
        return np.concatenate(([self.p0], np.repeat(self.pk, 2)))


def _entropy_of_probabilities(p: np.ndarray) -> float:
    p = p[p > ENTROPY_FLOOR]
    return float(-np.sum(p * np.log(p)) + 0.0)  # + 0.0 normalizes -0.0


def von_neumann_entropy(rho: DensityMatrix, validate: bool = True) -> float:
    """S = -tr(rho ln rho) in nats; eigenvalues below the floor contribute 0."""
    if validate:
        rho.validate()
    return _entropy_of_probabilities(eigvalsh(rho.mat))


def spectrum_entropy(spec: ReducedSpectrum) -> float:
    """Entropy of an explicit reduced spectrum: -p0 ln p0 - 2 sum pk ln pk."""
    spec.validate()
    return _entropy_of_probabilities(spec.as_probabilities())


def purity(rho: DensityMatrix, validate: bool = True) -> float:
    """tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state."""
    if validate:
        rho.validate()
    return float(np.real(np.vdot(rho.mat, rho.mat)))


def partial_trace_bath(rho_full: np.ndarray, dims: tuple[int, int]) -> np.ndarray:
    """Trace out the bath factor of a product-basis matrix.

    The product basis is row-major in (m_S, m_B): index = i_S * dim_B + i_B.
    """
    d_s, d_b = dims
    rho_full = np.asarray(rho_full)
    if rho_full.shape != (d_s * d_b, d_s * d_b):
        raise ShapeError(
            f"expected shape {(d_s * d_b, d_s * d_b)}, got {rho_full.shape}"
        )
    return np.einsum("ibjb->ij", rho_full.reshape(d_s, d_b, d_s, d_b))


def partial_trace_system(rho_full: np.ndarray, dims: tuple[int, int]) -> np.ndarray:
    """Trace out the system factor (same indexing as partial_trace_bath)."""
    d_s, d_b = dims
    rho_full = np.asarray(rho_full)
    if rho_full.shape != (d_s * d_b, d_s * d_b):
        raise ShapeError(
            f"expected shape {(d_s * d_b, d_s * d_b)}, got {rho_full.shape}"
        )
    return np.einsum("aiaj->ij", rho_full.reshape(d_s, d_b, d_s, d_b))


def trace_distance(a: np.ndarray, b: np.ndarray) -> float:
    """(1/2) ||a - b||_1 for Hermitian a, b."""
    diff = np.asarray(a) - np.asarray(b)
    return float(0.5 * np.abs(eigvalsh(diff)).sum())
