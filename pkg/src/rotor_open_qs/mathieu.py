"""Even pi-periodic Mathieu cosine modes: characteristic values and coefficients.

The modes solve y'' + (a - 2q cos 2x) y = 0 and expand as
ce_{2n}(x) = sum_k A_{2k} cos(2kx). The Fourier coefficients satisfy the
three-term recurrence

    a A_0 - q A_2 = 0
    (a - 4) A_2 - q (2 A_0 + A_4) = 0
    (a - 4k^2) A_{2k} - q (A_{2k-2} + A_{2k+2}) = 0   (k >= 2)

which, after scaling the A_0 component by sqrt(2), is a symmetric tridiagonal
eigenproblem. Unit eigenvectors then give exactly the normalization
2 A_0^2 + sum_{k>=1} A_{2k}^2 = 1.

Two conventions map a pendulum coupling g to the Mathieu parameter q:

* ``paper-numbers`` (default): q = g. This is the convention that reproduces
  the two-rotor anchor values E2 = 0.545 and S = 0.38 at g = 1.
* ``textbook``: q = g / 2, the direct reduction of the pendulum equation
  y'' + (E2 - g + g cos 2x) y = 0 to the standard form above (even orders are
  insensitive to the sign of q).

The two differ by a factor of two in q; both are exposed on purpose and the
choice is always explicit in outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import SectorError, TruncationError, ValidationError

Q_CONVENTIONS = ("paper-numbers", "textbook")

TAIL_TOL = 1e-12
RESIDUAL_TOL = 1e-8


def default_truncation(q: float) -> int:
    """Coefficient count K; tails decay factorially beyond k ~ sqrt(q)."""
    return max(25, math.ceil(abs(q)) + 25)


def coupling_to_q(g: float, convention: str = "paper-numbers") -> float:
    if convention not in Q_CONVENTIONS:
        raise ValueError(f"unknown q convention {convention!r}; use one of {Q_CONVENTIONS}")
    return g if convention == "paper-numbers" else g / 2.0


@dataclass(frozen=True)
class MathieuMode:
    """One even pi-periodic cosine mode: order 2n, parameter q, value a, coefficients A_{2k}."""

    order: int
    q: float
    a: float
    coeffs: np.ndarray  # A_0, A_2, ..., A_{2(K-1)}

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs, dtype=float))
        if self.order < 0 or self.order % 2 != 0:
            raise SectorError(
                f"order {self.order}: only even pi-periodic cosine modes are modeled"
            )

    @property
    def truncation(self) -> int:
        return self.coeffs.size

    def normalization_defect(self) -> float:
        c = self.coeffs
        return abs(2.0 * c[0] ** 2 + np.sum(c[1:] ** 2) - 1.0)

    def recurrence_residuals(self) -> np.ndarray:
        a, q, c = self.a, self.q, self.coeffs
        k = np.arange(2, c.size - 1)
        res = np.empty(c.size - 1)
        res[0] = a * c[0] - q * c[1]
        res[1] = (a - 4.0) * c[1] - q * (2.0 * c[0] + c[2])
        res[2:] = (a - 4.0 * k**2) * c[k] - q * (c[k - 1] + c[k + 1])
        return res

    def validate(self) -> "MathieuMode":
        defect = self.normalization_defect()
        if defect > 1e-10:
            raise ValidationError(f"normalization 2A0^2 + sum A^2 off by {defect:.3e}")
        res = np.abs(self.recurrence_residuals()).max()
        if res > RESIDUAL_TOL:
            raise ValidationError(f"recurrence residual {res:.3e} above {RESIDUAL_TOL}")
        tail = abs(self.coeffs[-1])
        if tail > TAIL_TOL:
            raise TruncationError(
                f"tail coefficient |A_{2 * (self.truncation - 1)}| = {tail:.3e}; increase K"
            )
        return self


@dataclass(frozen=True)
class CenterOfMassMode:
    """Free center-of-mass mode: integer m, energy m^2.

    Only even m combine with the pi-periodic relative sector modeled here.
    """

    m: int

    @property
    def E1(self) -> float:
        return float(self.m**2)


def _solve(q: float, n_max: int, K: int | None):
    if K is None:
        K = default_truncation(q)
    if K < n_max + 8:
        raise TruncationError(f"K = {K} too small for order {2 * n_max}; need K >= {n_max + 8}")
    diag = (2.0 * np.arange(K)) ** 2
    off = np.full(K - 1, q)
    off[0] = math.sqrt(2.0) * q
    vals, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, n_max))
    tail = np.abs(vecs[-1, :]).max()
    if tail > TAIL_TOL:
        raise TruncationError(
            f"tail coefficient {tail:.3e} above {TAIL_TOL} at K = {K}; increase K"
        )
    return vals, vecs


def characteristic_values(q: float, n_max: int, K: int | None = None) -> np.ndarray:
    """Characteristic values a_{2n}(q) for n = 0..n_max, ascending."""
    vals, _ = _solve(q, n_max, K)
    return vals


def even_coefficients(q: float, order: int, K: int | None = None) -> MathieuMode:
    """Fourier coefficients A_{2k} of the even cosine mode of the given order.

    Sign fixed by A_0 > 0 for order 0 and by a positive leading coefficient
    (the one dominant in the q -> 0 limit) for higher orders.
    """
    if order < 0 or order % 2 != 0:
        raise SectorError(f"order {order}: only even pi-periodic cosine modes are modeled")
    n = order // 2
    vals, vecs = _solve(q, n, K)
    vec = vecs[:, n].copy()
    coeffs = vec
    coeffs[0] /= math.sqrt(2.0)  # undo the symmetrizing scale
    lead = coeffs[n]
    anchor = lead if abs(lead) > 1e-12 else coeffs[np.argmax(np.abs(coeffs))]
    if anchor < 0:
        coeffs = -coeffs
    return MathieuMode(order=order, q=q, a=float(vals[n]), coeffs=coeffs).validate()


def evaluate_ce(mode: MathieuMode, theta) -> np.ndarray | float:
    """Evaluate sum_k A_{2k} cos(2k theta); even and pi-periodic by construction."""
    theta = np.asarray(theta, dtype=float)
    k = np.arange(mode.truncation)
    out = np.cos(2.0 * np.outer(theta, k)) @ mode.coeffs
    return out if out.size > 1 else float(out[0])


def ode_residual(mode: MathieuMode, theta: np.ndarray) -> np.ndarray:
    """Residual of y'' + (a - 2q cos 2x) y = 0 at the given angles."""
    theta = np.asarray(theta, dtype=float)
    k = np.arange(mode.truncation)
    basis = np.cos(2.0 * np.outer(theta, k))
    y = basis @ mode.coeffs
    ypp = basis @ (-(2.0 * k) ** 2 * mode.coeffs)
    return ypp + (mode.a - 2.0 * mode.q * np.cos(2.0 * theta)) * y


def pendulum_energy(
    g: float, n: int, convention: str = "paper-numbers", K: int | None = None
) -> float:
    """Relative-motion pendulum energy E2^n = a_{2n}(q(g)) + g."""
    if n < 0:
        raise ValueError("n must be >= 0")
    q = coupling_to_q(g, convention)
    return float(characteristic_values(q, n, K)[n] + g)
