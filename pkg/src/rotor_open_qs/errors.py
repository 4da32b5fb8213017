"""Exception types shared across the package.

ToleranceError and its subclasses signal that a computation could not meet a
numeric tolerance (truncation too small, quadrature under-resolved, ...); the
CLI maps them to exit code 3. Plain ValueError subclasses signal bad inputs
and map to exit code 2.
"""


class ValidationError(ValueError):
    """An input violates a structural invariant (names the invariant)."""


class ShapeError(ValueError):
    """Dimension mismatch between operands."""


class SectorError(ValueError):
    """Request for a symmetry sector the package does not model."""


class ToleranceError(RuntimeError):
    """A numeric tolerance could not be met with the given parameters."""


class TruncationError(ToleranceError):
    """Series/basis truncation too small; enlarge K."""


class CompletenessError(ToleranceError):
    """Kraus completeness deficit above tolerance; enlarge n_cut."""


class LeakageError(ToleranceError):
    """Momentum-cutoff leakage above tolerance; enlarge M."""


class QuadratureError(ToleranceError):
    """Quadrature under-resolved (disagrees with the analytic path)."""
