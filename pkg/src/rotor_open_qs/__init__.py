"""Two coupled quantum rotors as an open system.

Subpackages cover the static Mathieu-based entanglement pipeline
(`mathieu`, `two_rotor`), the exact kicked two-rotor simulator (`floquet`),
the stationary-bath one-kick CPTP map (`kraus`), the GKSL sector
(`lindblad`), the bath correlation kernel (`bathcorr`), and the experiment
runner (`cli`, `config`). Shared density-matrix utilities live in `densmat`.
"""

from . import bathcorr, densmat, floquet, kraus, lindblad, mathieu, two_rotor  # noqa: F401

__version__ = "0.1.0"
