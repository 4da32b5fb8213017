"""Experiment configuration: one flat, JSON-friendly namespace.

Resolution order for parameter values: per-experiment defaults, then the
config file, then ``--param key=value`` overrides. Everything is validated
against the owning module's preconditions before an experiment is dispatched,
and the fully resolved parameters are echoed into the CSV metadata line.
All experiments are deterministic (no RNG anywhere).
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

import numpy as np

from .kraus import bessel_weights, default_shift_cutoff
from .lindblad import BOUNDARIES
from .mathieu import Q_CONVENTIONS

EXPERIMENTS = (
    "entropy-sweep",
    "kicked-map",
    "lindblad-kicked",
    "lindblad-continuous",
    "exact-two-rotor",
    "bath-corr",
    "mathieu",
)


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    # physical parameters
    g: float = 0.1414
    tau: float = 1.0
    m_s: float | None = None  # None -> chosen so that N = 2M+1 (kicked-map)
    m_b: float = 1000.0
    M: int = 32
    M_S: int = 8
    M_B: int = 20
    N0: int = 100
    n_kicks: int = 200
    t_final: float = 2000.0
    dt: float = 0.05
    g_grid: tuple[float, ...] | None = None
    order: int = 0
    q: float = 1.0
    n_max: int = 4
    bath: str = "eigenstate"  # exact-two-rotor: eigenstate (nu=0) or flat (N0)
    # numeric parameters
    K: int | None = None
    n_cut: int | None = None
    N_theta: int | None = None
    convention: str = "paper-numbers"
    boundary: str = "periodic"
    record_every: int = 1
    delta_max: float = 3.0
    n_delta: int = 61
    # output
    output: str = "out.csv"

    def resolved(self) -> dict:
        """Flat dict of all parameters, for the CSV metadata line."""
        d = dataclasses.asdict(self)
        if self.g_grid is not None:
            d["g_grid"] = list(self.g_grid)
        return d


# Defaults that differ from the dataclass baseline, per experiment. These are
# the declared reproduction parameters (dimensions and kick counts the figures
# use); they are echoed into every CSV header.
EXPERIMENT_DEFAULTS: dict[str, dict] = {
    "entropy-sweep": {"g_grid": tuple(np.linspace(0.0, 5.0, 51)), "order": 0},
    "kicked-map": {"g": 0.1414, "M": 32, "n_kicks": 200, "tau": 1.0},
    "lindblad-kicked": {
        "g": 0.1414, "M": 16, "n_kicks": 20000, "tau": 1.0, "m_s": 1.0,
        "boundary": "periodic", "record_every": 20,
    },
    "lindblad-continuous": {
        "g": 0.1414, "M": 8, "t_final": 3500.0, "dt": 0.05, "m_s": 1.0,
        "boundary": "periodic", "record_every": 200,
    },
    "exact-two-rotor": {
        "g": 0.2, "tau": 1.0, "m_s": 1.0, "m_b": 1000.0,
        "M_S": 8, "M_B": 20, "n_kicks": 5, "bath": "eigenstate", "N0": 0,
    },
    "bath-corr": {"N0": 100, "m_b": 1.0, "delta_max": 3.0, "n_delta": 61},
    "mathieu": {"q": 1.0, "n_max": 4},
}

_FIELD_NAMES = {f.name for f in dataclasses.fields(ExperimentConfig)}


class ConfigError(ValueError):
    """Bad experiment name, unknown key, or unparsable value."""


def build_config(experiment: str, *sources: dict) -> ExperimentConfig:
    """Merge defaults and override dicts (later wins) into a config."""
    if experiment not in EXPERIMENTS:
        raise ConfigError(
            f"unknown experiment {experiment!r}; choose from {', '.join(EXPERIMENTS)}"
        )
    merged: dict = dict(EXPERIMENT_DEFAULTS.get(experiment, {}))
    for src in sources:
        for key, value in src.items():
            if key == "experiment":
                continue
            if key not in _FIELD_NAMES:
                raise ConfigError(f"unknown parameter {key!r}")
            merged[key] = value
    if "g_grid" in merged and merged["g_grid"] is not None:
        merged["g_grid"] = tuple(float(x) for x in merged["g_grid"])
    return ExperimentConfig(experiment=experiment, **merged)


def load_config_file(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a flat JSON object")
    return data


def validate(config: ExperimentConfig) -> list[str]:
    """All precondition violations, each naming parameter, value and constraint."""
    v: list[str] = []
    if config.experiment not in EXPERIMENTS:
        v.append(f"experiment={config.experiment!r}: must be one of {EXPERIMENTS}")
        return v
    if config.tau <= 0:
        v.append(f"tau={config.tau}: requires tau > 0")
    if config.m_s is not None and config.m_s <= 0:
        v.append(f"m_s={config.m_s}: requires m_s > 0")
    if config.m_b <= 0:
        v.append(f"m_b={config.m_b}: requires m_b > 0")
    for name in ("M", "M_S", "M_B"):
        if getattr(config, name) < 1:
            v.append(f"{name}={getattr(config, name)}: requires >= 1")
    if config.n_kicks < 0:
        v.append(f"n_kicks={config.n_kicks}: requires >= 0")
    if config.record_every < 1:
        v.append(f"record_every={config.record_every}: requires >= 1")
    if config.convention not in Q_CONVENTIONS:
        v.append(f"convention={config.convention!r}: must be one of {Q_CONVENTIONS}")
    if config.boundary not in BOUNDARIES:
        v.append(f"boundary={config.boundary!r}: must be one of {BOUNDARIES}")
    if config.order < 0 or config.order % 2 != 0:
        v.append(f"order={config.order}: only even non-negative orders are modeled")
    if config.experiment == "entropy-sweep":
        grid = config.g_grid or ()
        if any(g < 0 for g in grid):
            v.append("g_grid: couplings must be >= 0")
        if not grid:
            v.append("g_grid: must be non-empty")
    if config.experiment in ("kicked-map", "lindblad-kicked", "exact-two-rotor"):
        if config.g < 0:
            v.append(f"g={config.g}: requires >= 0")
        n_cut = config.n_cut
        if n_cut is not None:
            deficit = abs(float(np.sum(bessel_weights(config.g, n_cut) ** 2)) - 1.0)
            if deficit > 1e-12:
                v.append(
                    f"n_cut={n_cut}: completeness deficit {deficit:.3e} at g={config.g} "
                    f"(need n_cut >= {default_shift_cutoff(config.g)})"
                )
    if config.experiment == "lindblad-continuous":
        gamma = config.g**2 / 2.0
        if config.dt <= 0:
            v.append(f"dt={config.dt}: requires > 0")
        elif gamma > 0 and config.dt > 0.1 / gamma:
            v.append(f"dt={config.dt}: requires dt <= 0.1/gamma = {0.1 / gamma:.6g}")
        if config.t_final <= 0:
            v.append(f"t_final={config.t_final}: requires > 0")
    if config.experiment == "bath-corr":
        if config.N0 < 1:
            v.append(f"N0={config.N0}: requires >= 1")
        if config.n_delta < 2:
            v.append(f"n_delta={config.n_delta}: requires >= 2")
    if config.experiment == "exact-two-rotor":
        if config.bath not in ("eigenstate", "flat"):
            v.append(f"bath={config.bath!r}: must be 'eigenstate' or 'flat'")
        if config.bath == "flat" and config.N0 > config.M_B:
            v.append(f"N0={config.N0}: must be <= M_B={config.M_B}")
    if config.experiment == "mathieu":
        if config.n_max < 0:
            v.append(f"n_max={config.n_max}: requires >= 0")
        if config.K is not None and config.K < config.n_max + 8:
            v.append(f"K={config.K}: requires K >= n_max + 8 = {config.n_max + 8}")
    return v
