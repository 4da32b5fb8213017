"""Experiment runner CLI.

    rotor-open-qs <experiment> --config <path> [--out <path>] [--param key=value ...]

Exit codes: 0 ok, 2 config error, 3 numeric-tolerance failure. Each run
writes one CSV whose '#' metadata line carries the fully resolved parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bathcorr, floquet, kraus, lindblad, mathieu, two_rotor
from .config import (
    ConfigError,
    EXPERIMENTS,
    ExperimentConfig,
    build_config,
    load_config_file,
    validate,
)
from .csvio import write_csv
from .errors import ToleranceError


def _channel_dimension(config: ExperimentConfig) -> float:
    """N = 2 pi m_S / tau; with m_s unset, pin N to the truncated dimension 2M+1."""
    if config.m_s is None:
        return float(2 * config.M + 1)
    return 2.0 * np.pi * config.m_s / config.tau


def _ground_state(M: int) -> np.ndarray:
    rho = np.zeros((2 * M + 1, 2 * M + 1), dtype=complex)
    rho[M, M] = 1.0
    return rho


def run_entropy_sweep(config: ExperimentConfig):
    results = two_rotor.entropy_vs_coupling(
        np.asarray(config.g_grid), config.order, config.convention, config.K
    )
    rows = [[r.g, r.E2, r.entropy] for r in results]
    return ["g", "E2", "S"], rows


def run_mathieu(config: ExperimentConfig):
    rows = []
    for order in range(0, 2 * config.n_max + 1, 2):
        mode = mathieu.even_coefficients(config.q, order, config.K)
        for k, a2k in enumerate(mode.coeffs):
            rows.append([order, config.q, mode.a, k, a2k])
    return ["order", "q", "a", "k", "A_2k"], rows


def run_kicked_map(config: ExperimentConfig):
    channel = kraus.build_channel(
        config.g, _channel_dimension(config), config.M, config.n_cut
    )
    records, _ = kraus.iterate(
        channel, _ground_state(config.M), config.n_kicks, record_every=config.record_every
    )
    rows = [
        [r.kick, r.kick * config.tau, r.entropy, abs(r.trace - 1.0), r.purity]
        for r in records
    ]
    return ["kick", "time", "S", "trace_dev", "purity"], rows


def run_lindblad_kicked(config: ExperimentConfig):
    gen = lindblad.make_generator(
        config.M, gamma=config.g**2 / 2.0, m_s=config.m_s or 1.0, boundary=config.boundary
    )
    records, _ = lindblad.kicked_trajectory(
        gen, config.tau, _ground_state(config.M), config.n_kicks, config.record_every
    )
    rows = [[r.step_or_t, r.entropy, r.trace_dev, r.edge_occupation] for r in records]
    return ["step_or_t", "S", "trace_dev", "edge_occupation"], rows


def run_lindblad_continuous(config: ExperimentConfig):
    gen = lindblad.make_generator(
        config.M, gamma=config.g**2 / 2.0, m_s=config.m_s or 1.0, boundary=config.boundary
    )
    records, _ = lindblad.continuous_evolve(
        gen, _ground_state(config.M), config.t_final, config.dt, config.record_every
    )
    rows = [[r.step_or_t, r.entropy, r.trace_dev, r.edge_occupation] for r in records]
    return ["step_or_t", "S", "trace_dev", "edge_occupation"], rows


def run_exact_two_rotor(config: ExperimentConfig):
    params = floquet.KickedSystemParams(
        g=config.g, tau=config.tau, m_s=config.m_s or 1.0, m_b=config.m_b,
        M_S=config.M_S, M_B=config.M_B,
    )
    bath = (
        floquet.BathSpec.eigenstate(0)
        if config.bath == "eigenstate"
        else floquet.BathSpec.flat(config.N0)
    )
    reduced, bath_dist = floquet.reduced_system_trajectory(
        params, _ground_state(config.M_S), bath, config.n_kicks
    )
    rows = []
    for kick, (rho_s, dist) in enumerate(zip(reduced, bath_dist)):
        lam = np.linalg.eigvalsh(rho_s)
        lam = lam[lam > 1e-14]
        rows.append([kick, float(-np.sum(lam * np.log(lam)) + 0.0), dist])
    return ["kick", "S_system", "bath_dist"], rows


def run_bath_corr(config: ExperimentConfig):
    grid = np.linspace(0.0, config.delta_max, config.n_delta)
    rows = [
        [r["N0"], r["Delta"], r["re"], r["im"], r["abs"], r["bound"]]
        for r in bathcorr.delta_limit_report([config.N0], grid, config.m_b)
    ]
    return ["N0", "Delta", "re", "im", "abs", "bound"], rows


RUNNERS = {
    "entropy-sweep": run_entropy_sweep,
    "kicked-map": run_kicked_map,
    "lindblad-kicked": run_lindblad_kicked,
    "lindblad-continuous": run_lindblad_continuous,
    "exact-two-rotor": run_exact_two_rotor,
    "bath-corr": run_bath_corr,
    "mathieu": run_mathieu,
}


def run(config: ExperimentConfig) -> str:
    """Run one experiment and write its CSV; returns the output path."""
    header, rows = RUNNERS[config.experiment](config)
    write_csv(config.output, header, rows, config.resolved())
    return config.output


def _parse_param(text: str):
    if "=" not in text:
        raise ConfigError(f"--param expects key=value, got {text!r}")
    key, raw = text.split("=", 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="rotor-open-qs",
        description="Two coupled rotors as an open quantum system: experiment runner.",
    )
    parser.add_argument("experiment", choices=EXPERIMENTS)
    parser.add_argument("--config", help="JSON file with a flat key namespace")
    parser.add_argument("--out", help="output CSV path (overrides config)")
    parser.add_argument(
        "--param", action="append", default=[], metavar="KEY=VALUE",
        help="override one parameter (JSON-parsed value); repeatable",
    )
    args = parser.parse_args(argv)

    try:
        file_values = load_config_file(args.config) if args.config else {}
        overrides = dict(_parse_param(p) for p in args.param)
        if args.out:
            overrides["output"] = args.out
        config = build_config(args.experiment, file_values, overrides)
    except (ConfigError, OSError, json.JSONDecodeError, TypeError, ValueError) as exc:
        print(f"rotor-open-qs: config error: {exc}", file=sys.stderr)
        return 2

    violations = validate(config)
    if violations:
        for item in violations:
            print(f"rotor-open-qs: invalid parameter: {item}", file=sys.stderr)
        return 2

    try:
        path = run(config)
    except ToleranceError as exc:
        print(f"rotor-open-qs: [{config.experiment}] tolerance failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"rotor-open-qs: cannot write output: {exc}", file=sys.stderr)
        return 2
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
