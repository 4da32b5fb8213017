#!/usr/bin/env python3
"""Stationary-bath convergence study.

With the bath in a momentum eigenstate the one-kick reduced dynamics equals
the Kraus channel identically; the heavy-bath limit first becomes non-trivial
at the second kick, where the distance to the shared-angle stationary map
shrinks as tau/m_B. Prints one row per bath mass.
"""

import numpy as np

from rotor_open_qs.densmat import trace_distance
from rotor_open_qs.floquet import BathSpec, KickedSystemParams, reduced_system_trajectory
from rotor_open_qs.kraus import (
    apply_bessel,
    apply_stationary_n,
    build_channel,
    default_shift_cutoff,
)

G, TAU, M_S, M_B = 0.2, 1.0, 8, 20


def main() -> None:
    rho_s = np.zeros((2 * M_S + 1, 2 * M_S + 1), dtype=complex)
    rho_s[M_S, M_S] = 1.0
    print(f"# g={G} tau={TAU} M_S={M_S} M_B={M_B} bath=|nu=0>")
    print(f"{'m_B/tau':>10s} {'one-kick dist':>14s} {'two-kick dist':>14s}")
    for m_b in (100.0, 200.0, 400.0, 800.0):
        params = KickedSystemParams(g=G, tau=TAU, m_s=1.0, m_b=m_b, M_S=M_S, M_B=M_B)
        reduced, _ = reduced_system_trajectory(params, rho_s, BathSpec.eigenstate(0), 2)
        channel = build_channel(G, params.N, M_S)
        d1 = trace_distance(reduced[1], apply_bessel(channel, rho_s))
        n_theta = 4 * (default_shift_cutoff(G) + M_S)
        d2 = trace_distance(reduced[2], apply_stationary_n(G, params.N, n_theta, rho_s, 2))
        print(f"{m_b / TAU:10.0f} {d1:14.3e} {d2:14.3e}")


if __name__ == "__main__":
    main()
