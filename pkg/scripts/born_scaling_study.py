#!/usr/bin/env python3
"""Born-approximation scaling: one-kick bath perturbation vs kick strength.

The bath (flat cutoff) is displaced from its initial state by O(g^2) per
kick; prints the perturbation per g and the fitted log-log slope.
"""

import numpy as np

from rotor_open_qs.floquet import BathSpec, KickedSystemParams, bath_perturbation

GS = (0.4, 0.2, 0.1, 0.05)


def main() -> None:
    dists = []
    print(f"{'g':>8s} {'perturbation':>14s} {'g^2':>10s}")
    for g in GS:
        params = KickedSystemParams(g=g, tau=1.0, m_s=1.0, m_b=1000.0, M_S=8, M_B=20)
        d = bath_perturbation(params, BathSpec.flat(8))
        dists.append(d)
        print(f"{g:8.3f} {d:14.4e} {g**2:10.4e}")
    slope = np.polyfit(np.log(GS), np.log(dists), 1)[0]
    print(f"log-log slope: {slope:.4f} (Born approximation predicts 2)")


if __name__ == "__main__":
    main()
