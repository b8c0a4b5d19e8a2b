"""Export normalized eigenfunctions and certify them against the equation.

Each closed-form eigenfunction is sampled, normalized, and pushed back
through the radial equation as a second-difference residual; node counts
label the levels.  Output goes to eigenfunctions.csv for plotting.
"""

import csv
import os

import numpy as np
from scipy.integrate import simpson

from qdeform import (
    DiracConstants,
    PotentialParams,
    make_wavefunction,
    ode_residual,
    spectrum,
)

DC = DiracConstants(m=1.0, c_spin=0.0)
P = PotentialParams(25.0, 18.0, 0.5, 1.0)


def main():
    levels = spectrum(DC, P)
    print(f"q = {P.q}: {len(levels)} bound levels")
    print(f"{'n_r':>3} {'E':>16} {'ode residual':>14} {'norm':>18}")
    grids = []
    for lv in levels[:4]:
        wf = make_wavefunction(DC, P, lv, n_points=40001)
        res = ode_residual(wf.radii, wf.f_values, lv.energy, DC, P)
        norm = simpson(wf.f_values**2 + wf.g_values**2, x=wf.radii)
        grids.append((lv.n_r, wf))
        print(f"{lv.n_r:>3} {lv.energy:>16.10f} {res:>14.2e} {norm:>18.12f}")

    out = os.path.join(os.path.dirname(__file__), "eigenfunctions.csv")
    r = grids[0][1].radii
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["r"] + [f"F_{n}" for n, _ in grids])
        for i in range(0, len(r), 4):
            row = [f"{r[i]:.6g}"]
            for _, wf in grids:
                f = np.interp(r[i], wf.radii, wf.f_values)
                row.append(f"{f:.6g}")
            w.writerow(row)
    print(f"\nwrote {out}")


if __name__ == "__main__":
    main()
