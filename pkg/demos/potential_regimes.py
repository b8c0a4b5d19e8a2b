"""Walk through the three shapes the deformed well can take.

The deformation parameter q controls the short-range behaviour: q >= 1
puts an impenetrable wall at r0 = ln(q)/(2 alpha), 0 < q < 1 leaves a
finite well on the whole half-line, and q = 0 collapses the potential to
a radial Morse curve.  Running this script prints a small table and drops
a plot-ready CSV next to it.
"""

import csv
import os

import numpy as np

from qdeform import PotentialParams, potential_value, singularity_radius

CASES = [
    ("singular, q = 4", PotentialParams(25.0, 10.0, 1.0, 4.0)),
    ("boundary, q = 1", PotentialParams(25.0, 10.0, 1.0, 1.0)),
    ("regular, q = 0.3", PotentialParams(25.0, 10.0, 1.0, 0.3)),
    ("Morse, q = 0", PotentialParams(25.0, 10.0, 1.0, 0.0)),
]


def main():
    print(f"{'regime':<18} {'r0':>8} {'V(r0 + 0.3)':>14} {'min V':>10}")
    r = np.linspace(1e-3, 10.0, 2000)
    columns = {}
    for name, p in CASES:
        r0 = singularity_radius(p) or 0.0
        grid = r0 + r
        v = potential_value(grid, p)
        columns[name] = (grid, v)
        print(f"{name:<18} {r0:>8.4f} {potential_value(r0 + 0.3, p):>14.4f} "
              f"{v.min():>10.4f}")

    out = os.path.join(os.path.dirname(__file__), "potential_regimes.csv")
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow([f"{key}:{axis}" for key in columns for axis in ("r", "V")])
        for i in range(len(r)):
            row = []
            for grid, v in columns.values():
                row += [f"{grid[i]:.6g}", f"{v[i]:.6g}"]
            w.writerow(row)
    print(f"\nwrote {out}")


if __name__ == "__main__":
    main()
