"""Cross-check the closed-form spectra against the shooting integrator.

The bound energies come out of two unrelated computations: quantization
conditions on hypergeometric functions, and a Numerov sweep that knows
nothing about them.  Their agreement to ~1e-9 is the whole point of the
package.
"""

from qdeform import DiracConstants, PotentialParams, shoot_eigenvalues, spectrum

DC = DiracConstants(m=1.0, c_spin=0.0)
WELLS = [
    PotentialParams(25.0, 10.0, 0.35, 2.0),
    PotentialParams(25.0, 18.0, 0.5, 1.0),
    PotentialParams(25.0, 18.0, 0.5, 0.3),
    PotentialParams(25.0, 18.0, 0.5, 0.0),
]


def main():
    for p in WELLS:
        analytic = spectrum(DC, p)
        oracle = {lv.n_r: lv.energy for lv in shoot_eigenvalues(DC, p)}
        print(f"\nq = {p.q}, alpha = {p.alpha}: {len(analytic)} levels "
              f"({analytic[0].method})")
        print(f"  {'n_r':>3} {'E (analytic)':>18} {'E (oracle)':>18} {'|diff|':>10}")
        for lv in analytic:
            diff = abs(lv.energy - oracle[lv.n_r])
            print(f"  {lv.n_r:>3} {lv.energy:>18.12f} "
                  f"{oracle[lv.n_r]:>18.12f} {diff:>10.2e}")


if __name__ == "__main__":
    main()
