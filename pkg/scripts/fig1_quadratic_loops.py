"""Eigenvalue loops of the two-level even family at zeta = 1/2.

Panel a circles lam = 1/10 (two real levels) at growing radii; panel b circles
the EP at lam = 1.  Writes one (phi, k, re, im) CSV per loop and prints the
permutation after one turn.
"""
import argparse

from common import trace_rows, write_csv
from e2spec.model import Quantization
from e2spec.monodromy import cut_crossings, enclosed_branch_points, format_cycles, permutation_cycles, trace_loop

PANELS = {
    "a": [(0.1, 0.2), (0.1, 3.05), (0.1, 4.0)],
    "b": [(1.0, 0.5)],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--panel", choices=sorted(PANELS), nargs="*", default=sorted(PANELS))
    ap.add_argument("--steps", type=int, default=1024)
    ap.add_argument("--turns", type=int, default=2)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    q, zeta = Quantization(2), 0.5
    for panel in args.panel:
        for center, rho in PANELS[panel]:
            tr = trace_loop(q, zeta, center, rho, steps=args.steps, turns=args.turns)
            path = write_csv(f"{args.outdir}/fig1{panel}_rho{rho:g}.csv", ["phi", "k", "re", "im"], trace_rows(tr))
            enc = len(enclosed_branch_points(q, zeta, center, rho))
            print(f"fig1{panel} center={center:g} rho={rho:g}: cycles {format_cycles(permutation_cycles(tr))}, "
                  f"branch points inside {enc}, cut crossings {cut_crossings(zeta, center, rho)} -> {path}")


if __name__ == "__main__":
    main()
