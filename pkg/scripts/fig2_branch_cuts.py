"""Two-level energies along real lam at zeta = 1/2 and the located branch cuts."""
import argparse

import numpy as np

from common import write_csv
from e2spec.monodromy import branch_cut_check, e2_closed_form


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--zeta", type=float, default=0.5)
    ap.add_argument("--points", type=int, default=801)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    rows = []
    for lam in np.linspace(-8, 6, args.points):
        if lam == -1:
            continue
        em, ep = e2_closed_form(args.zeta, lam, -1), e2_closed_form(args.zeta, lam, 1)
        rows.append([float(lam), em.real, em.imag, ep.real, ep.imag])
    path = write_csv(f"{args.outdir}/fig2_levels.csv", ["lambda", "minus_re", "minus_im", "plus_re", "plus_im"], rows)
    rep = branch_cut_check(args.zeta)
    print(f"levels -> {path}")
    for (a, b), (c, d) in zip(rep.segments, rep.expected):
        print(f"cut ({a:.9g}, {b:.9g})   expected ({c:.9g}, {d:.9g})")
    print(f"largest jump off the real axis: {rep.max_offcut_jump:.2e}")


if __name__ == "__main__":
    main()
