"""Four-level even family along real lam at zeta = 1/2, with the real branch points."""
import argparse

import numpy as np

from common import write_csv
from e2spec.exceptional import ep_lambdas
from e2spec.model import Quantization
from e2spec.monodromy import energies_at
from e2spec.spectrum import canonical_order


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=601)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    q, zeta = Quantization(4), 0.5
    rows = []
    for lam in np.linspace(-12, 10, args.points):
        if abs(lam + 1) < 1e-12:
            continue
        for k, e in enumerate(canonical_order(energies_at(q, zeta, float(lam)))):
            rows.append([float(lam), k, e.real, e.imag])
    path = write_csv(f"{args.outdir}/fig4_levels.csv", ["lambda", "k", "re", "im"], rows)
    real = sorted(b.real for b in ep_lambdas(q, zeta) if abs(b.imag) < 1e-9)
    print(f"levels -> {path}")
    print("real branch points:", ", ".join(f"{b:.9g}" for b in real))


if __name__ == "__main__":
    main()
