"""Approach of the rescaled smallest EP to the Mathieu EP for several lam."""
import argparse

from common import write_csv
from e2spec.mathieu import ep_sequence, mathieu_ep, optimal_lambda_study


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lambdas", type=float, nargs="*", default=[0.0, 0.5, 1.0, 2.0])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--parity", choices=["even", "odd"], default="even")
    ap.add_argument("--levels", type=int, default=12)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    ref = mathieu_ep(args.levels, args.parity)
    print(f"Mathieu EP ({args.parity}, {args.levels} levels): {ref.value:.9f}")
    ns = range(1, args.n_max + 1)
    study = optimal_lambda_study(args.lambdas, ns, args.parity, ref.value)
    rows = []
    for lam in args.lambdas:
        for r in ep_sequence(lam, ns, args.parity, ref.value):
            rows.append([r.n, lam, r.N, r.zeta0, r.g, r.delta, int(study.best.get(r.n) == lam)])
    path = write_csv(f"{args.outdir}/fig5_{args.parity}.csv", ["n", "lambda", "N", "zeta0", "g", "delta", "best"], rows)
    print("n  " + "  ".join(f"lam={lam:<8g}" for lam in args.lambdas) + "  best")
    for n in ns:
        vals = "  ".join(f"{study.abs_delta[lam].get(n, float('nan')):<12.3e}" for lam in args.lambdas)
        print(f"{n:<2d} {vals}  {study.best.get(n)}")
    print(f"-> {path}")


if __name__ == "__main__":
    main()
