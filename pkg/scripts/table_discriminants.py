"""Reduced discriminants in zhat, their constant factors and real EPs."""
import argparse

from e2spec.exceptional import discriminant_in_zhat
from e2spec.model import Quantization

CASES = [(2, "even"), (3, "odd"), (3, "even"), (4, "odd"), (4, "even"), (5, "odd")]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--extra", type=int, default=0, help="also show n_tilde up to 5 + extra")
    args = ap.parse_args()
    cases = CASES + [(n, p) for n in range(6, 6 + args.extra) for p in ("odd", "even")]
    for nt, parity in cases:
        rep = discriminant_in_zhat(Quantization(nt, parity))
        eps = ", ".join(f"{ep.zhat:.6f}" for ep in rep.eps) or "none"
        print(f"{parity:4s} n={nt}: kappa={rep.kappa}  {rep.reduced_in_zhat()}")
        print(f"          real EPs zhat: {eps}")


if __name__ == "__main__":
    main()
