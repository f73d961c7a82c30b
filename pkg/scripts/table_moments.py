"""Moments mu_n of the one- and two-level measures, exact and by two methods.

Compares the recurrence values against reference closed forms at a few
rational points; the reference forms with known misprints are flagged.
"""
import argparse
from fractions import Fraction

from e2spec.model import ModelParams, Quantization
from e2spec.orthopoly import moments


def reference_P(z, l, literal=True):
    t = (z * (1 + l)) ** 2
    mu4 = l ** 4 * z ** 8 - 24 * l ** 2 * z ** 4 * t - 64 * t
    mu4 += 16 * (z ** 2 - 1) ** 2 * z ** 4 if literal else 16 * (l ** 2 - 1) ** 2 * z ** 4
    return [1, l * z ** 2, l ** 2 * z ** 4 - 4 * t, l ** 3 * z ** 6 - 12 * l * z ** 2 * t - 16 * t, mu4]


def reference_Q(z, l, literal=True):
    t = (z * (1 + l)) ** 2
    mu2 = 16 - 4 * t + l ** 2 * z ** 4 + (0 if literal else 8 * l * z ** 2)
    return [1, 4 + l * z ** 2, mu2,
            l ** 3 * z ** 6 - 12 * (l ** 3 + l ** 2 + l) * z ** 4 - 48 * (2 * l ** 2 + 3 * l + 2) * z ** 2 + 64]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", nargs="*", default=["1/2,1/3", "3/7,-2/5", "2,5/3"])
    ap.add_argument("--max-order", type=int, default=8)
    args = ap.parse_args()
    for pt in args.points:
        z, l = (Fraction(s) for s in pt.split(","))
        print(f"zeta={z}, lambda={l}")
        for parity, N, ref in (("even", 2 + l, reference_P), ("odd", 3 + 2 * l, reference_Q)):
            rec = moments(ModelParams(N, z, l), parity, args.max_order).values
            wts = moments(Quantization(2, parity) if parity == "even" else Quantization(3, parity),
                          max_order=args.max_order, method="weights", zeta=float(z), lam=float(l)).values
            lit, fixed = ref(z, l, True), ref(z, l, False)
            for n, v in enumerate(rec):
                tag = ""
                if n < len(lit):
                    tag = "matches reference" if v == lit[n] else (
                        "reference misprint (corrected form matches)" if v == fixed[n] else "MISMATCH")
                rel = abs(complex(v) - wts[n]) / max(1, abs(complex(v)))
                print(f"  {parity:4s} mu{n} = {str(v):>28s}  weights rel diff {rel:.1e}  {tag}")


if __name__ == "__main__":
    main()
