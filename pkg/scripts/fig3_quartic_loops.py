"""Four-level even family at zeta = 1/2: levels at the loop centres and the loops.

Panel a: centre 9.5284, rho 4.0.  Panel b: centre 5.2562 + 9.9526i, rho 8.5.
The centres are 4-decimal roundings of branch points; the unrounded values
are reported alongside.
"""
import argparse

from common import trace_rows, write_csv
from e2spec.exceptional import ep_lambdas
from e2spec.model import Quantization
from e2spec.monodromy import format_cycles, permutation_cycles, trace_loop, turns_to_closure
from e2spec.spectrum import eigenvalues

PANELS = {"a": (9.5284, 4.0, 2), "b": (5.2562 + 9.9526j, 8.5, 3)}


def fmt(z):
    return f"{z.real:.4f}{z.imag:+.4f}i"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--panel", choices=sorted(PANELS), nargs="*", default=sorted(PANELS))
    ap.add_argument("--steps", type=int, default=512)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()
    q, zeta = Quantization(4), 0.5
    bps = ep_lambdas(q, zeta)
    for panel in args.panel:
        center, rho, turns = PANELS[panel]
        exact = min(bps, key=lambda b: abs(b - center))
        print(f"fig3{panel}: centre {center}, nearest branch point {exact:.9f}")
        print("  levels at centre:     ", ", ".join(fmt(e) for e in eigenvalues(q, zeta, center)))
        print("  levels at branch pt.: ", ", ".join(fmt(e) for e in eigenvalues(q, zeta, exact)))
        tr = trace_loop(q, zeta, center, rho, steps=args.steps, turns=turns)
        path = write_csv(f"{args.outdir}/fig3{panel}.csv", ["phi", "k", "re", "im"], trace_rows(tr))
        print(f"  cycles {format_cycles(permutation_cycles(tr))}, turns to closure {turns_to_closure(tr)} -> {path}")


if __name__ == "__main__":
    main()
