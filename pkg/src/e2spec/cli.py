"""Command-line entry point: ``python -m e2spec <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 numerical failure.
Floats are written with 9 significant digits so repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .exceptional import discriminant_in_zhat, ep_lambdas
from .mathieu import ep_sequence, mathieu_ep, optimal_lambda_study
from .model import ModelParams, Quantization
from .monodromy import (MonodromyError, cut_crossings, enclosed_branch_points, format_cycles,
                        permutation_cycles, trace_loop, turns_to_closure)
from .orthopoly import measure_weights, moments, norms_formula, norms_product
from .spectrum import eigenvalues, schroedinger_residual

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC = 0, 2, 3


class ValidationError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    parity: str = "even"
    ntilde: int = 2
    zeta: str | None = None
    lam: str | None = None
    fmt: str = "json"
    out: str | None = None

    def validate(self):
        if self.lam is not None and _parse_complex(self.lam) == -1:
            raise ValidationError("lambda = -1 is not allowed: 1 + lambda appears in denominators "
                                  "and the quantization N = n + (n-1) lambda degenerates")
        if self.ntilde < 1:
            raise ValidationError("--ntilde must be >= 1")


# -- formatting ----------------------------------------------------------------

def fnum(x: float) -> float:
    """Round to 9 significant digits; normalise -0.0."""
    v = float(f"{float(x):.9g}")
    return 0.0 if v == 0 else v


def cnum(z) -> dict:
    z = complex(z)
    return {"re": fnum(z.real), "im": fnum(z.imag)}


def exact_str(v) -> str | None:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    return None


def scalar_record(v) -> dict:
    rec = cnum(v)
    ex = exact_str(v)
    if ex is not None:
        rec["exact"] = ex
    return rec


def _parse_number(s: str):
    """Exact Fraction for real decimals/rationals, complex otherwise."""
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        return _parse_complex(s)


def _parse_complex(s: str) -> complex:
    try:
        return complex(Fraction(s))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(s.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ValidationError(f"cannot parse number {s!r}") from None


def _real(s: str, name: str) -> float:
    z = _parse_complex(s)
    if z.imag != 0:
        raise ValidationError(f"--{name} must be real here")
    return z.real


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _emit_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([f"{v:.9g}" if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


# -- subcommands ---------------------------------------------------------------

def _require(args, *names):
    for n in names:
        if getattr(args, n) is None:
            flag = "lambda" if n == "lam" else n.replace("_", "-")
            raise ValidationError(f"--{flag} is required for {args.command}")


def cmd_spectrum(args) -> str:
    _require(args, "zeta", "lam")
    q = Quantization(args.ntilde, args.parity)
    spec = eigenvalues(q, _real(args.zeta, "zeta"), _real(args.lam, "lambda"))
    if args.format == "csv":
        rows = [[k, fnum(e.real), fnum(e.imag), kind] for k, (e, kind) in enumerate(zip(spec.energies, spec.kinds))]
        return _emit_csv(["k", "re", "im", "kind"], rows)
    return _emit_json([cnum(e) for e in spec.energies])


def cmd_residual(args) -> str:
    _require(args, "zeta", "lam")
    q = Quantization(args.ntilde, args.parity)
    zeta, lam = _real(args.zeta, "zeta"), _real(args.lam, "lambda")
    spec = eigenvalues(q, zeta, lam)
    res = [schroedinger_residual(q, zeta, lam, e, args.grid) for e in spec.energies]
    if args.format == "csv":
        return _emit_csv(["k", "re", "im", "residual"],
                         [[k, fnum(e.real), fnum(e.imag), fnum(r)] for k, (e, r) in enumerate(zip(spec.energies, res))])
    return _emit_json([{**cnum(e), "residual": fnum(r)} for e, r in zip(spec.energies, res)])


def cmd_disc(args) -> str:
    q = Quantization(args.ntilde, args.parity)
    rep = discriminant_in_zhat(q)
    if args.format == "csv":
        rows = [[2 * k, str(c)] for k, c in enumerate(rep.integer_coefficients())]
        return _emit_csv(["zhat_power", "coefficient"], rows) + f"# kappa = {exact_str(rep.kappa)}\n"
    return _emit_json({
        "parity": q.parity,
        "ntilde": q.n_tilde,
        "reduced": rep.reduced_in_zhat(),
        "coefficients_in_t": [str(c) for c in rep.integer_coefficients()],
        "kappa": exact_str(rep.kappa),
        "real_eps_zhat": [fnum(ep.zhat) for ep in rep.eps],
    })


def cmd_eps(args) -> str:
    q = Quantization(args.ntilde, args.parity)
    rep = discriminant_in_zhat(q)
    zeta = None if args.zeta is None else _real(args.zeta, "zeta")
    rows = []
    for ep in rep.eps:
        row = {"zhat": fnum(ep.zhat), "t": fnum(ep.t), "x_degenerate": fnum(ep.x_degenerate),
               "residual": fnum(ep.residual)}
        if zeta:
            lam = ep.lam_for(zeta)
            row["lambda"] = fnum(lam)
            row["energy"] = fnum(ep.energy(zeta, lam).real)
        rows.append(row)
    out = {"parity": q.parity, "ntilde": q.n_tilde, "real": rows}
    if zeta:
        out["branch_points_lambda"] = [cnum(b) for b in ep_lambdas(q, zeta)]
    if args.format == "csv":
        keys = list(rows[0]) if rows else ["zhat", "t", "x_degenerate", "residual"]
        return _emit_csv(keys, [[r[k] for k in keys] for r in rows])
    return _emit_json(out)


def cmd_loop(args) -> str:
    _require(args, "zeta", "center", "radius")
    q = Quantization(args.ntilde, args.parity)
    zeta = _real(args.zeta, "zeta")
    center = _parse_complex(args.center)
    if center == -1:
        raise ValidationError("--center = -1 puts the loop on the excluded point lambda = -1")
    rho = _real(args.radius, "radius")
    tr = trace_loop(q, zeta, center, rho, steps=args.steps, turns=args.turns)
    cycles = permutation_cycles(tr)
    if args.trace:
        rows = [[fnum(phi), k, fnum(e.real), fnum(e.imag)]
                for phi, es in zip(tr.phis, tr.energies) for k, e in enumerate(es)]
        _write(_emit_csv(["phi", "k", "re", "im"], rows), args.trace)
    summary = {
        "cycles": format_cycles(cycles),
        "turns_to_closure": turns_to_closure(tr),
        "start": [cnum(e) for e in tr.start],
        "enclosed_branch_points": [cnum(b) for b in enclosed_branch_points(q, zeta, center, rho)],
        "closure_error": fnum(max(tr.closure_errors(), default=0.0)),
    }
    if q.parity == "even" and q.n_tilde == 2:
        summary["cut_crossings"] = cut_crossings(zeta, center, rho)
    if args.format == "json":
        return _emit_json(summary)
    return f"cycles: {summary['cycles']}\n"


def cmd_measure(args) -> str:
    _require(args, "zeta", "lam")
    q = Quantization(args.ntilde, args.parity)
    m = measure_weights(q, _parse_complex(args.zeta), _parse_complex(args.lam))
    if args.format == "csv":
        rows = [[k, fnum(e.real), fnum(e.imag), fnum(w.real), fnum(w.imag)]
                for k, (e, w) in enumerate(zip(m.nodes, m.weights))]
        return _emit_csv(["k", "node_re", "node_im", "weight_re", "weight_im"], rows)
    return _emit_json([{"node": cnum(e), "weight": cnum(w)} for e, w in zip(m.nodes, m.weights)])


def _params(args) -> ModelParams:
    _require(args, "zeta", "lam")
    zeta, lam = _parse_number(args.zeta), _parse_number(args.lam)
    if args.N is not None:
        N = _parse_number(args.N)
    else:
        N = Quantization(args.ntilde, args.parity).N(lam)
    if not all(isinstance(v, Fraction) for v in (N, zeta, lam)):
        N, zeta, lam = complex(N), complex(zeta), complex(lam)
    return ModelParams(N, zeta, lam)


def cmd_norms(args) -> str:
    params = _params(args)
    prod = norms_product(params, args.parity, args.n_max)
    form = norms_formula(params, args.parity, args.n_max)
    if args.format == "csv":
        rows = [[n, fnum(complex(a).real), fnum(complex(a).imag), exact_str(a) or "", fnum(complex(b).real),
                 fnum(complex(b).imag)] for n, (a, b) in enumerate(zip(prod, form))]
        return _emit_csv(["n", "product_re", "product_im", "product_exact", "formula_re", "formula_im"], rows)
    return _emit_json([{"n": n, "product": scalar_record(a), "formula": scalar_record(b)}
                       for n, (a, b) in enumerate(zip(prod, form))])


def cmd_moments(args) -> str:
    if args.method == "weights":
        _require(args, "zeta", "lam")
        q = Quantization(args.ntilde, args.parity)
        table = moments(q, max_order=args.max_order, method="weights",
                        zeta=_parse_complex(args.zeta), lam=_parse_complex(args.lam))
    else:
        table = moments(_params(args), args.parity, max_order=args.max_order)
    if args.format == "csv":
        rows = [[n, fnum(complex(v).real), fnum(complex(v).imag), exact_str(v) or ""] for n, v in enumerate(table.values)]
        return _emit_csv(["n", "re", "im", "exact"], rows)
    return _emit_json([{"n": n, **scalar_record(v)} for n, v in enumerate(table.values)])


def cmd_mathieu(args) -> str:
    lams = [_real(s, "lambda") for s in (args.lam or ["1"])]
    for lam in lams:
        if lam == -1:
            raise ValidationError("lambda = -1 is not allowed: 1 + lambda appears in denominators")
    ns = range(args.n_min, args.n_max + 1)
    zeta_m = mathieu_ep(args.levels, args.parity).value
    study = optimal_lambda_study(lams, ns, args.parity, zeta_m)
    rows = []
    for lam in lams:
        for r in ep_sequence(lam, ns, args.parity, zeta_m):
            rows.append([r.n, fnum(lam), fnum(r.N), fnum(r.zhat0), fnum(r.zeta0), fnum(r.g), fnum(r.delta),
                         int(study.best.get(r.n) == lam)])
    header = ["n", "lambda", "N", "zhat0", "zeta0", "g", "delta", "best"]
    if args.format == "csv":
        return _emit_csv(header, rows)
    return _emit_json({"zeta_M": fnum(zeta_m), "rows": [dict(zip(header, r)) for r in rows]})


def cmd_mathieu_limit(args) -> str:
    res = mathieu_ep(args.levels, args.parity)
    if args.format == "csv":
        return _emit_csv(["level", "g"], [[L, fnum(g)] for L, g in sorted(res.sequence.items())])
    return _emit_json({"parity": res.parity, "levels": res.levels, "zeta_M": fnum(res.value),
                       "sequence": [{"level": L, "g": fnum(g)} for L, g in sorted(res.sequence.items())]})


COMMANDS = {
    "spectrum": (cmd_spectrum, "quasi-exact eigenvalues"),
    "residual": (cmd_residual, "Schroedinger residual of each eigenpair"),
    "disc": (cmd_disc, "reduced discriminant in zhat"),
    "eps": (cmd_eps, "real exceptional points (and branch points in lambda with --zeta)"),
    "loop": (cmd_loop, "continue eigenvalues around a circle in complex lambda"),
    "measure": (cmd_measure, "discrete orthogonality measure"),
    "norms": (cmd_norms, "Favard norms by product and closed form"),
    "moments": (cmd_moments, "moment functionals mu_n"),
    "mathieu": (cmd_mathieu, "EP scaling sequence against the Mathieu EP"),
    "mathieu-limit": (cmd_mathieu_limit, "Mathieu EP from the limit recurrence"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e2spec", description="Quasi-exact spectra, EPs and monodromy of the E2 model.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--parity", choices=["even", "odd"], default="even")
        s.add_argument("--ntilde", type=int, default=2)
        s.add_argument("--zeta")
        s.add_argument("--lambda", dest="lam", action="append" if name == "mathieu" else "store")
        if name == "loop":
            s.add_argument("--format", choices=["text", "json"], default="text")
        else:
            s.add_argument("--format", choices=["json", "csv"], default="json")
        s.add_argument("--out", help="write the main output here instead of stdout")
        if name == "residual":
            s.add_argument("--grid", type=int, default=257)
        if name == "loop":
            s.add_argument("--center")
            s.add_argument("--radius")
            s.add_argument("--steps", type=int, default=512)
            s.add_argument("--turns", type=int, default=1)
            s.add_argument("--trace", help="CSV path for the (phi, k, re, im) trace")
        if name in ("norms", "moments"):
            s.add_argument("--N", help="generic N (default: quantized from --ntilde)")
        if name == "norms":
            s.add_argument("--n-max", type=int, default=8)
        if name == "moments":
            s.add_argument("--max-order", type=int, default=8)
            s.add_argument("--method", choices=["recurrence", "weights"], default="recurrence")
        if name == "mathieu":
            s.add_argument("--n-min", type=int, default=1)
            s.add_argument("--n-max", type=int, default=5)
        if name in ("mathieu", "mathieu-limit"):
            s.add_argument("--levels", type=int, default=12)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    lam = args.lam[0] if isinstance(args.lam, list) else args.lam
    cfg = RunConfig(args.command, args.parity, args.ntilde, args.zeta, lam, args.format, args.out)
    if args.command == "loop" and args.out and not args.trace:
        # the loop's main artefact is the trace; the summary still goes to stdout
        args.trace, cfg.out = args.out, None
    try:
        cfg.validate()
        text = COMMANDS[args.command][0](args)
        _write(text, cfg.out)
    except (ValidationError, ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: cannot write output: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (ArithmeticError, MonodromyError) as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
