"""Weakly orthogonal polynomials: norms, discrete measure, functional, moments.

Phi_j denotes the degree-j member of a family: P_j (even) or Q_{j+1} (odd).
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .model import ModelParams, Quantization, family, recurrence_coefficient
from .polynomials import Poly, evaluate
from .spectrum import closed_form, eigenvalues


class SingularMeasureError(ArithmeticError):
    """The weight system is singular (degenerate nodes, i.e. an EP)."""


def _pochhammer(a, n: int):
    out = a * 0 + 1
    for k in range(n):
        out = out * (a + k)
    return out


def recurrence_b(params: ModelParams, parity: str, k: int):
    """b_k: minus the coefficient of Phi_{k-1} in the step producing Phi_{k+1}.

    Family index k (degree) maps to recurrence index k for P and k + 1 for Q.
    """
    n = k if parity == "even" else k + 1
    return -recurrence_coefficient(params, n, parity)


def norms_product(params: ModelParams, parity: str, n_max: int) -> list:
    """Favard norms N_0..N_{n_max} as running products of b_k.

    Index is the degree: element j is the norm of P_j (even) or Q_{j+1} (odd).
    """
    out = [params.scalar(1)]
    for k in range(1, n_max + 1):
        out.append(out[-1] * recurrence_b(params, parity, k))
    return out


def norms_formula(params: ModelParams, parity: str, n_max: int) -> list:
    """Closed Pochhammer form of the norms, same indexing as :func:`norms_product`.

    P: 2 zeta^(2n) (1+lam)^(2n) ((1-N)/(1+lam))_n ((lam+N)/(1+lam))_n.
    Q_n: the P norm of the same n divided by 2 zeta^2 (N+lam)(1-N).
    """
    N, z, lam = (params.scalar(v) for v in (params.N, params.zeta, params.lam))

    def p_norm(n):
        if n == 0:
            return params.scalar(1)
        a, b = (1 - N) / (1 + lam), (lam + N) / (1 + lam)
        return 2 * (z * (1 + lam)) ** (2 * n) * _pochhammer(a, n) * _pochhammer(b, n)

    if parity == "even":
        return [p_norm(n) for n in range(n_max + 1)]
    den = 2 * z * z * (N + lam) * (1 - N)
    if den == 0:
        raise ZeroDivisionError("Q-norm ratio has a pole (zeta = 0, N = 1 or N = -lam)")
    # Q_{j+1} has degree j
    return [params.scalar(1)] + [p_norm(j + 1) / den for j in range(1, n_max + 1)]


@dataclass
class Measure:
    nodes: list[complex]
    weights: list[complex]
    quantization: Quantization
    zeta: complex
    lam: complex

    @property
    def parity(self) -> str:
        return self.quantization.parity

    def basis(self, count: int | None = None) -> list[Poly]:
        params = self.quantization.params(complex(self.zeta), complex(self.lam))
        return family(params, self.parity, count or len(self.nodes))


def _mp(v):
    if isinstance(v, Fraction):
        return mp.mpf(v.numerator) / v.denominator
    return mp.mpc(complex(v))


def recurrence_values(params: ModelParams, parity: str, count: int, E):
    """Phi_0..Phi_{count-1} and their E-derivatives at one point, straight from the recurrence.

    Works with floats, complex or mpmath numbers; avoids the cancellation of
    expanded monomial coefficients.
    """
    lam, z = params.lam, params.zeta
    if isinstance(E, (mp.mpf, mp.mpc)):
        lam, z = _mp(lam), _mp(z)
        coef = [_mp(recurrence_coefficient(params, n, parity)) for n in range(count + 1)]
    else:
        coef = [complex(recurrence_coefficient(params, n, parity)) for n in range(count + 1)]
    vals, ders = [E * 0 + 1], [E * 0]
    pv, pd = E * 0, E * 0
    n = 0 if parity == "even" else 1
    while len(vals) < count:
        a = E - lam * z * z - 4 * n * n
        b = coef[n] if n < len(coef) else complex(recurrence_coefficient(params, n, parity))
        nv = a * vals[-1] + b * pv
        nd = vals[-1] + a * ders[-1] + b * pd
        pv, pd = vals[-1], ders[-1]
        vals.append(nv)
        ders.append(nd)
        n += 1
    return vals, ders


def measure_weights(q: Quantization, zeta, lam, dps: int = 50) -> Measure:
    """Solve sum_k w_k Phi_n(E_k) = delta_{n0}, n = 0..l-1, for the point masses.

    The weights can span many decades while the tiny ones still carry
    large Phi values, so the system is set up and solved at ``dps``
    decimal digits (nodes Newton-polished at that precision) and rounded
    back to complex doubles.
    """
    spec = eigenvalues(q, zeta, lam)
    if spec.degenerate():
        raise SingularMeasureError("degenerate eigenvalues (exceptional point): weights undefined")
    ell = len(spec.energies)
    if ell == 0:
        raise ValueError("no quasi-exact levels for this quantization")
    real = complex(zeta).imag == 0 and complex(lam).imag == 0
    if real:
        params = q.params(Fraction(complex(zeta).real), Fraction(complex(lam).real))
    else:
        params = q.params(complex(zeta), complex(lam))
    with mp.workdps(dps):
        nodes = []
        for e in spec.energies:
            x = mp.mpc(e)
            for _ in range(8):
                v, d = recurrence_values(params, q.parity, ell + 1, x)
                if d[ell] == 0:
                    break
                step = v[ell] / d[ell]
                x -= step
                if abs(step) <= mp.mpf(10) ** (-dps + 5) * (1 + abs(x)):
                    break
            nodes.append(x)
        A = mp.matrix(ell, ell)
        for k, x in enumerate(nodes):
            v, _ = recurrence_values(params, q.parity, ell, x)
            for n in range(ell):
                A[n, k] = v[n]
        rhs = mp.matrix([1] + [0] * (ell - 1))
        try:
            w = mp.lu_solve(A, rhs)
        except ZeroDivisionError:
            raise SingularMeasureError("weight system is singular") from None
        weights = [complex(w[k]) for k in range(ell)]
    if not all(cmath.isfinite(x) for x in weights):
        raise SingularMeasureError("weight system is numerically singular")
    return Measure(spec.energies, weights, q, zeta, lam)


def functional_L(measure: Measure, p: Poly) -> complex:
    """L(p) = sum_k w_k p(E_k)."""
    return sum(w * evaluate(p, e) for w, e in zip(measure.weights, measure.nodes))


def gram_matrix(measure: Measure) -> list[list[complex]]:
    """G[i][j] = L(Phi_i Phi_j), with each factor evaluated by the recurrence at the nodes."""
    q = measure.quantization
    params = q.params(complex(measure.zeta), complex(measure.lam))
    ell = len(measure.nodes)
    vals = [recurrence_values(params, q.parity, ell, complex(e))[0] for e in measure.nodes]
    return [[sum(w * v[i] * v[j] for w, v in zip(measure.weights, vals)) for j in range(ell)] for i in range(ell)]


def weights_closed_form(q: Quantization, zeta, lam) -> list[tuple[complex, complex]]:
    """(node, weight) pairs from the radical formulas, for cross-checking the solve.

    Even, n_tilde = 2: 1/2 + 1/(2 s) at E_- and 1/2 - 1/(2 s) at E_+, s = sqrt(1 - zhat^2).
    Odd, n_tilde = 3: 1/2 + 3/(2 u) at E_- and 1/2 - 3/(2 u) at E_+, u = sqrt(9 - zhat^2).
    Even, n_tilde = 3: omega_1 at the ell = 0 root and chi_{-+2} at the ell = +-2 roots.
    """
    t = complex(zeta * (1 + lam)) ** 2
    a = lam * zeta ** 2
    key = (q.parity, q.n_tilde)
    if key == ("even", 2):
        s = cmath.sqrt(1 - t)
        return [(2 + a - 2 * s, 0.5 + 0.5 / s), (2 + a + 2 * s, 0.5 - 0.5 / s)]
    if key == ("odd", 3):
        u = cmath.sqrt(9 - t)
        return [(10 + a - 2 * u, 0.5 + 1.5 / u), (10 + a + 2 * u, 0.5 - 1.5 / u)]
    if key == ("even", 3):
        om = (35 + 18 * t + cmath.sqrt((3 * t - 13) ** 3 + (18 * t + 35) ** 2)) ** (1 / 3)
        w1 = 1 / 3 - ((260 - 60 * t) * om + (3 * t + 4) * om ** 2 + 20 * om ** 3) / (
            12 * ((13 - 3 * t) ** 2 + (13 - 3 * t) * om ** 2 + om ** 4))

        def chi(ell):
            e = cmath.exp(1j * cmath.pi * ell / 3)
            first = (3 * t - 20 * om + 4) * (1 + 2 * e) / (36 * (3 * t + om ** 2 - 13))
            second = (4 + 3 * t - 20 * e * om) / (12 * ((1 + 2 * e) * (3 * t - 13) + (1 - e) * om ** 2))
            return 1 / 3 + first + second

        e0, e2, em2 = closed_form(q, zeta, lam)
        return [(e0, w1), (e2, chi(-2)), (em2, chi(2))]
    raise ValueError("closed-form weights exist for (even, 2), (odd, 3) and (even, 3) only")


@dataclass
class MomentTable:
    values: list
    method: str
    exact: bool

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def moments(source, parity: str | None = None, max_order: int = 8, method: str = "recurrence",
            zeta=None, lam=None) -> MomentTable:
    """mu_0..mu_{max_order} with mu_n = L(E^n).

    ``method="weights"`` sums w_k E_k^n over the measure; ``source`` is a
    :class:`Quantization` and ``zeta``/``lam`` must be given.
    ``method="recurrence"`` uses only the monic family: L(Phi_n) = 0 for
    n >= 1 gives mu_n = sum_k nu_k mu_k with Phi_n = E^n - sum_k nu_k E^k.
    ``source`` is then :class:`ModelParams` (with ``parity``) or a
    :class:`Quantization` (with ``zeta``/``lam``); exact params give exact moments.
    """
    if method == "weights":
        if not isinstance(source, Quantization):
            raise TypeError("the weights method needs a Quantization")
        m = measure_weights(source, zeta, lam)
        vals = [sum(w * e ** n for w, e in zip(m.weights, m.nodes)) for n in range(max_order + 1)]
        return MomentTable(vals, "weights", False)
    if method != "recurrence":
        raise ValueError(f"unknown method {method!r}")
    if isinstance(source, Quantization):
        parity = source.parity
        source = source.params(zeta, lam)
    if parity is None:
        raise ValueError("parity is required with ModelParams")
    exact = source.exact
    vals = (source.N, source.zeta, source.lam)
    if not exact and all(complex(v).imag == 0 for v in vals):
        # the float recurrence cancels badly at high order; binary floats are exact rationals
        source = ModelParams(*(Fraction(complex(v).real) for v in vals))
    basis = family(source, parity, max_order + 1)
    mus = [source.scalar(1)]
    for n in range(1, max_order + 1):
        phi = basis[n]
        mus.append(-sum(phi[k] * mus[k] for k in range(n)))
    if not exact:
        mus = [complex(m) for m in mus]
    return MomentTable(mus, "recurrence", exact)
