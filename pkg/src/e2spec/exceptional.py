"""Exact discriminants of the quantized families and their exceptional points."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .model import Quantization, shifted_quantized
from .polynomials import Poly, discriminant, find_roots, format_poly, real_roots_in_t, relative_residual


@dataclass(frozen=True)
class ExceptionalPoint:
    zhat: float
    t: float
    x_degenerate: float
    residual: float

    def lam_for(self, zeta: float) -> float:
        """The lam that puts a model with coupling ``zeta`` on this EP."""
        return self.zhat / zeta - 1

    def energy(self, zeta: float, lam: float) -> complex:
        """Degenerate energy lam zeta^2 + x_deg; needs zeta (1 + lam) = zhat."""
        if not math.isclose(zeta * (1 + lam), self.zhat, rel_tol=1e-9, abs_tol=1e-12):
            raise ValueError(f"zeta (1 + lam) = {zeta * (1 + lam)} is not on the EP zhat = {self.zhat}")
        return lam * zeta ** 2 + self.x_degenerate


@dataclass
class DiscriminantReport:
    quantization: Quantization
    raw: Poly
    reduced: Poly
    kappa: Fraction
    eps: list[ExceptionalPoint] = field(default_factory=list)

    def reduced_in_zhat(self) -> str:
        """Reduced discriminant written in zhat (t = zhat^2)."""
        cs = [0] * (2 * len(self.reduced.coeffs) - 1)
        for k, c in enumerate(self.reduced.coeffs):
            cs[2 * k] = c
        return format_poly([Fraction(c) for c in cs], "zhat")

    def integer_coefficients(self) -> list[int]:
        return [int(c) for c in self.reduced.coeffs]


def reduce(raw: Poly) -> tuple[Poly, Fraction]:
    """Split raw = kappa * reduced, reduced primitive with positive leading coefficient."""
    kappa = raw.content()
    if raw.lc < 0:
        kappa = -kappa
    reduced = raw.exact_div(kappa)
    return Poly(reduced.coeffs, exact=True, var="t"), kappa


def _validate(q: Quantization):
    lowest = 2 if q.parity == "even" else 3
    if q.n_tilde < lowest:
        raise ValueError(f"{q.parity} family needs n_tilde >= {lowest} for a discriminant")


@lru_cache(maxsize=None)
def _raw_discriminant(q: Quantization) -> Poly:
    return Poly(discriminant(shifted_quantized(q)).coeffs, exact=True, var="t")


def degenerate_x(q: Quantization, t: float) -> tuple[float | complex, float]:
    """Shared root of Phi and Phi' at ``t``, with Phi's relative residual there."""
    phi = shifted_quantized(q).at(complex(t), var="x")
    crit = find_roots(phi.derivative())
    best = min(crit, key=lambda x: relative_residual(phi, x))
    return best, relative_residual(phi, best)


def discriminant_in_zhat(q: Quantization, with_eps: bool = True) -> DiscriminantReport:
    """Discriminant of the quantized family as an exact polynomial in t = zhat^2."""
    _validate(q)
    raw = _raw_discriminant(q)
    reduced, kappa = reduce(raw)
    report = DiscriminantReport(q, raw, reduced, kappa)
    if with_eps:
        report.eps = exceptional_points(q)
    return report


def exceptional_points(q: Quantization) -> list[ExceptionalPoint]:
    """Real EPs zhat_0 = sqrt(t_0) >= 0 with their degenerate shifted energies."""
    _validate(q)
    reduced, _ = reduce(_raw_discriminant(q))
    out = []
    for t0 in real_roots_in_t(reduced):
        if t0 < 0:
            continue
        x, res = degenerate_x(q, t0)
        out.append(ExceptionalPoint(math.sqrt(t0), t0, complex(x).real, res))
    return out


def complex_ep_t(q: Quantization) -> list[complex]:
    """All (complex) zeros of the reduced discriminant in t."""
    _validate(q)
    reduced, _ = reduce(_raw_discriminant(q))
    return find_roots(reduced.to_float())


def ep_lambdas(q: Quantization, zeta: complex) -> list[complex]:
    """Branch points in the complex lam plane for fixed ``zeta``.

    zeta^2 (1 + lam)^2 = t_0 gives lam = -1 +- sqrt(t_0) / zeta.
    """
    out = []
    for t0 in complex_ep_t(q):
        r = cmath.sqrt(t0) / zeta
        out.extend([-1 + r, -1 - r])
    return out


def smallest_ep(q: Quantization) -> float | None:
    """Smallest positive real zhat_0, or None when there is no real EP."""
    eps = [ep.zhat for ep in exceptional_points(q) if ep.zhat > 0]
    return min(eps) if eps else None
