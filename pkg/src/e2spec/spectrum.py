"""Quasi-exact eigenvalues, closed-form oracles and eigenfunctions."""
from __future__ import annotations

import cmath
import warnings
from fractions import Fraction
from dataclasses import dataclass, field

import numpy as np

from .model import ModelParams, Quantization, build_P, build_Q, cn_coefficients, quantized_poly
from .polynomials import cluster_roots, find_roots, find_roots_exact, relative_residual

CLUSTER_RADIUS = 1e-7


def canonical_order(roots):
    return sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


@dataclass
class Spectrum:
    energies: list[complex]
    kinds: list[str]
    clusters: list[list[int]]
    quantization: Quantization
    zeta: complex
    lam: complex
    notes: list[str] = field(default_factory=list)

    @property
    def parity(self) -> str:
        return self.quantization.parity

    def degenerate(self) -> list[list[int]]:
        return [c for c in self.clusters if len(c) > 1]

    def cluster_centers(self) -> list[complex]:
        return [sum(self.energies[i] for i in c) / len(c) for c in self.clusters]

    def __len__(self):
        return len(self.energies)

    def __iter__(self):
        return iter(self.energies)


def _classify(roots, real_params: bool, radius: float):
    clusters = cluster_roots(roots, radius)
    kinds = [""] * len(roots)
    for c in clusters:
        if len(c) > 1:
            for i in c:
                kinds[i] = "degenerate"
    for i, z in enumerate(roots):
        if kinds[i]:
            continue
        if not real_params:
            kinds[i] = "complex"
        elif abs(z.imag) <= 1e-9 * (1 + abs(z)):
            kinds[i] = "real"
        else:
            kinds[i] = "conjugate-pair"
    return clusters, kinds


def eigenvalues(q: Quantization, zeta, lam, cluster_radius: float = CLUSTER_RADIUS) -> Spectrum:
    """Roots of P_ñ (even) or Q_ñ (odd) at the quantized N, canonically ordered."""
    real_params = complex(zeta).imag == 0 and complex(lam).imag == 0
    if real_params:
        # binary floats convert to Fractions exactly; repeated roots then split off exactly
        poly = quantized_poly(q, Fraction(complex(zeta).real), Fraction(complex(lam).real))
    else:
        poly = quantized_poly(q, zeta, lam)
    if poly.degree < 1:
        return Spectrum([], [], [], q, zeta, lam)
    roots = find_roots_exact(poly) if poly.exact else find_roots(poly)
    if real_params:
        roots = [complex(z.real, 0.0) if abs(z.imag) <= 1e-12 * (1 + abs(z)) else z for z in roots]
    roots = canonical_order(roots)
    clusters, kinds = _classify(roots, real_params, cluster_radius)
    return Spectrum(roots, kinds, clusters, q, zeta, lam)


def closed_form(q: Quantization, zeta, lam) -> list[complex]:
    """Explicit radical formulas for the lowest levels.

    Even parity covers ñ <= 3, odd parity ñ <= 4.  The cubic cases use the
    principal cube root and the three branches ell = 0, +2, -2.
    """
    a = lam * zeta ** 2
    t = complex(zeta * (1 + lam)) ** 2
    nt = q.n_tilde
    if q.parity == "even":
        if nt == 1:
            return [complex(a)]
        if nt == 2:
            r = 2 * cmath.sqrt(1 - t)
            return [2 + a + r, 2 + a - r]
        if nt == 3:
            return _cardano_branches(20 / 3 + a, 35 + 18 * t, 3 * t - 13, 52 - 12 * t)
    else:
        if nt == 1:
            return []
        if nt == 2:
            return [4 + complex(a)]
        if nt == 3:
            r = 2 * cmath.sqrt(9 - t)
            return [10 + a + r, 10 + a - r]
        if nt == 4:
            return _cardano_branches(56 / 3 + a, 143 + 18 * t, 3 * t - 49, 196 - 12 * t)
    raise ValueError(f"no closed form for n_tilde={nt}, parity={q.parity}")


def _cardano_branches(center, b, c, k):
    omega3 = b + cmath.sqrt(c ** 3 + b ** 2)
    omega = omega3 ** (1 / 3)
    out = []
    for ell in (0, 2, -2):
        ph = cmath.exp(1j * cmath.pi * ell / 3)
        out.append(center + 4 * omega / 3 * ph + k / 3 * ph.conjugate() / omega)
    return out


# -- eigenfunctions ------------------------------------------------------------

def _series_terms(q: Quantization, zeta, lam, E):
    """(mode numbers, amplitudes) of the truncated cosine/sine series."""
    params = q.params(complex(zeta), complex(lam))
    nt = q.n_tilde
    cn = cn_coefficients(params, nt)
    if q.parity == "even":
        polys = build_P(params, nt)
        modes = list(range(nt))
        amps = [1j ** n * cn[n] * polys[n](E) for n in modes]
    else:
        polys = build_Q(params, nt)  # polys[m-1] = Q_m
        modes = list(range(1, nt))
        amps = [1j ** (n + 1) * cn[n] * polys[n - 1](E) for n in modes]
    return params, modes, amps, polys[-1]


def _check_eigenvalue(q, top, E):
    if top.degree >= 1 and relative_residual(top, E) > 1e-8:
        warnings.warn(f"E = {E} is not a quasi-exact eigenvalue for {q}", stacklevel=3)


def eigenfunction_derivatives(q: Quantization, zeta, lam, E, theta):
    """psi, psi', psi'' on an array of angles, differentiated term by term."""
    params, modes, amps, top = _series_terms(q, zeta, lam, E)
    _check_eigenvalue(q, top, E)
    th = np.asarray(theta, dtype=float)
    z = complex(zeta)
    c2, s2 = np.cos(2 * th), np.sin(2 * th)
    phi = np.exp(0.5j * z * c2)
    dphi = -1j * z * s2 * phi
    ddphi = (-2j * z * c2 - z * z * s2 ** 2) * phi
    S = np.zeros_like(th, dtype=complex)
    dS = np.zeros_like(S)
    ddS = np.zeros_like(S)
    for n, A in zip(modes, amps):
        w = 2 * n
        if q.parity == "even":
            S += A * np.cos(w * th)
            dS += -A * w * np.sin(w * th)
            ddS += -A * w * w * np.cos(w * th)
        else:
            S += A * np.sin(w * th)
            dS += A * w * np.cos(w * th)
            ddS += -A * w * w * np.sin(w * th)
    psi = phi * S
    dpsi = dphi * S + phi * dS
    ddpsi = ddphi * S + 2 * dphi * dS + phi * ddS
    return psi, dpsi, ddpsi


def eigenfunction(q: Quantization, zeta, lam, E, theta):
    """psi^c or psi^s at angle(s) ``theta`` for energy ``E``."""
    if zeta == 0:
        raise ValueError("the eigenfunction normalisation is undefined at zeta = 0")
    psi = eigenfunction_derivatives(q, zeta, lam, E, theta)[0]
    return psi if np.ndim(theta) else complex(psi)


def apply_hamiltonian(q: Quantization, zeta, lam, E, theta):
    """(H psi, psi) on the grid; u v J acts as multiply-after-differentiate."""
    psi, dpsi, ddpsi = eigenfunction_derivatives(q, zeta, lam, E, theta)
    th = np.asarray(theta, dtype=float)
    z, l = complex(zeta), complex(lam)
    N = q.N(l)
    c2, s2 = np.cos(2 * th), np.sin(2 * th)
    h = -ddpsi - 1j * (1 - l) * z * s2 * dpsi + (l * z * z * c2 ** 2 - 2j * z * N * c2) * psi
    return h, psi


def schroedinger_residual(q: Quantization, zeta, lam, E, grid_size: int = 257) -> float:
    """max over a uniform theta grid of |H psi - E psi|."""
    if zeta == 0:
        raise ValueError("the eigenfunction normalisation is undefined at zeta = 0")
    theta = np.linspace(0.0, np.pi, grid_size)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        h, psi = apply_hamiltonian(q, zeta, lam, E, theta)
    return float(np.max(np.abs(h - E * psi)))
