"""Model parameters and the polynomial families of the three-term recurrences.

H(N, zeta, lam) = J^2 + 2(1-lam) zeta u v J + lam zeta^2 (u^2-v^2)^2
                  + 2 i zeta N (u^2-v^2)

Two fundamental solutions carry coefficient polynomials P_n(E) (cosine
series, "even" parity) and Q_n(E) (sine series, "odd" parity).  Every builder
accepts exact (int/Fraction) or float/complex parameters and returns exact or
float :class:`~e2spec.polynomials.Poly` objects accordingly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

from .polynomials import BiPoly, Poly, _is_exact_scalar

PARITIES = ("even", "odd")


class PoleError(ZeroDivisionError):
    """A coefficient formula hits a pole for the requested parameters."""


@dataclass(frozen=True)
class ModelParams:
    N: Number
    zeta: Number
    lam: Number

    def __post_init__(self):
        if self.lam == -1:
            raise ValueError("lambda = -1 is excluded (the model divides by 1 + lambda)")

    @property
    def exact(self) -> bool:
        return all(_is_exact_scalar(v) for v in (self.N, self.zeta, self.lam))

    @property
    def zhat(self):
        return self.zeta * (1 + self.lam)

    @property
    def g(self):
        return self.N * self.zeta

    def hermitian(self) -> bool:
        return 2 * self.N == 1 - self.lam

    def scalar(self, v):
        """Promote ``v`` into the coefficient domain of these parameters."""
        return Fraction(v) if self.exact else complex(v)


@dataclass(frozen=True)
class Quantization:
    """Truncation level ``n_tilde`` with N = n_tilde + (n_tilde - 1) lam."""

    n_tilde: int
    parity: str = "even"

    def __post_init__(self):
        if self.parity not in PARITIES:
            raise ValueError(f"parity must be one of {PARITIES}, got {self.parity!r}")
        if int(self.n_tilde) != self.n_tilde or self.n_tilde < 1:
            raise ValueError("n_tilde must be a positive integer")

    @property
    def family(self) -> str:
        return "P" if self.parity == "even" else "Q"

    @property
    def n_levels(self) -> int:
        """Number of quasi-exact eigenvalues (degree of the quantizing polynomial)."""
        return self.n_tilde if self.parity == "even" else self.n_tilde - 1

    def N(self, lam):
        return self.n_tilde + (self.n_tilde - 1) * lam

    def params(self, zeta, lam) -> ModelParams:
        return ModelParams(self.N(lam), zeta, lam)


def _poly(coeffs, exact: bool) -> Poly:
    return Poly(coeffs, exact=exact)


def recurrence_coefficient(params: ModelParams, n: int, parity: str = "even"):
    """Coefficient of Phi_{n-1} in the step producing Phi_{n+1}.

    Includes the factor 2 of the first P step; the Q family has no
    Q_0 term, so its n = 1 coefficient is zero.
    """
    N, z, lam = params.N, params.zeta, params.lam
    c = z * z * (N + n * lam + (n - 1)) * (N - (n - 1) * lam - n)
    if n == 1:
        return params.scalar(2 * c) if parity == "even" else params.scalar(0)
    return params.scalar(c)


def _diag(params: ModelParams, n: int):
    return params.scalar(params.lam * params.zeta ** 2 + 4 * n * n)


def build_P(params: ModelParams, n_max: int) -> list[Poly]:
    """[P_0, ..., P_{n_max}], all monic, P_n of degree n."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    ex = params.exact
    out = [_poly([1], ex)]
    prev = _poly([], ex)
    for n in range(n_max):
        cur = out[-1]
        nxt = cur * _poly([-_diag(params, n), 1], ex) + prev * recurrence_coefficient(params, n, "even")
        prev = cur
        out.append(nxt)
    return out


def build_Q(params: ModelParams, n_max: int) -> list[Poly]:
    """[Q_1, ..., Q_{n_max}], all monic, Q_n of degree n - 1."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ex = params.exact
    out = [_poly([1], ex)]
    prev = _poly([], ex)
    for m in range(1, n_max):
        cur = out[-1]
        nxt = cur * _poly([-_diag(params, m), 1], ex) + prev * recurrence_coefficient(params, m, "odd")
        prev = cur
        out.append(nxt)
    return out


def family(params: ModelParams, parity: str, count: int) -> list[Poly]:
    """The orthogonal-polynomial basis Phi_0..Phi_{count-1} of one parity.

    Phi_j is P_j for the even family and Q_{j+1} for the odd one, so Phi_j
    always has degree j.
    """
    if parity == "even":
        return build_P(params, count - 1)
    return build_Q(params, count)


def quantized_poly(q: Quantization, zeta, lam) -> Poly:
    """P_ñ or Q_ñ at N = ñ + (ñ-1) lam; its roots are the quasi-exact energies."""
    params = q.params(zeta, lam)
    if q.parity == "even":
        return build_P(params, q.n_tilde)[-1]
    return build_Q(params, q.n_tilde)[-1]


def _check_quantized(q: Quantization, params: ModelParams):
    target = q.N(params.lam)
    if params.exact:
        ok = target == params.N
    else:
        ok = abs(complex(target) - complex(params.N)) <= 1e-12 * (1 + abs(complex(target)))
    if not ok:
        raise ValueError(f"N = {params.N} is not quantized for n_tilde = {q.n_tilde} (expected {target})")


def build_R(q: Quantization, params: ModelParams, l_max: int) -> list[Poly]:
    """[R_1, ..., R_{l_max}] with Phi_{ñ+l} = Phi_ñ R_l."""
    _check_quantized(q, params)
    ex = params.exact
    n0 = q.n_tilde
    prev = _poly([1], ex)
    cur = _poly([-_diag(params, n0), 1], ex)
    out = [cur]
    for ell in range(1, l_max):
        n = n0 + ell
        nxt = cur * _poly([-_diag(params, n), 1], ex) + prev * recurrence_coefficient(params, n, q.parity)
        prev, cur = cur, nxt
        out.append(cur)
    return out[:l_max]


def build_shifted(q: Quantization, n_max: int) -> list[BiPoly]:
    """Quantized family in x = E - lam zeta^2 and t = zhat^2.

    Same indexing as :func:`build_P` (even) or :func:`build_Q` (odd).  The
    coefficients are integer polynomials in t and do not depend on lam.
    """
    nt = q.n_tilde
    t = Poly([0, 1], exact=True, var="t")
    x = BiPoly.x()

    def step(cur, prev, n, factor):
        c = factor * (nt + n - 1) * (nt - n)
        return cur * (x - BiPoly([4 * n * n])) + prev * (t * c)

    if q.parity == "even":
        out = [BiPoly([1])]
        prev = BiPoly([])
        for n in range(n_max):
            nxt = step(out[-1], prev, n, 2 if n == 1 else 1)
            prev = out[-1]
            out.append(nxt)
        return out
    out = [BiPoly([1])]
    prev = BiPoly([])
    for m in range(1, n_max):
        nxt = step(out[-1], prev, m, 0 if m == 1 else 1)
        prev = out[-1]
        out.append(nxt)
    return out


def shifted_quantized(q: Quantization) -> BiPoly:
    return build_shifted(q, q.n_tilde)[-1]


def mathieu_limit_bipoly(n_max: int, parity: str = "even") -> list[BiPoly]:
    """Double-scaling limit family with coefficients in s = g^2 (the "t" slot)."""
    s = Poly([0, 1], exact=True, var="t")
    x = BiPoly.x()
    if parity == "even":
        out = [BiPoly([1]), x]
        for n in range(1, n_max):
            factor = 2 if n == 1 else 1
            out.append(out[-1] * (x - BiPoly([4 * n * n])) + out[-2] * (s * factor))
        return out[: n_max + 1]
    out = [BiPoly([1]), x - BiPoly([4])]
    for m in range(2, n_max):
        out.append(out[-1] * (x - BiPoly([4 * m * m])) + out[-2] * s)
    return out[:n_max]


def build_mathieu_limit(g, n_max: int, parity: str = "even") -> list[Poly]:
    """N -> oo, zeta -> 0, N zeta = g limit of the recurrences.

    Even: [P_0, ..., P_{n_max}]; odd: [Q_1, ..., Q_{n_max}].
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    s = g * g
    return [b.at(s) for b in mathieu_limit_bipoly(n_max, parity)]


def cn_coefficients(params: ModelParams, n_max: int) -> list:
    """c_0..c_{n_max} of the eigenfunction series.

    c_{n+1} = c_n / [zeta (1+lam) (a + n - 1)], a = (1 + N + 2 lam)/(1 + lam),
    which reproduces 1 / [zeta^n (N+lam) (1+lam)^(n-1) (a)_(n-1)].
    """
    if params.zeta == 0:
        raise ValueError("c_n is undefined at zeta = 0")
    N, z, lam = (params.scalar(v) for v in (params.N, params.zeta, params.lam))
    a = (1 + N + 2 * lam) / (1 + lam)
    out = [params.scalar(1)]
    for n in range(n_max):
        den = z * (1 + lam) * (a + n - 1)
        if den == 0:
            raise PoleError(f"c_{n + 1} has a pole: a + n - 1 = 0 at n = {n}")
        out.append(out[-1] / den)
    return out
