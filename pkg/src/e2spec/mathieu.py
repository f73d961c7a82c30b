"""Double-scaling study: EP sequences approaching the complex Mathieu EP.

Under N -> oo, zeta -> 0 with g = N zeta fixed the recurrences turn into the
three-term relations of the complex Mathieu problem.  The smallest EP of the
quantized model, rescaled by N(n) = (n+1) + n lam, should approach the
Mathieu EP zeta_M as the level n grows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .exceptional import smallest_ep
from .model import Quantization, mathieu_limit_bipoly
from .polynomials import discriminant, real_roots_in_t


@dataclass(frozen=True)
class ScalingRow:
    n: int
    parity: str
    lam: float
    N: float
    zhat0: float
    zeta0: float
    g: float
    delta: float


@dataclass
class MathieuEP:
    value: float
    levels: int
    parity: str
    sequence: dict[int, float] = field(default_factory=dict)

    def increments(self) -> list[float]:
        """|g(L+1) - g(L)| for consecutive computed levels."""
        ks = sorted(self.sequence)
        return [abs(self.sequence[b] - self.sequence[a]) for a, b in zip(ks, ks[1:])]


def _level_quantization(n: int, parity: str) -> Quantization:
    # level n uses n_tilde = n + 1 so that N(n) = (n+1) + n lam
    return Quantization(n + 1, parity)


@lru_cache(maxsize=None)
def _limit_ep(level: int, parity: str) -> float | None:
    """Smallest positive g with a double root in the level-``level`` truncation."""
    fam = mathieu_limit_bipoly(level, parity)
    top = fam[level] if parity == "even" else fam[level - 1]
    if top.degree < 2:
        return None
    roots = [s for s in real_roots_in_t(discriminant(top)) if s > 0]
    return math.sqrt(min(roots)) if roots else None


def mathieu_ep(levels: int = 12, parity: str = "even") -> MathieuEP:
    """Mathieu EP from the limit recurrence, with the convergence sequence.

    ``sequence`` maps each level L (2..levels, or 3.. for odd) to its
    smallest positive real EP in g.
    """
    if levels < 3:
        raise ValueError("levels must be >= 3")
    if parity not in ("even", "odd"):
        raise ValueError(f"unknown parity {parity!r}")
    seq = {}
    for L in range(2, levels + 1):
        g = _limit_ep(L, parity)
        if g is not None:
            seq[L] = g
    if levels not in seq:
        raise ArithmeticError(f"no real EP at level {levels}")
    return MathieuEP(seq[levels], levels, parity, seq)


def ep_sequence(lam: float, n_range, parity: str = "even", zeta_m: float | None = None,
                levels: int = 12) -> list[ScalingRow]:
    """Rows g(n) = zeta_0 N(n) and Delta(n) = g(n) - zeta_M over ``n_range``.

    zeta_M defaults to :func:`mathieu_ep` at ``levels`` for the same parity.
    """
    if lam == -1:
        raise ValueError("lam = -1 is excluded (1 + lam appears in denominators)")
    if zeta_m is None:
        zeta_m = mathieu_ep(levels, parity).value
    rows = []
    for n in n_range:
        zhat0 = smallest_ep(_level_quantization(n, parity))
        if zhat0 is None:
            continue
        N = (n + 1) + n * lam
        zeta0 = zhat0 / (1 + lam)
        g = zeta0 * N
        rows.append(ScalingRow(n, parity, lam, N, zhat0, zeta0, g, g - zeta_m))
    return rows


@dataclass
class LambdaStudy:
    lambdas: list[float]
    ns: list[int]
    abs_delta: dict[float, dict[int, float]]
    best: dict[int, float]
    zeta_m: float


def optimal_lambda_study(lambdas, n_range, parity: str = "even", zeta_m: float | None = None) -> LambdaStudy:
    """|Delta(n)| for each lam and n, with the minimising lam per n."""
    if zeta_m is None:
        zeta_m = mathieu_ep(12, parity).value
    ns = list(n_range)
    table = {}
    for lam in lambdas:
        table[lam] = {r.n: abs(r.delta) for r in ep_sequence(lam, ns, parity, zeta_m)}
    best = {}
    for n in ns:
        have = [lam for lam in lambdas if n in table[lam]]
        if have:
            best[n] = min(have, key=lambda lam: table[lam][n])
    return LambdaStudy(list(lambdas), ns, table, best, zeta_m)
