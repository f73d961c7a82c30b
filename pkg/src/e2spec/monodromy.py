"""Eigenvalue continuation around circles in the complex lam plane.

lam(phi) = center + rho * exp(i pi phi); one full turn is phi -> phi + 2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .exceptional import ep_lambdas
from .model import Quantization, shifted_quantized
from .polynomials import find_roots
from .spectrum import canonical_order

MAX_HALVINGS = 12


class MonodromyError(RuntimeError):
    pass


@dataclass
class LoopTrace:
    quantization: Quantization
    zeta: float
    center: complex
    rho: float
    steps: int
    turns: int
    phis: list[float] = field(default_factory=list)
    energies: list[list[complex]] = field(default_factory=list)
    turn_perms: list[tuple[int, ...]] = field(default_factory=list)
    log: list[str] = field(default_factory=list)

    @property
    def sigma(self) -> tuple[int, ...]:
        """Root permutation after one turn: track k ends on starting root sigma[k]."""
        return self.turn_perms[0]

    @property
    def start(self) -> list[complex]:
        return self.energies[0]

    def closure_errors(self) -> list[float]:
        """Distance of each track, after the last turn, to its predicted root."""
        perm = self.turn_perms[-1]
        end = self.energies[-1]
        return [abs(end[k] - self.start[perm[k]]) for k in range(len(end))]


def lam_on_circle(center: complex, rho: float, phi: float) -> complex:
    return center + rho * cmath.exp(1j * math.pi * phi)


def energies_at(q: Quantization, zeta: float, lam: complex, init=None) -> list[complex]:
    """Quasi-exact energies at complex lam via the lam-free shifted polynomial."""
    phi = shifted_quantized(q)
    poly = phi.at(complex(zeta * (1 + lam)) ** 2, var="x")
    shift = lam * zeta ** 2
    guess = None if init is None else [e - shift for e in init]
    return [shift + x for x in find_roots(poly, init=guess)]


def _min_gap(roots) -> float:
    n = len(roots)
    if n < 2:
        return math.inf
    return min(abs(roots[i] - roots[j]) for i in range(n) for j in range(i + 1, n))


def _greedy_match(prev, new):
    """Nearest-neighbour matching; None unless it is a bijection within gap/2."""
    gap = _min_gap(prev)
    order = []
    used = set()
    for p in prev:
        j = min(range(len(new)), key=lambda j: abs(new[j] - p))
        if j in used or abs(new[j] - p) >= gap / 2:
            return None
        used.add(j)
        order.append(j)
    return [new[j] for j in order]


def _optimal_match(prev, new):
    cost = np.abs(np.subtract.outer(np.array(prev), np.array(new)))
    rows, cols = linear_sum_assignment(cost)
    out = [0j] * len(prev)
    for r, c in zip(rows, cols):
        out[r] = new[c]
    return out, float(cost[rows, cols].max())


def _nearest_permutation(current, reference) -> tuple[int, ...]:
    matched, _ = _optimal_match(current, reference)
    return tuple(reference.index(m) for m in matched)


def check_circle(q: Quantization, zeta: float, center: complex, rho: float, clearance: float = 1e-6):
    """Raise when the circle passes within ``clearance`` of a branch point."""
    if q.n_levels < 2:
        return
    for bp in ep_lambdas(q, zeta):
        d = abs(abs(bp - center) - rho)
        if d < clearance:
            raise MonodromyError(f"circle passes {d:.2e} from the branch point lam = {bp:.6g}")


def enclosed_branch_points(q: Quantization, zeta: float, center: complex, rho: float) -> list[complex]:
    if q.n_levels < 2:
        return []
    return [bp for bp in ep_lambdas(q, zeta) if abs(bp - center) < rho]


def trace_loop(q: Quantization, zeta: float, center: complex, rho: float,
               steps: int = 512, turns: int = 1) -> LoopTrace:
    """Continue every quasi-exact energy along ``turns`` turns of the circle."""
    if rho <= 0:
        raise ValueError("rho must be positive")
    if steps < 64:
        raise ValueError("steps must be >= 64")
    if turns < 1:
        raise ValueError("turns must be >= 1")
    check_circle(q, zeta, center, rho)

    trace = LoopTrace(q, zeta, complex(center), rho, steps, turns)
    roots = canonical_order(energies_at(q, zeta, lam_on_circle(center, rho, 0.0)))
    start = list(roots)
    trace.phis.append(0.0)
    trace.energies.append(list(roots))
    dphi = 2.0 / steps
    phi = 0.0
    for i in range(steps * turns):
        target = (i + 1) * dphi
        h = target - phi
        halvings = 0
        while phi < target:
            h = min(h, target - phi)
            new = energies_at(q, zeta, lam_on_circle(center, rho, phi + h), init=roots)
            matched = _greedy_match(roots, new)
            if matched is None:
                if halvings < MAX_HALVINGS:
                    halvings += 1
                    h /= 2
                    continue
                matched, worst = _optimal_match(roots, new)
                if worst >= _min_gap(roots):
                    raise MonodromyError(f"ambiguous root matching at phi = {phi + h:.6g}")
                trace.log.append(f"phi={phi + h:.9g}: optimal-assignment fallback")
            phi = target if h >= target - phi else phi + h
            roots = matched
            trace.phis.append(phi)
            trace.energies.append(list(roots))
        if halvings:
            trace.log.append(f"phi={target:.9g}: {halvings} halvings")
        if (i + 1) % steps == 0:
            trace.turn_perms.append(_nearest_permutation(roots, start))
    return trace


def permutation_cycles(trace_or_perm) -> list[tuple[int, ...]]:
    """Cycle decomposition (fixed points included) of the one-turn permutation."""
    perm = trace_or_perm.sigma if isinstance(trace_or_perm, LoopTrace) else tuple(trace_or_perm)
    seen = set()
    cycles = []
    for k in range(len(perm)):
        if k in seen:
            continue
        cyc = [k]
        seen.add(k)
        j = perm[k]
        while j != k:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        cycles.append(tuple(cyc))
    return cycles


def turns_to_closure(trace_or_perm) -> list[int]:
    """Number of turns after which each root's path closes (its cycle length)."""
    perm = trace_or_perm.sigma if isinstance(trace_or_perm, LoopTrace) else tuple(trace_or_perm)
    out = [0] * len(perm)
    for cyc in permutation_cycles(perm):
        for k in cyc:
            out[k] = len(cyc)
    return out


def cycle_type(trace_or_perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in permutation_cycles(trace_or_perm)), reverse=True))


def format_cycles(cycles) -> str:
    """1-based cycle notation without fixed points, "()" for the identity."""
    parts = ["(" + " ".join(str(k + 1) for k in c) + ")" for c in cycles if len(c) > 1]
    return "".join(parts) if parts else "()"


# -- closed-form branch cuts of E_2^{c,+-} -------------------------------------

def e2_closed_form(zeta: float, lam: complex, sign: int = 1) -> complex:
    """2 + lam zeta^2 +- 2 sqrt(1 - zeta^2 (1+lam)^2), principal square root."""
    return 2 + lam * zeta ** 2 + sign * 2 * cmath.sqrt(1 - zeta ** 2 * (1 + lam) ** 2)


def cut_jump(zeta: float, lam: float, eps: float = 1e-14) -> float:
    """|E(lam + i eps) - E(lam - i eps)| for the principal closed form."""
    return abs(e2_closed_form(zeta, lam + 1j * eps) - e2_closed_form(zeta, lam - 1j * eps))


@dataclass
class BranchCutReport:
    zeta: float
    segments: list[tuple[float, float]]
    expected: list[tuple[float, float]]
    max_offcut_jump: float


def branch_cut_check(zeta: float, probes: int = 4001, threshold: float = 1e-9,
                     tol: float = 1e-12) -> BranchCutReport:
    """Locate the real-lam segments on which E_2^{c,+-} jumps.

    A uniform probe grid flags discontinuities; each on/off transition is
    bisected to ``tol``.  Segments reaching the grid edge are open to +-inf.
    Off-axis probes confirm continuity away from the real line.
    """
    if zeta <= 0:
        raise ValueError("zeta must be positive")
    half = 4.0 / zeta + 4.0
    grid = np.linspace(-1 - half, -1 + half, probes)
    on = [cut_jump(zeta, x) > threshold for x in grid]

    def edge(a, b):
        on_a = cut_jump(zeta, a) > threshold
        while b - a > tol:
            m = 0.5 * (a + b)
            if (cut_jump(zeta, m) > threshold) == on_a:
                a = m
            else:
                b = m
        return float(0.5 * (a + b))

    segments = []
    lo = -math.inf if on[0] else None
    for k in range(1, probes):
        if on[k] != on[k - 1]:
            x = edge(grid[k - 1], grid[k])
            if on[k]:
                lo = x
            else:
                segments.append((lo, x))
                lo = None
    if lo is not None:
        segments.append((lo, math.inf))

    off = 0.0
    for y in (-1.0, -0.25, 0.25, 1.0):
        for x in grid[::40]:
            off = max(off, abs(e2_closed_form(zeta, x + 1j * y + 1e-9j) - e2_closed_form(zeta, x + 1j * y - 1e-9j)))
    expected = [(-math.inf, -1 - 1 / zeta), (1 / zeta - 1, math.inf)]
    return BranchCutReport(zeta, segments, expected, off)


def cut_crossings(zeta: float, center: complex, rho: float) -> int:
    """How often a circle crosses the real-lam cuts of E_2^{c,+-}."""
    c = complex(center)
    if rho <= abs(c.imag):
        return 0
    half = math.sqrt(rho ** 2 - c.imag ** 2)
    left, right = -1 - 1 / zeta, 1 / zeta - 1
    return sum(1 for x in (c.real - half, c.real + half) if x < left or x > right)
