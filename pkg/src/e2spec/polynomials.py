"""Dense univariate polynomials, resultants and a global root finder.

Two coefficient domains are supported and never mixed silently:

* exact: :class:`fractions.Fraction` coefficients (ints are promoted),
* float: Python ``complex`` coefficients.

:class:`BiPoly` is a polynomial in a main variable ``x`` whose coefficients
are exact polynomials in a second variable ``t``.  It is what the
discriminant machinery works on.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Poly",
    "BiPoly",
    "RootFindingError",
    "evaluate",
    "derivative",
    "sylvester_resultant",
    "discriminant",
    "find_roots",
    "real_roots_in_t",
    "cluster_roots",
]

_EPS = 2.0 ** -52


class RootFindingError(ArithmeticError):
    """Raised when Aberth iteration does not converge.

    The best iterates are kept in ``roots`` so callers can inspect them.
    """

    def __init__(self, message: str, roots: list[complex]):
        super().__init__(message)
        self.roots = roots


def _is_exact_scalar(c) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


class Poly:
    """Immutable dense polynomial, ``coeffs[k]`` multiplies ``var**k``."""

    __slots__ = ("coeffs", "exact", "var")

    def __init__(self, coeffs: Iterable = (), exact: bool | None = None, var: str = "E"):
        cs = list(coeffs)
        if exact is None:
            exact = all(_is_exact_scalar(c) for c in cs)
        if exact:
            if not all(_is_exact_scalar(c) for c in cs):
                raise TypeError("exact Poly needs int/Fraction coefficients; convert explicitly")
            cs = [Fraction(c) for c in cs]
        else:
            cs = [complex(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "exact", exact)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers
    @classmethod
    def constant(cls, c, var: str = "E") -> "Poly":
        return cls([c], var=var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "E") -> "Poly":
        return cls([0] * k + [c], exact=_is_exact_scalar(c), var=var)

    @classmethod
    def from_roots(cls, roots: Sequence, var: str = "E") -> "Poly":
        exact = all(_is_exact_scalar(r) for r in roots)
        p = cls([1], exact=exact, var=var)
        for r in roots:
            p = p * cls([-r, 1], exact=exact, var=var)
        return p

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self._zero

    @property
    def _zero(self):
        return Fraction(0) if self.exact else 0j

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._zero

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.exact == other.exact and self.coeffs == other.coeffs
        if isinstance(other, Number):
            return self.coeffs == Poly([other], exact=self.exact).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.exact))

    def to_float(self) -> "Poly":
        return Poly([complex(c) for c in self.coeffs], exact=False, var=self.var)

    def monic(self) -> "Poly":
        return self * (1 / self.lc) if self.exact else self * (1.0 / self.lc)

    def __call__(self, z):
        return evaluate(self, z)

    # arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.exact != self.exact:
                raise TypeError("cannot mix exact and float polynomials implicitly")
            return other
        if isinstance(other, Number):
            if self.exact and not _is_exact_scalar(other):
                raise TypeError("float scalar applied to an exact polynomial")
            return Poly([other], exact=self.exact, var=self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)], exact=self.exact, var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], exact=self.exact, var=self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly([], exact=self.exact, var=self.var)
        out = [self._zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, exact=self.exact, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1], exact=self.exact, var=self.var)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [self._zero] * max(len(rem) - dq, 0)
        inv = (1 / other.lc) if self.exact else (1.0 / other.lc)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            q[k - dq] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        rem = rem[:dq] if dq > 0 else []
        return Poly(q, exact=self.exact, var=self.var), Poly(rem, exact=self.exact, var=self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        """Quotient of an exact division; raises if the remainder is nonzero."""
        if isinstance(other, Number):
            return self * (Fraction(1) / Fraction(other)) if self.exact else self * (1.0 / other)
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def derivative(self) -> "Poly":
        return derivative(self)

    def content(self) -> Fraction:
        """Positive rational c with ``self / c`` primitive in Z[var]."""
        if not self.exact:
            raise TypeError("content is defined for exact polynomials only")
        if not self.coeffs:
            return Fraction(0)
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, int(c * den))
        return Fraction(g, den)

    def compose_linear(self, shift, scale=1) -> "Poly":
        """Return ``p(scale*var + shift)``."""
        out = Poly([], exact=self.exact, var=self.var)
        lin = Poly([shift, scale], exact=self.exact, var=self.var)
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def __repr__(self):
        dom = "exact" if self.exact else "float"
        return f"Poly({list(self.coeffs)!r}, {dom}, var={self.var!r})"

    def __str__(self):
        return format_poly(self.coeffs, self.var)


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, complex) and c.imag == 0:
        return f"{c.real:.9g}"
    return f"{c:.9g}" if isinstance(c, (float, int)) else str(c)


def format_poly(coeffs: Sequence, var: str = "E") -> str:
    """Human-readable ``a var^k + ...`` with the highest power first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if isinstance(c, int):
            c = Fraction(c)
        neg = isinstance(c, (Fraction, float)) and c < 0
        mag = -c if neg else c
        body = _fmt_coeff(mag)
        if k > 0:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{body} {mono}"
        if not terms:
            terms.append(("-" if neg else "") + body)
        else:
            terms.append(("- " if neg else "+ ") + body)
    return " ".join(terms) if terms else "0"


class BiPoly:
    """Polynomial in ``x`` with exact polynomial-in-``t`` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = []
        for c in coeffs:
            if isinstance(c, Poly):
                if not c.exact:
                    raise TypeError("BiPoly coefficients must be exact")
                cs.append(Poly(c.coeffs, exact=True, var="t"))
            else:
                cs.append(Poly([c], exact=True, var="t"))
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def x(cls) -> "BiPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Poly:
        return self.coeffs[-1] if self.coeffs else Poly([], exact=True, var="t")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Poly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Poly([], exact=True, var="t")

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return BiPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self):
        return BiPoly([-c for c in self.coeffs])

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if not self.coeffs or not other.coeffs:
                return BiPoly([])
            out = [Poly([], exact=True, var="t")] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BiPoly(out)
        if isinstance(other, Poly) or _is_exact_scalar(other):
            return BiPoly([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self) -> "BiPoly":
        return BiPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def at(self, t, var: str = "E") -> Poly:
        """Specialise ``t``; exact result when ``t`` is exact."""
        if _is_exact_scalar(t):
            return Poly([evaluate(c, Fraction(t)) for c in self.coeffs], exact=True, var=var)
        return Poly([evaluate(c, t) for c in self.coeffs], exact=False, var=var)

    def shift(self, a) -> "BiPoly":
        """Return ``q(x + a)`` for an exact scalar or t-polynomial ``a``."""
        a = a if isinstance(a, Poly) else Poly([a], exact=True, var="t")
        lin = BiPoly([a, Poly([1], exact=True, var="t")])
        out = BiPoly([])
        for c in reversed(self.coeffs):
            out = out * lin + BiPoly([c])
        return out

    def __repr__(self):
        return f"BiPoly({[list(c.coeffs) for c in self.coeffs]!r})"

    def __str__(self):
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"({format_poly(c.coeffs, 't')}){mono}")
        return " + ".join(parts) if parts else "0"


def evaluate(p: Poly, z):
    """Horner evaluation; exact when ``p`` and ``z`` are rational."""
    if p.exact and _is_exact_scalar(z):
        acc = Fraction(0)
        z = Fraction(z)
    else:
        acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def derivative(p: Poly) -> Poly:
    return Poly([k * c for k, c in enumerate(p.coeffs)][1:], exact=p.exact, var=p.var)


# -- resultants ---------------------------------------------------------------

def _sylvester(p_coeffs: list, q_coeffs: list, zero) -> list[list]:
    m, n = len(p_coeffs) - 1, len(q_coeffs) - 1
    size = m + n
    rows = []
    hp = list(reversed(p_coeffs))
    hq = list(reversed(q_coeffs))
    for i in range(n):
        rows.append([zero] * i + hp + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + hq + [zero] * (size - n - 1 - i))
    return rows


def _bareiss_det(mat: list[list], one, div):
    """Fraction-free determinant; ``div`` must be an exact division."""
    m = [row[:] for row in mat]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                if mik:
                    num = pivot * row_i[j] - mik * row_k[j]
                else:
                    num = pivot * row_i[j]
                row_i[j] = div(num, prev) if num else num
        prev = pivot
    return m[n - 1][n - 1] * sign


def sylvester_resultant(p, q):
    """Res(p, q) as the determinant of the Sylvester matrix.

    Exact inputs (exact :class:`Poly` or :class:`BiPoly`) go through Bareiss
    elimination and give a Fraction or an exact Poly in t.  Float inputs use
    a pivoted LU determinant.
    """
    if isinstance(p, BiPoly) or isinstance(q, BiPoly):
        if not (isinstance(p, BiPoly) and isinstance(q, BiPoly)):
            raise TypeError("both arguments must be BiPoly")
        if p.is_zero() or q.is_zero():
            raise ValueError("resultant of the zero polynomial is undefined")
        zero = Poly([], exact=True, var="t")
        one = Poly([1], exact=True, var="t")
        if p.degree == 0 and q.degree == 0:
            return one
        mat = _sylvester(list(p.coeffs), list(q.coeffs), zero)
        return _bareiss_det(mat, one, lambda a, b: a.exact_div(b))
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    if p.exact != q.exact:
        raise TypeError("cannot mix exact and float polynomials implicitly")
    if p.exact:
        mat = _sylvester(list(p.coeffs), list(q.coeffs), Fraction(0))
        return _bareiss_det(mat, Fraction(1), lambda a, b: a / b)
    mat = _sylvester(list(p.coeffs), list(q.coeffs), 0j)
    if not mat:
        return 1 + 0j
    return complex(np.linalg.det(np.array(mat, dtype=complex)))


def discriminant(p):
    """(-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree
    if n < 2:
        raise ValueError(f"discriminant needs degree >= 2, got {n}")
    res = sylvester_resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    if isinstance(p, BiPoly):
        return (res * sign).exact_div(p.lc)
    return sign * res / p.lc


# -- root finding -------------------------------------------------------------

def _horner_with_derivative(cs: Sequence[complex], z: complex):
    p = cs[-1]
    dp = 0j
    for c in reversed(cs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _abs_scale(cs: Sequence[complex], z: complex) -> float:
    r = abs(z)
    acc = 0.0
    for c in reversed(cs):
        acc = acc * r + abs(c)
    return acc


def _cauchy_radius(cs: Sequence[complex]) -> float:
    """Unique positive root of |a_n| r^n = sum_{k<n} |a_k| r^k."""
    n = len(cs) - 1
    mags = [abs(c) for c in cs]
    an = mags[-1]
    # Fujiwara's bound is an upper bound on the Cauchy radius; Newton from above is monotone.
    r = 2 * max((mags[n - k] / an) ** (1.0 / k) for k in range(1, n + 1))
    if r == 0:
        return 0.0
    for _ in range(100):
        f = an * r ** n - sum(mags[k] * r ** k for k in range(n))
        df = n * an * r ** (n - 1) - sum(k * mags[k] * r ** (k - 1) for k in range(1, n))
        if df <= 0:
            break
        step = f / df
        r -= step
        if abs(step) <= 1e-14 * r:
            break
    return r


def _log2_abs(c: Fraction) -> float:
    return math.log2(abs(c.numerator)) - math.log2(c.denominator)


def _balanced_float(p: Poly) -> tuple[Poly, float]:
    """Float image of p(sigma u) / M with sigma, M powers of two.

    sigma is the geometric mean of the root moduli (rounded to a power of
    two) so that coefficients with ~1e300 spread still fit in a double.
    """
    cs = list(p.coeffs)
    low = next(k for k, c in enumerate(cs) if c != 0)
    n = len(cs) - 1
    shift = 0
    if n > low:
        shift = round((_log2_abs(cs[low]) - _log2_abs(cs[n])) / (n - low))
    sigma = Fraction(2) ** shift
    scaled = [c * sigma ** k for k, c in enumerate(cs)]
    top = max(_log2_abs(c) for c in scaled if c != 0)
    norm = Fraction(2) ** -round(top)
    return Poly([complex(float(c * norm)) for c in scaled], exact=False, var=p.var), float(sigma)


def find_roots(p: Poly, max_iter: int = 1000, tol: float = 1e-12, init: Sequence[complex] | None = None) -> list[complex]:
    """All roots of ``p`` with multiplicity (Aberth-Ehrlich + Newton polish).

    Starting points sit on the Cauchy-bound circle unless ``init`` supplies
    one guess per root (warm start for continuation).  Raises
    :class:`RootFindingError` when some root's relative residual
    ``|p(z)| / sum |a_k| |z|^k`` stays above ``tol``.
    """
    if p.degree < 1:
        raise ValueError("find_roots needs degree >= 1")
    if p.exact:
        scaled, sigma = _balanced_float(p)
        guess = None if init is None else [z / sigma for z in init]
        return [sigma * z for z in find_roots(scaled, max_iter, tol, guess)]
    cs = [complex(c) for c in p.coeffs]
    zeros = 0
    while cs[0] == 0:
        cs.pop(0)
        zeros += 1
    roots = [0j] * zeros
    n = len(cs) - 1
    if n == 0:
        return roots
    lead = cs[-1]
    cs = [c / lead for c in cs]
    if n == 1:
        return roots + [-cs[0]]

    if init is not None and zeros == 0 and len(init) == n and len(set(init)) == n:
        z = [complex(v) for v in init]
    else:
        radius = _cauchy_radius(cs)
        z = [radius * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    done = [False] * n
    for _ in range(max_iter):
        for k in range(n):
            if done[k]:
                continue
            pz, dpz = _horner_with_derivative(cs, z[k])
            if abs(pz) <= 4 * _EPS * _abs_scale(cs, z[k]):
                done[k] = True
                continue
            s = 0j
            for j in range(n):
                if j != k:
                    d = z[k] - z[j]
                    if d != 0:
                        s += 1 / d
            if dpz == 0:
                w = pz / (-(pz * s) if s != 0 else 1e-300)
            else:
                ratio = pz / dpz
                denom = 1 - ratio * s
                w = ratio / denom if denom != 0 else ratio
            z[k] -= w
            if abs(w) <= 2 * _EPS * abs(z[k]):
                done[k] = True
        if all(done):
            break

    # Newton polish, accepted only when it lowers the residual (double roots stall otherwise).
    for k in range(n):
        for _ in range(3):
            pz, dpz = _horner_with_derivative(cs, z[k])
            if dpz == 0 or pz == 0:
                break
            cand = z[k] - pz / dpz
            if abs(_horner_with_derivative(cs, cand)[0]) < abs(pz):
                z[k] = cand
            else:
                break

    bad = [zk for zk in z if abs(_horner_with_derivative(cs, zk)[0]) > tol * _abs_scale(cs, zk)]
    if bad:
        raise RootFindingError(f"{len(bad)} of {n} roots did not converge", roots + z)
    return roots + z


def relative_residual(p: Poly, z: complex) -> float:
    cs = [complex(c) for c in p.coeffs]
    scale = _abs_scale(cs, z)
    return abs(_horner_with_derivative(cs, z)[0]) / scale if scale else 0.0


def cluster_roots(roots: Sequence[complex], rel_radius: float = 1e-7) -> list[list[int]]:
    """Group indices of roots closer than ``rel_radius * (1 + |z|)``."""
    groups: list[list[int]] = []
    assigned = [-1] * len(roots)
    for i, zi in enumerate(roots):
        if assigned[i] >= 0:
            continue
        assigned[i] = len(groups)
        group = [i]
        stack = [i]
        while stack:
            a = stack.pop()
            for j, zj in enumerate(roots):
                if assigned[j] < 0 and abs(roots[a] - zj) <= rel_radius * (1 + abs(roots[a])):
                    assigned[j] = assigned[i]
                    group.append(j)
                    stack.append(j)
        groups.append(sorted(group))
    return groups


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd of two exact polynomials (Euclid over the rationals)."""
    if not (p.exact and q.exact):
        raise TypeError("poly_gcd needs exact polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, divmod(a, b)[1]
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lc * prod f_i^i with squarefree, coprime f_i."""
    if not p.exact:
        raise TypeError("squarefree_decomposition needs an exact polynomial")
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        if f.degree > 0:
            out.append((f.monic(), i))
        b = b.exact_div(f)
        c = d.exact_div(f)
        d = c - b.derivative()
        i += 1
    return out


def find_roots_exact(p: Poly, **kwargs) -> list[complex]:
    """Roots of an exact polynomial with multiplicity; repeated roots are split off exactly."""
    out = []
    for f, mult in squarefree_decomposition(p):
        out.extend(find_roots(f, **kwargs) * mult)
    return out


def real_roots_in_t(p: Poly, imag_tol: float = 1e-10, nonnegative: bool = False) -> list[float]:
    """Real roots of an exact polynomial, sorted, each listed once per multiplicity.

    Candidates come from :func:`find_roots` and are kept when their imaginary
    part is below ``imag_tol * max(1, |z|)``; simple real roots are then
    tightened by bisection on the exact sign of ``p``.
    """
    if not p.exact:
        raise TypeError("real_roots_in_t expects exact coefficients")
    if p.degree < 1:
        return []
    prim = p.exact_div(p.content())
    roots = find_roots(prim)
    out = []
    for z in roots:
        if abs(z.imag) <= imag_tol * max(1.0, abs(z)):
            out.append(_refine_real(prim, z.real))
    out.sort()
    if nonnegative:
        out = [r for r in out if r >= -imag_tol]
        out = [max(r, 0.0) for r in out]
    return out


def _refine_real(p: Poly, r: float) -> float:
    """Bisection on the exact sign of ``p`` around a float root estimate."""
    if r == 0.0:
        return 0.0
    width = 1e-9 * max(1.0, abs(r))
    lo, hi = Fraction(r - width), Fraction(r + width)
    flo, fhi = evaluate(p, lo), evaluate(p, hi)
    if flo == 0:
        return float(lo)
    if fhi == 0:
        return float(hi)
    if (flo > 0) == (fhi > 0):
        return r
    for _ in range(60):
        mid = (lo + hi) / 2
        fm = evaluate(p, mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= Fraction(abs(r)) * Fraction(1, 2 ** 55):
            break
    return float((lo + hi) / 2)
