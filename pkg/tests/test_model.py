from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import lams, rationals, zetas
from e2spec.model import (ModelParams, PoleError, Quantization, build_mathieu_limit, build_P, build_Q, build_R,
                          build_shifted, cn_coefficients, family, quantized_poly, recurrence_coefficient)
from e2spec.polynomials import Poly

E = Poly([0, 1], exact=True)
Ns = rationals(-4, 6)
parities = st.sampled_from(["even", "odd"])


def printed_P2(N, z, l):
    return (l ** 2 * z ** 4 + 2 * z ** 2 * (l - l * E + N * (l + N - 1)) + (E - 4) * E)


def printed_P3(N, z, l):
    return (-(l ** 3) * z ** 6 + l * z ** 4 * (l * (2 * l + 3 * E - 13) - 3 * N ** 2 - 3 * (l - 1) * N + 2)
            + (E - 16) * (E - 4) * E
            - z ** 2 * (3 * l * E * E + E * (2 * l ** 2 - 3 * N ** 2 - 3 * l * (N + 11) + 3 * N + 2)
                        + 32 * (l + N * (l + N - 1))))


def printed_Q3(N, z, l):
    return l ** 2 * z ** 4 + z ** 2 * (l * (15 - 2 * l - 2 * E) + N ** 2 + (l - 1) * N - 2) + (E - 16) * (E - 4)


def printed_Q4(N, z, l):
    return (-(l ** 3) * z ** 6 + l * z ** 4 * (8 + l * (8 * l + 3 * E - 38) - 2 * N ** 2 - 2 * (l - 1) * N)
            + (E - 36) * (E - 16) * (E - 4)
            + z ** 2 * (-8 * (-12 * l ** 2 + 69 * l + 5 * l * N + 5 * (N - 1) * N - 12))
            + z ** 2 * (-3 * l * E * E + 2 * E * ((47 - 4 * l) * l + N ** 2 + (l - 1) * N - 4)))


def test_lambda_minus_one_rejected():
    with pytest.raises(ValueError, match="-1"):
        ModelParams(2, Fraction(1, 2), -1)


def test_quantization_validation():
    with pytest.raises(ValueError):
        Quantization(0)
    with pytest.raises(ValueError):
        Quantization(2, "cos")
    q = Quantization(4, "odd")
    assert q.family == "Q" and q.n_levels == 3 and q.N(Fraction(1, 2)) == Fraction(11, 2)


@given(Ns, zetas, lams)
def test_printed_low_order_polynomials(N, z, l):
    p = ModelParams(N, z, l)
    P = build_P(p, 3)
    Q = build_Q(p, 4)
    assert P[0] == Poly([1]) and P[1] == E - l * z * z
    assert P[2] == printed_P2(N, z, l)
    assert P[3] == printed_P3(N, z, l)
    assert Q[0] == Poly([1]) and Q[1] == E - 4 - l * z * z
    assert Q[2] == printed_Q3(N, z, l)
    assert Q[3] == printed_Q4(N, z, l)


@given(Ns, zetas, lams, st.integers(1, 9))
def test_degree_and_monicity(N, z, l, n):
    p = ModelParams(N, z, l)
    for k, poly in enumerate(build_P(p, n)):
        assert poly.degree == k and poly.lc == 1
    for m, poly in enumerate(build_Q(p, n), start=1):
        assert poly.degree == m - 1 and poly.lc == 1


@given(st.integers(1, 6), zetas, lams, st.integers(1, 8))
def test_bracket_identity_under_quantization(nt, z, l, n):
    q = Quantization(nt)
    p = q.params(z, l)
    c = recurrence_coefficient(p, n, "odd" if n == 1 else "even")
    expected = 0 if n == 1 else (z * (1 + l)) ** 2 * (nt + n - 1) * (nt - n)
    assert c == expected


@pytest.mark.parametrize("parity", ["even", "odd"])
@pytest.mark.parametrize("nt", range(1, 7))
def test_factorization_exact(parity, nt):
    q = Quantization(nt, parity)
    for z, l in [(Fraction(1, 2), Fraction(1, 10)), (Fraction(3, 7), Fraction(-5, 3)), (Fraction(2), Fraction(7, 4))]:
        p = q.params(z, l)
        base = quantized_poly(q, z, l)
        full = build_P(p, nt + 3) if parity == "even" else build_Q(p, nt + 3)
        for ell, R in enumerate(build_R(q, p, 3), start=1):
            assert full[-4 + ell] == base * R


def test_build_R_requires_quantized_N():
    q = Quantization(3)
    with pytest.raises(ValueError, match="not quantized"):
        build_R(q, ModelParams(Fraction(5), Fraction(1, 2), Fraction(1, 3)), 2)


@given(st.integers(1, 6), parities, zetas, lams)
def test_collapse_identity(nt, parity, z, l):
    """Quantized Phi(E; zeta, lam) equals the lam-free shifted family at x = E - lam zeta^2, t = zhat^2."""
    q = Quantization(nt, parity)
    shifted = build_shifted(q, nt)[-1].at((z * (1 + l)) ** 2)
    assert quantized_poly(q, z, l) == shifted.compose_linear(-l * z * z)


@given(st.integers(1, 6), parities, st.floats(0.05, 2), st.floats(-0.9, 3))
def test_collapse_identity_float(nt, parity, z, l):
    q = Quantization(nt, parity)
    direct = quantized_poly(q, z, l)
    shifted = build_shifted(q, nt)[-1].at(complex(z * (1 + l)) ** 2).compose_linear(-l * z * z)
    scale = max(abs(c) for c in direct.coeffs)
    assert max(abs(a - b) for a, b in zip(direct.coeffs, shifted.coeffs)) <= 1e-12 * scale


@given(Ns.filter(lambda v: v not in (-1,)), zetas, lams, st.integers(1, 6))
def test_cn_closed_form(N, z, l, n):
    p = ModelParams(N, z, l)
    a = (1 + N + 2 * l) / (1 + l)
    poch = Fraction(1)
    for k in range(n - 1):
        poch *= a + k
    if N + l == 0 or poch == 0:
        with pytest.raises(PoleError):
            cn_coefficients(p, n)
        return
    cn = cn_coefficients(p, n)
    assert cn[0] == 1
    assert cn[n] == 1 / (z ** n * (N + l) * (1 + l) ** (n - 1) * poch)


def test_cn_zero_zeta_rejected():
    with pytest.raises(ValueError):
        cn_coefficients(ModelParams(2, 0, Fraction(1, 2)), 3)


def test_family_indexing():
    p = ModelParams(Fraction(3), Fraction(1, 2), Fraction(1, 3))
    assert family(p, "even", 3) == build_P(p, 2)
    assert family(p, "odd", 3) == build_Q(p, 3)


def test_mathieu_limit_matches_large_N():
    """The g-limit family is the N -> oo, zeta = g / N limit of the even recurrence."""
    g = 1.3
    lim = build_mathieu_limit(g, 5)
    near = build_P(ModelParams(1e7, g / 1e7, 0.0), 5)
    for a, b in zip(lim, near):
        assert max(abs(x - y) for x, y in zip(a.coeffs, b.coeffs)) < 1e-5 * max(abs(x) for x in a.coeffs)
    assert lim[2] == Poly([2 * g * g, -4, 1])
