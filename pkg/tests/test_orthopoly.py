import cmath
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import lams, rationals, zetas
from e2spec.model import ModelParams, Quantization, family
from e2spec.orthopoly import (SingularMeasureError, functional_L, gram_matrix, measure_weights, moments, norms_formula,
                              norms_product, weights_closed_form)
from e2spec.polynomials import Poly

parities = st.sampled_from(["even", "odd"])
Ns = rationals(-5, 7).filter(lambda v: v != 1)


@given(Ns, zetas, lams, parities)
def test_norms_two_methods_agree_exactly(N, z, l, parity):
    p = ModelParams(N, z, l)
    assume(N + l != 0)
    assert norms_product(p, parity, 8) == norms_formula(p, parity, 8)


def test_norms_pole_flagged():
    with pytest.raises(ZeroDivisionError):
        norms_formula(ModelParams(Fraction(1), Fraction(1, 2), Fraction(1, 3)), "odd", 3)


@given(zetas, lams)
def test_printed_norms_at_four_plus_three_lambda(z, l):
    zh2 = (z * (1 + l)) ** 2
    got = norms_product(ModelParams(4 + 3 * l, z, l), "even", 4)
    assert got[1:] == [-24 * zh2, 240 * zh2 ** 2, -1440 * zh2 ** 3, 0]


@given(zetas, lams)
def test_low_norms_at_first_quantizations(z, l):
    zh2 = (z * (1 + l)) ** 2
    assert norms_product(ModelParams(2 + l, z, l), "even", 1)[1] == -4 * zh2
    # norm of Q_2 (degree 1) with the three-level odd nodes, N = 3 + 2 lam
    assert norms_product(ModelParams(3 + 2 * l, z, l), "odd", 1)[1] == -4 * zh2
    assert norms_formula(ModelParams(3 + 2 * l, z, l), "odd", 1)[1] == -4 * zh2


@given(st.integers(1, 6), parities, zetas, lams)
def test_weak_orthogonality_vanishing(nt, parity, z, l):
    assume(not (nt == 1 and parity == "odd"))
    q = Quantization(nt, parity)
    norms = norms_product(q.params(z, l), parity, nt + 3)
    ell = q.n_levels
    assert all(v == 0 for v in norms[ell:])
    assert all(v != 0 for v in norms[:ell])


@given(rationals(-5, 5).filter(lambda v: v not in (1, Fraction(1, 3))), zetas, st.integers(1, 8))
def test_hermitian_line_positivity(N, z, n):
    l = 1 - 2 * N
    p = ModelParams(N, z, l)
    assert p.hermitian()
    for parity in ("even", "odd"):
        norms = norms_product(p, parity, n)
        assert all(v > 0 for v in norms[1:])
    poch = Fraction(1)
    for k in range(n):
        poch *= Fraction(1, 2) + k
    assert norms_product(p, "even", n)[n] == 2 ** (1 + 2 * n) * z ** (2 * n) * (N - 1) ** (2 * n) * poch ** 2


draws = st.tuples(st.floats(0.05, 1.2), st.floats(-0.8, 2.5))


@given(st.integers(1, 5), parities, draws)
@settings(max_examples=20)
def test_gram_property(nt, parity, zl):
    assume(not (nt == 1 and parity == "odd"))
    z, l = zl
    q = Quantization(nt, parity)
    try:
        m = measure_weights(q, z, l)
    except SingularMeasureError:
        return
    ell = q.n_levels
    G = gram_matrix(m)
    norms = norms_product(q.params(complex(z), complex(l)), parity, ell)
    closed = norms_formula(q.params(complex(z), complex(l)), parity, ell)
    for i in range(ell):
        assert abs(norms[i] - closed[i]) <= 1e-12 * max(1.0, abs(norms[i]))
        for j in range(ell):
            val = G[i][j]
            want = norms[i] if i == j else 0
            assert abs(val - want) <= 1e-9 * max(1.0, abs(norms[i]), abs(norms[j]))


@given(st.integers(1, 5), parities, draws)
@settings(max_examples=20)
def test_measure_invariants(nt, parity, zl):
    assume(not (nt == 1 and parity == "odd"))
    z, l = zl
    q = Quantization(nt, parity)
    try:
        m = measure_weights(q, z, l)
    except SingularMeasureError:
        return
    assert len(m.nodes) == q.n_levels
    assert abs(sum(m.weights) - 1) < 1e-10
    for phi in m.basis()[1:]:
        assert abs(functional_L(m, phi)) < 1e-10 * max(1.0, max(abs(c) for c in phi.coeffs))


@pytest.mark.parametrize("key", [("even", 2), ("odd", 3), ("even", 3)])
@pytest.mark.parametrize("z,l", [(0.5, 0.1), (0.5, 0.3), (0.3, 1.1), (0.7, 2.0), (0.4, -0.5)])
def test_closed_form_weights(key, z, l):
    q = Quantization(key[1], key[0])
    m = measure_weights(q, z, l)
    for node, w in weights_closed_form(q, z, l):
        k = min(range(len(m.nodes)), key=lambda k: abs(m.nodes[k] - node))
        assert abs(m.nodes[k] - node) < 1e-9 * (1 + abs(node))
        assert abs(m.weights[k] - w) < 1e-10


def test_quadratic_weight_values():
    m = measure_weights(Quantization(2), 0.5, 0.1)
    assert [w.real for w in m.weights] == pytest.approx([1.098684, -0.098684], abs=1e-6)


def test_small_zeta_limit():
    m = measure_weights(Quantization(2), 1e-6, 0.1)
    assert [w.real for w in m.weights] == pytest.approx([1, 0], abs=1e-9)


def test_singular_at_ep():
    with pytest.raises(SingularMeasureError):
        measure_weights(Quantization(2), 0.5, 1.0)


@given(st.floats(0.05, 1.0), st.floats(-0.8, 2.0))
@settings(max_examples=10)
def test_three_level_norm_chain(z, l):
    q = Quantization(3)
    try:
        m = measure_weights(q, z, l)
    except SingularMeasureError:
        return
    P = m.basis()
    zh2 = (z * (1 + l)) ** 2
    got = [functional_L(m, P[0] * P[0]), functional_L(m, P[1] * P[1]), functional_L(m, P[2] * P[2]),
           functional_L(m, P[1] * P[2])]
    G = gram_matrix(m)
    assert [G[0][0], G[1][1], G[2][2], G[1][2]] == pytest.approx(got, rel=1e-9, abs=1e-9)
    want = [1, -12 * zh2, 48 * zh2 ** 2, 0]
    for a, b in zip(got, want):
        assert abs(a - b) < 1e-9 * max(1, abs(b))


def _mu_P(z, l):
    a, t = l * z * z, (z * (1 + l)) ** 2
    return [1, a, a * a - 4 * t, a ** 3 - 12 * a * t - 16 * t,
            a ** 4 - 24 * a * a * t - 64 * a * t + 16 * t * t - 64 * t]


def _mu_Q(z, l):
    a, t = l * z * z, (z * (1 + l)) ** 2
    return [1, 4 + a, 16 - 4 * t + 8 * a + a * a,
            l ** 3 * z ** 6 - 12 * (l ** 3 + l ** 2 + l) * z ** 4 - 48 * (2 * l ** 2 + 3 * l + 2) * z ** 2 + 64]


@given(zetas, lams)
def test_moments_closed_forms_exact(z, l):
    assert moments(ModelParams(2 + l, z, l), "even", 4).values == _mu_P(z, l)
    assert moments(ModelParams(3 + 2 * l, z, l), "odd", 3).values == _mu_Q(z, l)


@given(st.integers(1, 5), parities, draws)
@settings(max_examples=20)
def test_moments_two_methods(nt, parity, zl):
    assume(not (nt == 1 and parity == "odd"))
    z, l = zl
    q = Quantization(nt, parity)
    try:
        w = moments(q, max_order=8, method="weights", zeta=z, lam=l)
    except SingularMeasureError:
        return
    r = moments(q, max_order=8, method="recurrence", zeta=complex(z), lam=complex(l))
    for a, b in zip(w.values, r.values):
        assert abs(a - b) <= 1e-9 * max(1.0, abs(b))


def test_moments_method_validation():
    with pytest.raises(ValueError):
        moments(Quantization(2), max_order=2, method="magic", zeta=0.5, lam=0.1)
    with pytest.raises(TypeError):
        moments(ModelParams(2, 0.5, 0.1), "even", method="weights")
    with pytest.raises(ValueError):
        moments(ModelParams(2, 0.5, 0.1))
    table = moments(ModelParams(Fraction(2), Fraction(1, 2), Fraction(0)), "even", 2)
    assert table.exact and table[0] == 1 and len(table) == 3
