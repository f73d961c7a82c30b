import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from e2spec.polynomials import (BiPoly, Poly, RootFindingError, cluster_roots, discriminant, find_roots,
                                find_roots_exact, poly_gcd, squarefree_decomposition,
                                format_poly, real_roots_in_t, relative_residual, sylvester_resultant)

small_ints = st.integers(-6, 6)
int_roots = st.lists(small_ints, min_size=1, max_size=6)


def product_discriminant(roots):
    out = 1
    for a, b in combinations(roots, 2):
        out *= (a - b) ** 2
    return out


def test_exact_float_mixing_is_rejected():
    with pytest.raises(TypeError):
        Poly([Fraction(1), 2]) + Poly([1.5])
    with pytest.raises(TypeError):
        Poly([1.5, 2.0], exact=True)


def test_divmod_and_exact_div():
    p = Poly.from_roots([1, 2, 3])
    q, r = divmod(p, Poly.from_roots([2]))
    assert r.is_zero() and q == Poly.from_roots([1, 3])
    with pytest.raises(ArithmeticError):
        p.exact_div(Poly([5, 1]))


def test_format_poly():
    assert format_poly([-36, 0, 103, 0, -1, 0, 1], "zhat") == "zhat^6 - zhat^4 + 103 zhat^2 - 36"
    assert format_poly([0, 1], "t") == "t"


@given(st.lists(small_ints, min_size=2, max_size=6))
def test_discriminant_matches_root_product(roots):
    assert discriminant(Poly.from_roots(roots)) == product_discriminant(roots)


def test_discriminant_of_cubic_example():
    # E (E - 4) (E - 16): (4 * 16 * 12)^2
    assert discriminant(Poly.from_roots([0, 4, 16])) == 589824


def test_discriminant_sign_convention_quadratic():
    a, b, c = 3, -5, 1
    assert discriminant(Poly([c, b, a])) == b * b - 4 * a * c


@given(int_roots, int_roots, int_roots)
def test_resultant_is_multiplicative(r1, r2, r3):
    p, q, s = (Poly.from_roots(r) for r in (r1, r2, r3))
    assert sylvester_resultant(p * q, s) == sylvester_resultant(p, s) * sylvester_resultant(q, s)


@given(int_roots, int_roots)
def test_resultant_is_root_product(r1, r2):
    expected = 1
    for a in r1:
        for b in r2:
            expected *= a - b
    assert sylvester_resultant(Poly.from_roots(r1), Poly.from_roots(r2)) == expected


def test_float_resultant_agrees_with_exact():
    p, q = Poly.from_roots([1, -2, 5]), Poly.from_roots([3, 0.5])
    exact = sylvester_resultant(Poly.from_roots([1, -2, 5]), Poly.from_roots([3, Fraction(1, 2)]))
    assert abs(sylvester_resultant(p.to_float(), q.to_float()) - float(exact)) < 1e-9 * abs(float(exact))


def test_bipoly_discriminant_in_t():
    # x^2 - t has discriminant 4 t
    x = BiPoly.x()
    t = Poly([0, 1], exact=True, var="t")
    d = discriminant(x * x - BiPoly([t]))
    assert d == Poly([0, 4], exact=True, var="t")


@given(st.lists(st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False), min_size=1, max_size=8))
def test_find_roots_recovers_separated_roots(roots):
    if len(roots) > 1 and min(abs(a - b) for a, b in combinations(roots, 2)) < 1e-2:
        return
    found = find_roots(Poly.from_roots(roots))
    for r in roots:
        assert min(abs(r - f) for f in found) < 1e-7 * (1 + abs(r))


def test_find_roots_residuals_and_multiplicity():
    p = Poly.from_roots([2, 2, -1, 3j, -3j])
    roots = find_roots(p)
    assert all(relative_residual(p, z) < 1e-12 for z in roots)
    clusters = cluster_roots(roots, 1e-6)
    assert sorted(len(c) for c in clusters) == [1, 1, 1, 2]


def test_find_roots_huge_exact_coefficients():
    p = Poly.from_roots([Fraction(2) ** 300, Fraction(1, 2 ** 200), 7])
    roots = sorted(find_roots(p), key=abs)
    assert math.isclose(roots[0].real, 2.0 ** -200, rel_tol=1e-10)
    assert math.isclose(roots[2].real, 2.0 ** 300, rel_tol=1e-10)


def test_find_roots_zero_roots_and_constants():
    with pytest.raises(ValueError):
        find_roots(Poly([5]))
    assert sorted(abs(z) for z in find_roots(Poly([0, 0, 1, 1]))) == pytest.approx([0, 0, 1])


def test_root_finding_error_keeps_iterates():
    with pytest.raises(RootFindingError) as info:
        find_roots(Poly.from_roots([1.0, 2.0, 3.0]), max_iter=1, tol=1e-300)
    assert len(info.value.roots) == 3


def test_real_roots_in_t():
    p = Poly.from_roots([Fraction(1, 3), 2, -5], var="t") * Poly([1, 0, 1], var="t")
    got = real_roots_in_t(p)
    assert got == pytest.approx([-5, 1 / 3, 2], abs=1e-14)
    assert real_roots_in_t(p, nonnegative=True) == pytest.approx([1 / 3, 2], abs=1e-14)


def test_numpy_cross_check():
    rng = np.random.default_rng(7)
    cs = rng.normal(size=9) + 1j * rng.normal(size=9)
    ours = np.sort_complex(np.array(find_roots(Poly(list(cs)))))
    ref = np.sort_complex(np.roots(cs[::-1]))
    assert np.max(np.abs(ours - ref)) < 1e-9


@given(st.lists(small_ints, min_size=1, max_size=7))
def test_squarefree_decomposition_rebuilds_polynomial(roots):
    p = Poly.from_roots([Fraction(r) for r in roots])
    rebuilt = Poly([1])
    for f, mult in squarefree_decomposition(p):
        assert poly_gcd(f, f.derivative()).degree == 0
        rebuilt = rebuilt * f ** mult
    assert rebuilt == p
    assert sorted(z.real for z in find_roots_exact(p)) == pytest.approx(sorted(roots), abs=1e-12)


def test_gcd():
    a = Poly.from_roots([Fraction(1), Fraction(2), Fraction(1, 3)])
    b = Poly.from_roots([Fraction(2), Fraction(1, 3), Fraction(5)])
    assert poly_gcd(a, b) == Poly.from_roots([Fraction(2), Fraction(1, 3)])
