"""Exact polynomial algebra: ring axioms, constructions and identities.

Independent oracles: sympy series expansion of the generating function,
sympy's 1D Hermite and generalized Laguerre polynomials, and a literal
brute-force quadruple sum for the binomial coefficient identity.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from h2v import exact
from h2v.exact import BiPoly, GaussianRational, I

# --- strategies ---------------------------------------------------------------

small_frac = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gaussian = st.builds(GaussianRational, small_frac, small_frac)


@st.composite
def bipolys(draw, max_deg=3, max_terms=4):
    terms = draw(st.lists(
        st.tuples(st.integers(0, max_deg), st.integers(0, max_deg), gaussian), max_size=max_terms))
    p = BiPoly.zero()
    for e1, e2, c in terms:
        p = p + BiPoly.monomial(e1, e2, c)
    return p


# --- GaussianRational -------------------------------------------------------------


def test_gaussian_rational_basic_arithmetic():
    a = GaussianRational(Fraction(1, 2), 3)
    b = GaussianRational(-1, Fraction(1, 3))
    assert a + b == GaussianRational(Fraction(-1, 2), Fraction(10, 3))
    assert a * b == GaussianRational(Fraction(-1, 2) - 1, Fraction(1, 6) - 3)
    assert (a / b) * b == a
    assert I * I == -1
    assert a.conjugate() == GaussianRational(Fraction(1, 2), -3)
    assert complex(a) == 0.5 + 3j


def test_gaussian_rational_parts_in_lowest_terms():
    g = GaussianRational(Fraction(2, 4), Fraction(3, 9))
    assert (g.re_num, g.re_den, g.im_num, g.im_den) == (1, 2, 1, 3)


def test_coerce_float_is_exact():
    g = GaussianRational.coerce(0.1 + 0.25j)
    assert g.re == Fraction(0.1) and g.im == Fraction(1, 4)


@pytest.mark.parametrize("k, expected", [(0, 1), (1, I), (2, -1), (3, -I), (4, 1), (-1, -I)])
def test_i_power(k, expected):
    assert GaussianRational.i_power(k) == expected


@given(gaussian, gaussian, gaussian)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b != 0:
        assert (a / b) * b == a


# --- BiPoly ring ----------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(bipolys(), bipolys(), bipolys())
def test_bipoly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == BiPoly.zero()
    assert p * BiPoly.const(1) == p


@settings(max_examples=60, deadline=None)
@given(bipolys(), bipolys(), gaussian, gaussian)
def test_evaluation_is_a_ring_homomorphism(p, q, z1, z2):
    assert (p * q)(z1, z2) == p(z1, z2) * q(z1, z2)
    assert (p + q)(z1, z2) == p(z1, z2) + q(z1, z2)


@settings(max_examples=60, deadline=None)
@given(bipolys(), bipolys())
def test_derivative_product_rule(p, q):
    for var in ("z1", "z2"):
        assert (p * q).diff(var) == p.diff(var) * q + p * q.diff(var)


@settings(max_examples=60, deadline=None)
@given(bipolys())
def test_json_round_trip(p):
    assert BiPoly.from_json(p.to_json()) == p


def test_graded_lex_order_in_serialization():
    p = BiPoly.monomial(0, 2) + BiPoly.monomial(1, 0) + BiPoly.const(3) + BiPoly.monomial(2, 0)
    keys = [(t["e1"], t["e2"]) for t in p.to_dict()["terms"]]
    assert keys == sorted(keys, key=lambda k: (k[0] + k[1], k))


def test_subst_rejects_nonlinear_forms():
    with pytest.raises(ValueError):
        exact.bipoly_subst_linear(BiPoly.x1(), BiPoly.x1() * BiPoly.x1(), BiPoly.x2())


# --- H_{m,n} constructions against sympy ----------------------------------------------

z1s, z2s, s_, t_ = sp.symbols("z1 z2 s t")


def _sympy_hermite(m: int, n: int) -> dict:
    """``m! n! [s^m t^n] exp(z1 s + z2 t - s t)`` via sympy series, as {(e1, e2): int}."""
    g = sp.exp(z1s * s_ + z2s * t_ - s_ * t_)
    coeff = sp.series(g, s_, 0, m + 1).removeO().coeff(s_, m)
    coeff = sp.series(coeff, t_, 0, n + 1).removeO().coeff(t_, n)
    poly = sp.Poly(sp.expand(coeff * factorial(m) * factorial(n)), z1s, z2s)
    return {k: int(v) for k, v in poly.as_dict().items()}


def _as_int_dict(p: BiPoly) -> dict:
    out = {}
    for key, c in p.items():
        assert c.im == 0 and c.re.denominator == 1
        out[key] = int(c.re)
    return out


@pytest.mark.parametrize("m", range(5))
@pytest.mark.parametrize("n", range(5))
def test_direct_matches_generating_function_series(m, n):
    assert _as_int_dict(exact.hermite_exact_direct(m, n)) == _sympy_hermite(m, n)


def test_routes_agree_and_have_integer_coefficients():
    for m in range(9):
        for n in range(9):
            d = exact.hermite_exact_direct(m, n)
            assert d == exact.hermite_exact_recurrence(m, n) == exact.hermite_exact_via_1d(m, n)
            _as_int_dict(d)


def test_small_cases_by_hand():
    assert exact.hermite_exact_direct(1, 1) == BiPoly.x1() * BiPoly.x2() - 1
    assert exact.hermite_exact_direct(0, 3) == BiPoly.monomial(0, 3)
    assert exact.hermite_exact_direct(-1, 2) == BiPoly.zero()


def test_swap_symmetry():
    for m in range(6):
        for n in range(6):
            assert exact.hermite_exact_direct(m, n).swap() == exact.hermite_exact_direct(n, m)


@pytest.mark.parametrize("n", range(9))
def test_hermite1d_matches_sympy(n):
    x = sp.symbols("x")
    ref = sp.Poly(sp.hermite(n, x), x).all_coeffs()[::-1]
    assert list(exact.hermite1d_exact(n)) == [Fraction(int(c)) for c in ref]


@pytest.mark.parametrize("n, k", [(0, 0), (1, 0), (3, 2), (5, 1), (4, 4)])
def test_laguerre_matches_sympy(n, k):
    x = sp.symbols("x")
    ref = sp.Poly(sp.assoc_laguerre(n, k, x), x).all_coeffs()[::-1]
    assert list(exact.laguerre_exact(n, k)) == [Fraction(sp.Rational(c).p, sp.Rational(c).q) for c in ref]


def test_natural_hermite_small_case():
    # H_{1,1} = z1 z2 - 1 becomes y1^2 + y2^2 - 1 under z = y1 +/- i y2
    expected = BiPoly.monomial(2, 0) + BiPoly.monomial(0, 2) - 1
    assert exact.natural_hermite_exact(1, 1) == expected


# --- identities -----------------------------------------------------------------------


def test_exp_weighted_derivative():
    e = exact.ExpWeightedPoly(BiPoly.const(1), -1).diff("z1")
    assert e.poly == -BiPoly.x2()
    with pytest.raises(ValueError):
        exact.ExpWeightedPoly(BiPoly.const(1), 2)


@pytest.mark.parametrize("m, n", [(0, 0), (1, 0), (2, 3), (4, 4), (6, 2)])
def test_rodrigues_and_ladders(m, n):
    assert exact.rodrigues_exact(m, n)
    assert exact.raising_lowering_exact(m, n)
    assert exact.check_natural_link(m, n)


@pytest.mark.parametrize("m, n", [(0, 0), (1, 2), (3, 3), (5, 2)])
def test_laguerre_identity(m, n):
    assert exact.laguerre_identity_exact(m, n)


def _brute_force_coefficient_sum(m, n, p, q):
    """The quadruple sum with both Kronecker deltas evaluated literally."""
    total = GaussianRational(0)
    for k in range(m + 1):
        for l in range(n + 1):
            for i in range(p + 1):
                for j in range(q + 1):
                    if k + l != i + j or n + m - k - l != q + p - i - j:
                        continue
                    c = comb(m, k) * comb(n, l) * comb(p, i) * comb(q, j) \
                        * factorial(k + l) * factorial(n + m - k - l)
                    unit = (I ** (m - k + q - j)) * ((-I) ** (n - l + p - i))
                    total = total + unit * c
    return total * GaussianRational(Fraction(1, 2 ** (q + p)))


@pytest.mark.parametrize("idx", [(0, 0, 0, 0), (1, 0, 0, 1), (2, 1, 2, 1), (3, 1, 2, 2), (2, 3, 1, 4), (3, 3, 3, 3)])
def test_coefficient_sum_matches_brute_force(idx):
    assert exact.coefficient_sum(*idx) == _brute_force_coefficient_sum(*idx)


def test_coefficient_identity_examples():
    assert exact.coefficient_sum(0, 0, 0, 0) == 1
    assert exact.coefficient_sum(1, 0, 0, 1) == 0
    assert exact.coefficient_sum(2, 1, 2, 1) == factorial(2)
    assert all(exact.coefficient_identity(m, n, p, q)
               for m in range(4) for n in range(4) for p in range(4) for q in range(4))
