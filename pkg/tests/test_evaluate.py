"""Floating-point evaluation of H_{m,n} and its checks.

Oracles: exact Gaussian-rational evaluation of the polynomial (the
evaluation points are doubles, hence exact dyadic rationals), and closed
forms stated next to each test.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from h2v import exact
from h2v.errors import DomainError
from h2v.evaluate import (
    METHODS,
    Alpha,
    ComplexPoint,
    bound_check,
    eval_hermite,
    eval_hermite_normalized,
    generating_function_check,
    hermite_table,
    normalized_table,
    partial_generating_check,
    scaling_limit_check,
    tilde_limit_check,
)

RNG = np.random.default_rng(20240611)


def _exact_value(m, n, z1, z2) -> complex:
    return complex(exact.hermite_exact_direct(m, n)(complex(z1), complex(z2)))


def _condition(m, n, z1, z2) -> float:
    """``sum_k |c_k| |z1|^(m-k) |z2|^(n-k)``: the size of the terms being cancelled."""
    return sum(math.comb(m, k) * math.comb(n, k) * math.factorial(k)
               * abs(z1) ** (m - k) * abs(z2) ** (n - k) for k in range(min(m, n) + 1))


def _random_polydisc(count, radius):
    r = radius * np.sqrt(RNG.random((count, 2)))
    th = 2 * np.pi * RNG.random((count, 2))
    z = r * np.exp(1j * th)
    return z[:, 0], z[:, 1]


# --- domain types ---------------------------------------------------------------


def test_alpha_validation_and_derived_values():
    a = Alpha(0.5)
    assert a.lambda_sq == pytest.approx(1 / 3)
    assert a.prefactor == pytest.approx(0.5 / (2 * math.sqrt(0.5)))
    for bad in (0.0, 1.0, -0.1, 1.5, float("nan")):
        with pytest.raises(DomainError):
            Alpha(bad)


def test_complex_point_rejects_non_finite():
    assert ComplexPoint.make(1, 2j) == (1 + 0j, 2j)
    with pytest.raises(DomainError):
        ComplexPoint.make(float("inf"), 0)


def test_negative_degree_and_unknown_method_rejected():
    with pytest.raises(DomainError):
        eval_hermite(-1, 0, 0, 0)
    with pytest.raises(DomainError):
        eval_hermite(1, 1, 0, 0, "nope")


# --- values -------------------------------------------------------------------------


@pytest.mark.parametrize("method", ["direct", "recurrence", "hermite1d"])
def test_documented_values(method):
    assert eval_hermite(1, 1, 2, 3, method) == pytest.approx(5)
    assert eval_hermite(0, 0, 0.3, 0.2j, method) == pytest.approx(1)
    assert eval_hermite(2, 1, 1j, 1, method) == pytest.approx(-1 - 2j)


def test_hermite1d_route_is_exact():
    z1, z2 = _random_polydisc(60, 3.0)
    for m in range(11):
        for n in range(11):
            got = eval_hermite(m, n, z1, z2, "hermite1d")
            for k in range(0, 60, 7):
                ref = _exact_value(m, n, z1[k], z2[k])
                assert abs(got[k] - ref) <= 1e-13 * abs(ref) + 1e-300


@pytest.mark.parametrize("method", ["direct", "recurrence"])
def test_float_routes_against_exact_condition_scaled(method):
    z1, z2 = _random_polydisc(40, 3.0)
    for m in range(11):
        for n in range(11):
            got = eval_hermite(m, n, z1, z2, method)
            for k in range(0, 40, 5):
                ref = _exact_value(m, n, z1[k], z2[k])
                assert abs(got[k] - ref) <= 1e-13 * _condition(m, n, z1[k], z2[k])


def test_method_agreement_up_to_degree_15():
    z1, z2 = _random_polydisc(200, 3.0)
    for m in range(16):
        for n in range(16):
            ref = eval_hermite(m, n, z1, z2, "hermite1d")
            for method in ("direct", "recurrence"):
                got = eval_hermite(m, n, z1, z2, method)
                assert np.all(np.abs(got - ref) <= 1e-10 * np.abs(ref) + 1e-12)


def test_laguerre_diagonal_agrees_and_is_restricted():
    z = _random_polydisc(50, 3.0)[0]
    for m in range(8):
        for n in range(8):
            got = eval_hermite(m, n, z, np.conj(z), "laguerre_diagonal")
            ref = eval_hermite(m, n, z, np.conj(z), "hermite1d")
            assert np.all(np.abs(got - ref) <= 1e-10 * np.abs(ref) + 1e-12)
    with pytest.raises(DomainError):
        eval_hermite(1, 1, 1 + 1j, 1 + 1j, "laguerre_diagonal")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12),
       st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_conjugation_and_swap_symmetry(m, n, z1, z2):
    h = eval_hermite(m, n, z1, z2)
    scale = max(1.0, _condition(m, n, z1, z2))
    assert abs(eval_hermite(m, n, np.conj(z1), np.conj(z2)) - np.conj(h)) <= 1e-12 * scale
    assert abs(eval_hermite(n, m, z2, z1) - h) <= 1e-12 * scale


@pytest.mark.parametrize("m, n", [(0, 0), (2, 1), (3, 3), (5, 2), (4, 7)])
def test_polar_form_on_conjugate_slice(m, n):
    for r, th in [(0.5, 0.3), (1.7, -2.0), (2.9, 1.1)]:
        z = r * cmath.exp(1j * th)
        ref = sum(math.comb(m, k) * math.comb(n, k) * (-1) ** k * math.factorial(k) * r ** (m + n - 2 * k)
                  for k in range(min(m, n) + 1)) * cmath.exp(1j * th * (m - n))
        assert abs(eval_hermite(m, n, z, z.conjugate()) - ref) <= 1e-12 * max(1, _condition(m, n, z, z))


def test_table_matches_pointwise():
    tab = hermite_table(4, 5, 0.3 - 1j, 2.0)
    for m in range(5):
        for n in range(6):
            assert tab[m, n] == pytest.approx(_exact_value(m, n, 0.3 - 1j, 2.0), rel=1e-13, abs=1e-13)


# --- normalized polynomials ----------------------------------------------------


def test_normalized_high_degree_against_exact_rational():
    # alpha = 1/2: lambda^2 = 1/3, so H~_{60,60} = 3^-60 H_{60,60} / 60!
    z1, z2 = 0.5 + 0.25j, -0.75 + 0.5j
    h = exact.hermite_exact_direct(60, 60)(z1, z2)
    scale = Fraction(1, 3 ** 60 * math.factorial(60))
    ref = complex(h * exact.GaussianRational(scale))
    got = eval_hermite_normalized(60, 60, 0.5, z1, z2)
    assert abs(got - ref) <= 1e-12 * abs(ref)


def test_normalized_never_overflows():
    for alpha in (0.1, 0.5, 0.9):
        for z in (10 + 0j, 10j, 7 - 7j):
            tab = normalized_table(150, 150, z, -z, Alpha(alpha).lambda_)
            assert np.all(np.isfinite(tab))


# --- generating functions, bound, limits -------------------------------------------


def test_generating_function_examples():
    assert generating_function_check(0, 0, 0.3, 0.4, 5).passed
    rep = generating_function_check(0.5, 0.5, 1, 1, 25)
    assert rep.passed and rep.rel_err < 1e-12
    assert rep.details["tail_bound"] < 1e-13


def test_partial_generating_examples():
    rep = partial_generating_check("sum_over_m", 0.3, 1, 1, 2, 30)
    assert rep.passed and rep.reference == pytest.approx((2 - 0.3) * math.exp(0.3))
    rep = partial_generating_check("sum_over_m", -0.5, 2, 1j, 1, 30)
    assert rep.passed and rep.reference == pytest.approx(1.5 ** 2 * cmath.exp(-0.5j))
    assert partial_generating_check("sum_over_n", 0.4 - 0.2j, 3, 0.5 + 1j, -1, 30).passed
    with pytest.raises(DomainError):
        partial_generating_check("sideways", 0.1, 1, 0, 0)


def test_bound_check_examples():
    assert bound_check(0, 0, 2 + 1j, -3j).passed
    assert bound_check(1, 1, 0, 0).passed  # equality-adjacent: |-1| <= 1
    assert bound_check(5, 5, 1j, -1j).passed  # conjugate slice


def test_bound_fails_off_slice():
    # H_{1,0}(z1, z2) = z1 while the bound is exp(|z1| * 0) = 1
    rep = bound_check(1, 0, 3, 0)
    assert not rep.passed
    assert rep.abs_err == pytest.approx(math.log(3))


def test_scaling_limit_closed_form_and_examples():
    ts = [2.0 ** -k for k in range(1, 13)]
    rep = scaling_limit_check(1, 1, 1, 1, ts)
    assert rep.passed
    for t, e in zip(ts, rep.details["errors"]):
        assert abs(e - t * t) <= 1e-12
    assert all(e == 0 for e in scaling_limit_check(0, 0, 0.3, 0.7j).details["errors"])
    assert scaling_limit_check(3, 2, 1 + 1j, 2, [0.1, 0.01, 0.001]).passed
    with pytest.raises(DomainError):
        scaling_limit_check(1, 1, 1, 1, [0.5, 0.0])


def test_tilde_limit_examples():
    alphas = [1 - 2.0 ** -k for k in range(1, 11)]
    rep = tilde_limit_check(0, 0, 0.3, 0.1j, alphas)
    assert rep.passed and max(rep.details["residuals"]) < 1e-14
    # the 1/pi-scaled target misses the constant polynomial by 1 - 1/pi
    assert rep.details["residuals_with_inv_pi"][-1] == pytest.approx(1 - 1 / math.pi)
    rep = tilde_limit_check(1, 0, 1, 0, alphas)
    assert rep.passed and rep.details["residuals"][-1] < 1e-3
    assert tilde_limit_check(1, 1, 1, 1, alphas).passed
    with pytest.raises(DomainError):
        tilde_limit_check(1, 1, 1, 1, [0.5, 1.0])


def test_tilde_limit_first_step_can_increase():
    # documented non-monotone case: residual grows from alpha = 1/2 to 3/4
    rep = tilde_limit_check(3, 3, 1, 0, [1 - 2.0 ** -k for k in range(1, 11)])
    res = rep.details["residuals"]
    assert res[1] > res[0]
    assert all(b < a for a, b in zip(res[1:], res[2:]))
    assert not rep.passed


def test_methods_constant_lists_known_routes():
    assert set(METHODS) == {"direct", "recurrence", "hermite1d", "laguerre_diagonal"}
