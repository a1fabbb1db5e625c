"""Gauss-Hermite rules, tensor integration and Monte Carlo.

Oracles: numpy's independent ``hermgauss`` implementation, the moment
formula ``Gamma((k+1)/2)``, and closed-form Gaussian integrals.
"""
from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.polynomial.hermite import hermgauss

from h2v.errors import IntegrationError, RangeError
from h2v.evaluate import Alpha, normalized_table
from h2v.kernels import hermite_function_table
from h2v.quadrature import (
    MCConfig,
    gauss_hermite_rule,
    hermite_moment,
    integrate_mu_alpha,
    integrate_planar_R2,
    integrate_std_gaussian_C1,
    integrate_std_gaussian_C2,
    integrate_std_gaussian_C2_outer,
    mc_integrate_gaussian,
    mu_alpha_jacobian,
    mu_alpha_substitution,
    rule_to_csv,
)


def test_small_rules():
    r1 = gauss_hermite_rule(1)
    assert r1.nodes.tolist() == [0.0] and r1.weights[0] == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    r2 = gauss_hermite_rule(2)
    assert r2.nodes.tolist() == [-0.7071067811865476, 0.7071067811865476]
    assert r2.weights.tolist() == pytest.approx([math.sqrt(math.pi) / 2] * 2, rel=1e-15)
    assert r2.order == 2


@pytest.mark.parametrize("n", [3, 10, 33, 64, 128, 200])
def test_rule_matches_hermgauss(n):
    rule = gauss_hermite_rule(n)
    x, w = hermgauss(n)
    assert np.max(np.abs(rule.nodes - x)) < 1e-13 * max(1, np.abs(x).max())
    assert np.max(np.abs(rule.weights - w) / w) < 1e-11


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32, 64])
def test_moment_exactness(n):
    rule = gauss_hermite_rule(n)
    for k in range(2 * n):
        approx = rule.integrate(lambda x: x**k)
        scale = float(rule.weights @ np.abs(rule.nodes) ** k)
        assert abs(approx - hermite_moment(k)) <= 1e-12 * scale


def test_rule_symmetry_and_mass():
    for n in (5, 20, 101):
        rule = gauss_hermite_rule(n)
        assert np.array_equal(rule.nodes, -rule.nodes[::-1])
        assert np.array_equal(rule.weights, rule.weights[::-1])
        assert abs(rule.weights.sum() - math.sqrt(math.pi)) < 1e-13
        assert np.all(rule.weights > 0)


def test_eight_point_rule_fourteenth_moment():
    # (13)!! sqrt(pi) / 2^7
    exact_value = math.prod(range(1, 14, 2)) * math.sqrt(math.pi) / 2**7
    approx = gauss_hermite_rule(8).integrate(lambda x: x**14)
    assert approx == pytest.approx(exact_value, rel=1e-12)


@pytest.mark.parametrize("bad", [0, 201, -3, 2.5])
def test_rule_range(bad):
    with pytest.raises(RangeError):
        gauss_hermite_rule(bad)


def test_hermite_moment():
    assert hermite_moment(0) == pytest.approx(math.sqrt(math.pi))
    assert hermite_moment(3) == 0.0
    assert hermite_moment(2) == pytest.approx(math.sqrt(math.pi) / 2)
    assert hermite_moment(400) == math.inf


def test_c1_and_c2_examples():
    assert integrate_std_gaussian_C1(lambda u: np.ones_like(u), 4) == pytest.approx(1)
    assert integrate_std_gaussian_C1(lambda u: np.abs(u) ** 4, 4) == pytest.approx(2)
    assert integrate_std_gaussian_C2(lambda u1, u2: np.ones_like(u1), 4) == pytest.approx(1)
    assert integrate_std_gaussian_C2(lambda u1, u2: np.abs(u1) ** 2, 4) == pytest.approx(1)
    assert abs(integrate_std_gaussian_C2(lambda u1, u2: u1**2 * np.conj(u2), 4)) < 1e-15


def test_c2_trailing_axes_and_linearity():
    def f(u1, u2):
        return np.stack([np.abs(u1) ** 2, np.abs(u1 * u2) ** 2, u1], axis=-1)

    vals = integrate_std_gaussian_C2(f, 6)
    assert vals == pytest.approx([1, 1, 0], abs=1e-14)
    combo = integrate_std_gaussian_C2(lambda a, b: 2 * np.abs(a) ** 2 - 3j * np.abs(b) ** 4, 6)
    assert combo == pytest.approx(2 - 6j)


def test_c2_outer_matches_explicit_product():
    def f(u1, u2):
        return np.stack([u1, np.conj(u2), np.ones_like(u1)], axis=-1)

    def g(u1, u2):
        return np.stack([np.conj(u1), u2], axis=-1)

    outer = integrate_std_gaussian_C2_outer(f, g, 5)
    explicit = integrate_std_gaussian_C2(lambda a, b: f(a, b)[:, :, None] * g(a, b)[:, None, :], 5)
    assert np.allclose(outer, explicit, atol=1e-15)
    assert outer == pytest.approx(np.array([[1, 0], [0, 1], [0, 0]]), abs=1e-14)


def test_non_finite_integrand_raises():
    with pytest.raises(IntegrationError):
        integrate_std_gaussian_C2(lambda u1, u2: np.full(u1.shape, np.nan), 3)


def test_planar_examples():
    assert integrate_planar_R2(lambda r, s: np.exp(-r**2 - s**2), 10) == pytest.approx(math.pi)
    assert integrate_planar_R2(lambda r, s: r**2 * np.exp(-r**2 - s**2), 10) == pytest.approx(math.pi / 2)
    value = integrate_planar_R2(lambda r, s: np.exp(1j * r), 30, gaussian_factored=True)
    assert value == pytest.approx(math.pi * math.exp(-0.25), rel=1e-13)


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
def test_jacobian(alpha):
    assert mu_alpha_jacobian(alpha) == pytest.approx(4 * alpha / (1 - alpha) ** 2, rel=1e-13)


def test_substitution_maps_density_to_gaussian():
    # g_alpha(z(u)) = exp(Re(z1 z2) - |u|^2) pointwise
    a = Alpha(0.3)
    A = (1 + a.alpha**2) / (4 * a.alpha)
    B = (1 - a.alpha**2) / (4 * a.alpha)
    rng = np.random.default_rng(3)
    u1 = rng.normal(size=20) + 1j * rng.normal(size=20)
    u2 = rng.normal(size=20) + 1j * rng.normal(size=20)
    z1, z2 = mu_alpha_substitution(a, u1, u2)
    lhs = A * 2 * (z1 * z2).real - B * (np.abs(z1) ** 2 + np.abs(z2) ** 2)
    rhs = (z1 * z2).real - np.abs(u1) ** 2 - np.abs(u2) ** 2
    assert np.allclose(lhs, rhs, atol=1e-12)


@pytest.mark.parametrize("alpha", [0.25, 0.5])
def test_mu_alpha_hermite_function_examples(alpha):
    def f(z1, z2):
        h = hermite_function_table(1, 1, alpha, z1, z2)
        return np.stack([np.abs(h[0, 0]) ** 2, h[1, 0] * np.conj(h[0, 1])], axis=-1)

    vals = integrate_mu_alpha(f, alpha, 16)
    assert vals == pytest.approx([1, 0], abs=1e-12)


def test_mu_alpha_exponent_outer_shape():
    a = Alpha(0.5)

    def poly(z1, z2):
        return a.prefactor**2 * np.ones((z1.size, 2))

    def exponent(z1, z2):
        return np.stack([-(z1 * z2).real, -(z1 * z2).real + 0j], axis=-1)

    vals = integrate_mu_alpha(poly, a, 12, exponent=exponent)
    assert vals.shape == (2, 2)
    assert vals == pytest.approx(np.ones((2, 2)), abs=1e-12)


def test_monte_carlo_examples():
    value, err = mc_integrate_gaussian(lambda u: np.ones_like(u), 1, MCConfig(1000, seed=1))
    assert value == 1 and err == 0
    value, err = mc_integrate_gaussian(lambda u: np.abs(u) ** 2, 1, MCConfig(1_000_000, seed=7))
    assert abs(value - 1) <= 4 * err

    def h11(u):
        return np.abs(normalized_table(1, 1, u, np.conj(u), 1.0)[1, 1]) ** 2

    value, err = mc_integrate_gaussian(h11, 1, MCConfig(1_000_000, seed=11))
    assert abs(value - 1) <= 4 * err


def test_monte_carlo_is_deterministic_and_block_keyed():
    f = lambda u1, u2: u1 * np.conj(u2) + np.abs(u1) ** 2  # noqa: E731
    a = mc_integrate_gaussian(f, 2, MCConfig(5000, seed=42, block=1000))
    b = mc_integrate_gaussian(f, 2, MCConfig(5000, seed=42, block=1000))
    c = mc_integrate_gaussian(f, 2, MCConfig(5000, seed=43, block=1000))
    assert a == b and a != c
    with pytest.raises(RangeError):
        MCConfig(0)
    with pytest.raises(RangeError):
        mc_integrate_gaussian(f, 3, MCConfig(10))


def test_rule_csv():
    text = rule_to_csv(gauss_hermite_rule(2))
    assert text.splitlines() == [
        "node,weight",
        "-0.7071067811865476,0.886226925452758",
        "0.7071067811865476,0.886226925452758",
    ]
