"""Verification suites on reduced configurations, plus the documented examples."""
from __future__ import annotations

import cmath
import math
import warnings

import pytest

from h2v.errors import AccuracyWarning, DomainError
from h2v.kernels import hermite_function
from h2v import verify as V

SMALL = V.SuiteConfig(alpha_list=(0.5,), max_degree=3, nodes_per_axis=8, n_points=2)


def test_suite_config_validation():
    with pytest.raises(DomainError):
        V.SuiteConfig(alpha_list=(0.5, 1.0))
    with pytest.raises(DomainError):
        V.SuiteConfig(max_degree=6, nodes_per_axis=6)
    with pytest.raises(DomainError):
        V.SuiteConfig(max_degree=-1)
    assert V.SuiteConfig(tol_abs=1.0).tolerances(1e-9, 0.0) == (1.0, 0.0)


def test_unknown_suite_rejected():
    with pytest.raises(DomainError):
        V.run_suites(["bogus"], SMALL)


def test_identity_suite_small_caps():
    caps = {k: 3 for k in V.DEFAULT_CAPS}
    reports = V.identities_suite(V.SuiteConfig(identity_caps=caps))
    assert reports and all(r.passed for r in reports)
    assert len([r for r in reports if r.check_id == "identity_coefficient"]) == 4**4


def test_orthogonality_examples():
    gram, pairs = V.normalized_gram(0.5, 2, 8)
    i10, i01 = pairs.index((1, 0)), pairs.index((0, 1))
    assert gram[i10, i10] == pytest.approx(1, abs=1e-12)
    assert abs(gram[i10, i01]) < 1e-12
    raw = V.raw_orthogonality(0.5, 0, 0, 0, 0)
    assert raw.passed and raw.computed == pytest.approx(8, rel=1e-9)
    assert V.raw_orthogonality(0.5, 2, 1, 2, 1).reference == pytest.approx(8 * 3**3 * 2)


def test_hermite_function_orthonormality_examples():
    for alpha, (m, n, p, q), ref in [(0.5, (0, 0, 0, 0), 1), (0.25, (2, 1, 2, 1), 1), (0.75, (2, 1, 1, 2), 0)]:
        gram, pairs = V.hermite_function_gram(alpha, 3, 8)
        assert gram[pairs.index((m, n)), pairs.index((p, q))] == pytest.approx(ref, abs=1e-10)


def test_ito_examples():
    gram, pairs = V.ito_gram(4, 9)
    assert gram[pairs.index((1, 1)), pairs.index((1, 1))] == pytest.approx(1, abs=1e-12)
    assert abs(gram[pairs.index((2, 0)), pairs.index((0, 2))]) < 1e-12


def test_suites_pass_on_small_config():
    for name in ("orthogonality", "kernels"):
        reports = V.SUITES[name](SMALL)
        failed = [r for r in reports if r.gating and not r.passed]
        assert not failed, failed[:3]


def test_reproducing_examples():
    cfg = V.SuiteConfig()
    rep = V.reproducing_property_check(0.5, 0, 0, (0j, 0j), cfg)
    assert rep.passed and rep.computed == pytest.approx(math.sqrt(2) / 4, abs=1e-10)
    rep = V.reproducing_property_check(0.5, 1, 1, (2 + 0j, 0.5 + 0j), cfg)
    assert rep.passed and abs(rep.reference) < 1e-15
    rep = V.reproducing_property_check(0.25, 2, 1, (0.5 + 0j, -0.3j), cfg)
    assert rep.passed and rep.abs_err < 1e-8


def test_forward_and_composition_examples():
    cfg = V.SuiteConfig()
    assert V.bargmann_forward_check(0.5, 0, 0, (0j, 0j), cfg).computed == pytest.approx(1, abs=1e-10)
    assert V.bargmann_forward_check(0.5, 1, 0, (2 + 0j, 0j), cfg).computed == pytest.approx(2, abs=1e-10)
    assert V.bargmann_forward_check(0.5, 1, 1, (1 + 0j, 1 + 0j), cfg).computed == pytest.approx(1, abs=1e-10)
    assert V.kernel_A_composition_check(0.5, (0j, 0j), (0j, 0j), cfg).computed == pytest.approx(1, rel=1e-10)
    assert V.kernel_A_composition_check(0.5, (1, 0), (1, 0), cfg).computed == pytest.approx(math.e, rel=1e-10)
    rep = V.kernel_A_composition_check(0.5, (1, 0), (1j, 0), cfg)
    assert rep.passed and rep.computed == pytest.approx(cmath.exp(1j), rel=1e-10)


def test_inverse_examples_and_readings():
    cfg = V.SuiteConfig()
    rep = V.bargmann_inverse_roundtrip(0.5, 0, 0, (0j, 0j), cfg)
    assert rep.passed and rep.computed == pytest.approx(math.sqrt(2) / 4, abs=1e-12)
    rep = V.bargmann_inverse_roundtrip(0.5, 1, 0, (1, 1), cfg)
    assert rep.passed and rep.reference == pytest.approx(hermite_function(1, 0, 0.5, 1, 1).value)
    assert V.bargmann_inverse_roundtrip(0.5, 1, 1, (1, 1), cfg).abs_err < 1e-12
    half = V.bargmann_inverse_roundtrip(0.5, 0, 0, (0j, 0j), cfg, reading="half")
    assert not half.gating
    assert half.computed == pytest.approx(4 * math.sqrt(2) / 4)  # off by the factor 4 of the rescaling
    with pytest.raises(DomainError):
        V.inverse_values(0.5, 1, [(0, 0)], 8, reading="quarter")


def test_integral_representation_examples():
    assert V.integral_representation_check(0, 0, 0, 0).computed == pytest.approx(1, abs=1e-12)
    assert V.integral_representation_check(1, 1, 0, 0).computed == pytest.approx(-1, abs=1e-12)
    swapped, unswapped = V.integral_representation_reports(3, 2, 1 + 1j, 0.5)
    assert swapped.passed and swapped.gating
    assert not unswapped.passed and not unswapped.gating
    # m == n: both readings coincide
    a, b = V.integral_representation_reports(2, 2, 1 - 0.5j, 0.3j)
    assert a.passed and b.passed
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        V.integral_representation_check(0, 0, 5, 0)
    assert any(issubclass(w.category, AccuracyWarning) for w in caught)


def test_kernel_limit_origin_and_variables():
    assert V.kernel_limit_errors(1 - 2.0**-20, [(0j, 0j)], [(0j, 0j)])[0] < 1e-5
    u1, u2 = V.xi_to_u(0.3 + 0.1j, -0.2 + 0.4j)
    xi1 = (u1 - u2) / math.sqrt(2)
    xi2 = (u1.conjugate() + u2.conjugate()) / math.sqrt(2)
    assert xi1 == pytest.approx(0.3 + 0.1j) and xi2 == pytest.approx(-0.2 + 0.4j)


def test_kernel_limit_suite_structure():
    reports = V.kernel_limit_suite(SMALL)
    by_id = {r.check_id: r for r in reports}
    errs = by_id["kernel_limit"].details["max_error_by_k"]
    assert len(errs) == 10 and errs[-1] < errs[0]
    assert by_id["kernel_limit_monotone"].passed
    assert by_id["kernel_limit_rate"].passed
    assert by_id["kernel_limit_extrapolated"].passed


def test_bound_reports():
    assert V.bound_counterexample().passed
    assert V.bound_sweep(SMALL, samples=500, conjugate_slice=True).passed
    sweep = V.bound_sweep(SMALL, samples=500)
    assert not sweep.passed and sweep.details["first_violation"] is not None


def test_reports_are_deterministic():
    def strip(reports):
        return [{k: v for k, v in r.to_dict().items() if k != "runtime_ms"} for r in reports]

    a = V.limits_suite(SMALL)
    b = V.limits_suite(SMALL)
    assert strip(a) == strip(b)
    c = V.limits_suite(V.SuiteConfig(alpha_list=(0.5,), max_degree=3, nodes_per_axis=8, n_points=2, seed=1))
    assert strip(a) != strip(c)
