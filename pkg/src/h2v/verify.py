"""End-to-end verification suites.

Each suite returns a list of :class:`~h2v.report.VerificationReport` in a
deterministic order.  Random spot-check points come from a Philox stream
keyed by ``(seed, suite tag)``, so every run with the same
:class:`SuiteConfig` produces identical reports (apart from timings).

Suites
------
identities
    Exact polynomial identities (three construction routes, Rodrigues,
    raising/lowering, the natural-variable link, Laguerre forms and the
    binomial coefficient identity behind orthogonality).
orthogonality
    Orthonormality of ``H~`` under the standard Gaussian after the change of
    variables, the raw weighted integral calibration, orthonormality of the
    Hermite functions in ``L^2(mu_alpha)``, and orthogonality on the
    conjugate slice ``z2 = conj(z1)``.
kernels
    Closed-form versus series kernels, the norm-sum identity, Hermitian
    symmetry, positive definiteness and the reproducing property.
bargmann
    The transform ``U`` on the Hermite functions, the composition identity
    for its kernel, the inverse ``W`` under both weight readings, and the
    Fourier-type integral representation of ``e^{-z1 z2} H_{m,n}``.
limits
    Scaling and ``alpha -> 1`` limits, the Bargmann-kernel limit, the
    growth bound and the generating functions.
"""
from __future__ import annotations

import cmath
import math
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import exact
from .errors import AccuracyWarning, DomainError
from .evaluate import (
    Alpha,
    bound_check,
    eval_hermite,
    generating_function_check,
    normalized_table,
    partial_generating_check,
    scaling_limit_check,
    tilde_limit_arguments,
    tilde_limit_check,
)
from .kernels import (
    bargmann_generating_truncated,
    bargmann_kernel_A,
    bargmann_kernel_B2,
    bargmann_truncated,
    hermite_function,
    kernel_closed,
    kernel_coefficients,
    kernel_gram_matrix,
    kernel_truncated,
    norm_sum_closed,
    norm_sum_truncated,
    phi_basis,
    phi_table,
    tilde_kernel_closed,
    tilde_kernel_truncated,
)
from .quadrature import (
    integrate_mu_alpha,
    integrate_planar_R2,
    integrate_std_gaussian_C1,
    integrate_std_gaussian_C2,
    integrate_std_gaussian_C2_outer,
    mu_alpha_jacobian,
    mu_alpha_substitution,
)
from .report import VerificationReport

__all__ = [
    "SuiteConfig",
    "DEFAULT_CAPS",
    "SUITES",
    "identities_suite",
    "orthogonality_suite",
    "hfunction_orthonormality",
    "ito_orthogonality",
    "raw_orthogonality",
    "kernels_suite",
    "reproducing_property_check",
    "bargmann_suite",
    "bargmann_forward_check",
    "kernel_A_composition_check",
    "bargmann_inverse_roundtrip",
    "integral_representation_check",
    "integral_representation_reports",
    "limits_suite",
    "kernel_limit_suite",
    "kernel_limit_errors",
    "bound_sweep",
    "bound_counterexample",
    "tilde_limit_points",
    "tilde_limit_tail",
    "xi_to_u",
    "run_suites",
]

DEFAULT_CAPS = {
    "hermite_routes": 12,
    "rodrigues": 8,
    "raising_lowering": 10,
    "natural_link": 8,
    "laguerre": 7,
    "coefficient": 5,
}


@dataclass
class SuiteConfig:
    """Parameters shared by all suites.

    Attributes
    ----------
    alpha_list : sequence of float
        Values of ``alpha`` in ``(0, 1)``.
    max_degree : int
        Largest total degree ``m + n`` in the orthogonality sweeps.
    nodes_per_axis : int
        Gauss-Hermite nodes per real axis for polynomial integrands; must be
        at least ``max_degree + 1`` for exactness.
    analytic_nodes : int
        Nodes per real axis for integrands that are polynomial times the
        exponential of a linear form (kernels, transforms).  Such integrands
        are entire, and Gauss-Hermite converges super-geometrically for them.
    integral_rep_nodes : int
        Nodes per axis for the planar integral representation.
    tol_rel, tol_abs : float or None
        Global tolerance overrides; ``None`` keeps each check's default.
    seed : int
        Seed for all randomized spot checks.
    n_points : int
        Random points per parameter cell in transform/kernel checks.
    identity_caps : dict
        Degree caps of the exact identity sweeps.
    """

    alpha_list: Sequence[float] = (0.25, 0.5, 0.75)
    max_degree: int = 5
    nodes_per_axis: int = 12
    analytic_nodes: int = 40
    integral_rep_nodes: int = 64
    tol_rel: float | None = None
    tol_abs: float | None = None
    seed: int = 0
    n_points: int = 4
    identity_caps: dict = field(default_factory=lambda: dict(DEFAULT_CAPS))

    def __post_init__(self):
        self.alpha_list = tuple(float(a) for a in self.alpha_list)
        for a in self.alpha_list:
            if not (0.0 < a < 1.0):
                raise DomainError(f"alpha must lie strictly inside (0, 1); got {a!r}")
        if self.max_degree < 0:
            raise DomainError("max_degree must be non-negative")
        if self.nodes_per_axis < self.max_degree + 1:
            raise DomainError(
                f"nodes_per_axis={self.nodes_per_axis} cannot integrate degree "
                f"{2 * self.max_degree} exactly; need at least {self.max_degree + 1}"
            )

    def tolerances(self, tol_abs: float, tol_rel: float) -> tuple[float, float]:
        """Apply the global overrides to a check's default tolerances."""
        return (
            tol_abs if self.tol_abs is None else self.tol_abs,
            tol_rel if self.tol_rel is None else self.tol_rel,
        )

    def rng(self, tag: str) -> np.random.Generator:
        key = [self.seed & 0xFFFFFFFFFFFFFFFF] + [ord(c) for c in tag]
        return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))


def _timed(fn: Callable, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, 1e3 * (time.perf_counter() - start)


def _disc(rng: np.random.Generator, radius: float, size: int) -> np.ndarray:
    """Uniform samples from the closed disc ``|z| <= radius``."""
    r = radius * np.sqrt(rng.random(size))
    theta = 2.0 * math.pi * rng.random(size)
    return r * np.exp(1j * theta)


def _points(rng: np.random.Generator, radius: float, count: int) -> list[tuple[complex, complex]]:
    """Random points of the polydisc ``|z1|, |z2| <= radius``."""
    z = _disc(rng, radius, 2 * count).reshape(count, 2)
    return [(complex(a), complex(b)) for a, b in z]


def _pairs_total(max_total: int) -> list[tuple[int, int]]:
    return [(m, d - m) for d in range(max_total + 1) for m in range(d + 1)]


def _pairs_box(max_each: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(max_each + 1) for n in range(max_each + 1)]


# --- identities -----------------------------------------------------------


def identities_suite(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Exact identities on the degree ranges in ``cfg.identity_caps``."""
    cfg = cfg or SuiteConfig()
    caps = cfg.identity_caps
    out: list[VerificationReport] = []

    def routes(m, n):
        d = exact.hermite_exact_direct(m, n)
        return d == exact.hermite_exact_recurrence(m, n) == exact.hermite_exact_via_1d(m, n)

    sweeps = [
        ("hermite_routes", "finite sum == ladder recurrence == 1D Hermite assembly", routes),
        ("rodrigues", "Rodrigues formula, partial forms and Leibniz consequence", exact.rodrigues_exact),
        ("raising_lowering", "raising and lowering operator identities", exact.raising_lowering_exact),
        ("natural_link", "substitution link between H and the natural polynomials", exact.check_natural_link),
        ("laguerre", "conjugate-slice Laguerre and 1D Hermite forms", exact.laguerre_identity_exact),
    ]
    for key, label, fn in sweeps:
        for m in range(caps[key] + 1):
            for n in range(caps[key] + 1):
                ok, ms = _timed(fn, m, n)
                out.append(VerificationReport.exact(f"identity_{key}", label, {"m": m, "n": n}, ok, ms))
    cap = caps["coefficient"]
    for m in range(cap + 1):
        for n in range(cap + 1):
            for p in range(cap + 1):
                for q in range(cap + 1):
                    ok, ms = _timed(exact.coefficient_identity, m, n, p, q)
                    out.append(VerificationReport.exact(
                        "identity_coefficient",
                        "binomial sum equals m! n! delta_mp delta_nq",
                        {"m": m, "n": n, "p": p, "q": q}, ok, ms,
                    ))
    return out


# --- orthogonality ----------------------------------------------------------


def _gram_reports(
    check_id: str, label: str, gram: np.ndarray, pairs: list, alpha: float | None,
    tol_abs: float, tol_rel: float, ms: float,
) -> list[VerificationReport]:
    out = []
    for i, (m, n) in enumerate(pairs):
        for j, (p, q) in enumerate(pairs):
            ref = 1.0 if i == j else 0.0
            inputs = {"m": m, "n": n, "p": p, "q": q}
            if alpha is not None:
                inputs["alpha"] = alpha
            out.append(VerificationReport.build(
                check_id, label, inputs, complex(gram[i, j]), ref,
                tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms / len(pairs) ** 2,
            ))
    return out


def normalized_gram(alpha: float, max_total: int, nodes: int) -> tuple[np.ndarray, list]:
    """Gram matrix of ``H~_{m,n}`` (``m + n <= max_total``) under the standard Gaussian.

    The polynomials are evaluated at the substituted arguments
    ``z(u)`` of :func:`~h2v.quadrature.mu_alpha_substitution`.
    """
    a = Alpha.coerce(alpha)
    pairs = _pairs_total(max_total)
    idx_m = np.array([m for m, _ in pairs])
    idx_n = np.array([n for _, n in pairs])

    def integrand(u1, u2):
        z1, z2 = mu_alpha_substitution(a, u1, u2)
        tab = normalized_table(max_total, max_total, z1, z2, a.lambda_)
        v = np.moveaxis(tab[idx_m, idx_n], 0, -1)  # (P, K)
        return v[:, :, None] * np.conj(v[:, None, :])

    return integrate_std_gaussian_C2(integrand, nodes), pairs


def orthogonality_suite(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Orthonormality of ``H~`` plus the raw weighted-integral calibration."""
    cfg = cfg or SuiteConfig()
    tol_abs, tol_rel = cfg.tolerances(1e-9, 0.0)
    out = []
    for alpha in cfg.alpha_list:
        (gram, pairs), ms = _timed(normalized_gram, alpha, cfg.max_degree, cfg.nodes_per_axis)
        out += _gram_reports(
            "orthogonality_normalized",
            "<H~_{m,n}, H~_{p,q}> under the standard Gaussian = delta delta",
            gram, pairs, alpha, tol_abs, tol_rel, ms,
        )
    for alpha in cfg.alpha_list:
        for idx in ((0, 0, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (2, 1, 2, 1)):
            out.append(raw_orthogonality(alpha, *idx, nodes=cfg.nodes_per_axis, cfg=cfg))
    out += hfunction_orthonormality(cfg)
    out += ito_orthogonality(cfg)
    return out


def raw_weight_exponent(alpha: float, z1, z2):
    """Log of the un-normalized orthogonality weight.

    ``-(1-alpha)/4 |conj(z2) + z1|^2 - (1/alpha - 1)/4 |conj(z2) - z1|^2``.
    """
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    return (-(1.0 - alpha) / 4.0 * np.abs(np.conj(z2) + z1) ** 2
            - (1.0 / alpha - 1.0) / 4.0 * np.abs(np.conj(z2) - z1) ** 2)


def raw_orthogonality(alpha: float, m: int, n: int, p: int, q: int, *, nodes: int = 12,
                      cfg: SuiteConfig | None = None) -> VerificationReport:
    """``int H_{m,n} conj(H_{p,q}) w(z) dz / pi^2`` against its closed form.

    The weight is evaluated literally at ``z(u)`` and the Gaussian factor is
    divided back out, so the calibration exercises both the weight formula
    and the Jacobian ``4 alpha / (1-alpha)^2``.  The reference is
    ``4 alpha/(1-alpha)^2 ((1+alpha)/(1-alpha))^(m+n) m! n! delta delta``.
    """
    cfg = cfg or SuiteConfig()
    a = Alpha.coerce(alpha)
    jac = mu_alpha_jacobian(a)
    dmax = max(m, n, p, q)

    def integrand(u1, u2):
        z1, z2 = mu_alpha_substitution(a, u1, u2)
        tab = normalized_table(dmax, dmax, z1, z2, 1.0)  # H / sqrt(i! j!)
        h_mn = tab[m, n] * math.sqrt(math.factorial(m) * math.factorial(n))
        h_pq = tab[p, q] * math.sqrt(math.factorial(p) * math.factorial(q))
        log_w = raw_weight_exponent(a.alpha, z1, z2) + np.abs(u1) ** 2 + np.abs(u2) ** 2
        return jac * h_mn * np.conj(h_pq) * np.exp(log_w)

    value, ms = _timed(integrate_std_gaussian_C2, integrand, max(nodes, m + n + 1, p + q + 1))
    ref = 0.0
    if (m, n) == (p, q):
        ref = (jac * ((1 + a.alpha) / (1 - a.alpha)) ** (m + n)
               * math.factorial(m) * math.factorial(n))
    tol_abs, tol_rel = cfg.tolerances(1e-9 * max(1.0, ref), 1e-9)
    return VerificationReport.build(
        "orthogonality_raw",
        "weighted integral of H_{m,n} conj(H_{p,q}) = 4a/(1-a)^2 ((1+a)/(1-a))^(m+n) m! n! delta delta",
        {"alpha": a.alpha, "m": m, "n": n, "p": p, "q": q}, value, ref,
        tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms,
    )


def hermite_function_gram(alpha: float, max_total: int, nodes: int) -> tuple[np.ndarray, list]:
    """Gram matrix of the Hermite functions in ``L^2(mu_alpha)``.

    ``h_{m,n} conj(h_{p,q}) = c^2 H~ conj(H~) e^{-Re(z1 z2)}``; the
    exponential is merged with the density factor before evaluation.
    """
    a = Alpha.coerce(alpha)
    pairs = _pairs_total(max_total)
    idx_m = np.array([m for m, _ in pairs])
    idx_n = np.array([n for _, n in pairs])

    def poly(z1, z2):
        tab = normalized_table(max_total, max_total, z1, z2, a.lambda_)
        v = np.moveaxis(tab[idx_m, idx_n], 0, -1)
        return a.prefactor**2 * v[:, :, None] * np.conj(v[:, None, :])

    def exponent(z1, z2):
        return -(z1 * z2).real

    return integrate_mu_alpha(poly, a, nodes, exponent=exponent), pairs


def hfunction_orthonormality(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """``<h_{m,n}, h_{p,q}>_{mu_alpha} = delta delta`` for ``m + n, p + q <= max_degree``."""
    cfg = cfg or SuiteConfig()
    tol_abs, tol_rel = cfg.tolerances(1e-9, 0.0)
    out = []
    for alpha in cfg.alpha_list:
        (gram, pairs), ms = _timed(hermite_function_gram, alpha, cfg.max_degree, cfg.nodes_per_axis)
        out += _gram_reports(
            "orthonormality_hermite_functions",
            "<h_{m,n}, h_{p,q}> in L2(mu_alpha) = delta delta",
            gram, pairs, alpha, tol_abs, tol_rel, ms,
        )
    return out


def ito_gram(max_total: int, nodes: int) -> tuple[np.ndarray, list]:
    """Gram matrix of ``H_{m,n}(u, conj u) / sqrt(m! n!)`` under ``e^{-|u|^2} du / pi``."""
    pairs = _pairs_total(max_total)
    idx_m = np.array([m for m, _ in pairs])
    idx_n = np.array([n for _, n in pairs])

    def integrand(u):
        tab = normalized_table(max_total, max_total, u, np.conj(u), 1.0)
        v = np.moveaxis(tab[idx_m, idx_n], 0, -1)
        return v[:, :, None] * np.conj(v[:, None, :])

    return integrate_std_gaussian_C1(integrand, nodes), pairs


def ito_orthogonality(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Orthonormality on the conjugate slice ``z2 = conj(z1)`` (one complex variable)."""
    cfg = cfg or SuiteConfig()
    tol_abs, tol_rel = cfg.tolerances(1e-9, 0.0)
    (gram, pairs), ms = _timed(ito_gram, cfg.max_degree, max(cfg.nodes_per_axis, 2 * cfg.max_degree + 1))
    return _gram_reports(
        "orthogonality_conjugate_slice",
        "<H_{m,n}(u,conj u), H_{p,q}(u,conj u)> / sqrt(m!n!p!q!) = delta delta",
        gram, pairs, None, tol_abs, tol_rel, ms,
    )


# --- kernels ------------------------------------------------------------------


def _geometric_origin_oracle(M: int) -> float:
    """``sum_{n <= M} (1/8)(1/9)^n``: the alpha = 1/2 kernel series at the origin.

    At ``z = w = 0`` only the diagonal terms ``h_{n,n}(0)`` survive, with
    ``|h_{n,n}(0)|^2 = (1/8) lam^(4n) = (1/8) 9^-n``.
    """
    return math.fsum(0.125 * 9.0 ** -k for k in range(M + 1))


def kernels_suite(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Kernel series, closed forms, symmetries and the reproducing property."""
    cfg = cfg or SuiteConfig()
    out: list[VerificationReport] = []
    M = 60
    # the norm sum converges like lambda^(2M); at alpha = 1/4 and |z| <= 2,
    # M = 60 leaves a tail near 3e-9, so it gets a longer truncation
    M_norm = 80

    # origin, alpha = 1/2: geometric-series oracle
    tol_abs, tol_rel = cfg.tolerances(0.0, 1e-12)
    geo = _geometric_origin_oracle(M)
    out.append(VerificationReport.build(
        "kernel_origin_closed", "closed kernel at the origin (alpha = 1/2) = 9/64",
        {"alpha": 0.5}, kernel_closed(0.5, 0, 0, 0, 0), 9 / 64, tol_abs=tol_abs, tol_rel=tol_rel,
    ))
    out.append(VerificationReport.build(
        "kernel_origin_series", "kernel series at the origin (alpha = 1/2) = geometric sum",
        {"alpha": 0.5, "M": M}, kernel_truncated(0.5, 0, 0, 0, 0, M), geo, tol_abs=tol_abs, tol_rel=tol_rel,
    ))
    out.append(VerificationReport.build(
        "norm_sum_origin", "norm sum at the origin (alpha = 1/2) = 9/64",
        {"alpha": 0.5}, norm_sum_closed(0.5, 0, 0), 9 / 64, tol_abs=tol_abs, tol_rel=tol_rel,
    ))

    rng = cfg.rng("kernels")
    for alpha in cfg.alpha_list:
        pts_z = _points(rng, 2.0, 50)
        pts_w = _points(rng, 2.0, 50)
        tol_abs, tol_rel = cfg.tolerances(0.0, 1e-8)
        for z, w in zip(pts_z, pts_w):
            val, ms = _timed(kernel_truncated, alpha, *z, *w, M)
            out.append(VerificationReport.build(
                "kernel_series", "truncated kernel series -> closed form",
                {"alpha": alpha, "z": z, "w": w, "M": M}, val, kernel_closed(alpha, *z, *w),
                tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms,
            ))
        tol_abs, tol_rel = cfg.tolerances(0.0, 1e-9)
        for z in pts_z:
            val, ms = _timed(norm_sum_truncated, alpha, *z, M_norm)
            out.append(VerificationReport.build(
                "norm_sum_series", "sum |h_{m,n}(z)|^2 -> closed norm sum",
                {"alpha": alpha, "z": z, "M": M_norm}, val, norm_sum_closed(alpha, *z),
                tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms,
            ))
        tol_abs, tol_rel = cfg.tolerances(0.0, 1e-10)
        for z, w in list(zip(pts_z, pts_w))[: cfg.n_points]:
            val, ms = _timed(tilde_kernel_truncated, alpha, *z, *w, 80)
            out.append(VerificationReport.build(
                "tilde_kernel_series", "sum H~(z) conj H~(w) -> closed tilde kernel",
                {"alpha": alpha, "z": z, "w": w, "M": 80}, val, tilde_kernel_closed(alpha, *z, *w),
                tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms,
            ))
        tol_abs, tol_rel = cfg.tolerances(1e-12, 1e-12)
        for z, w in list(zip(pts_z, pts_w))[: cfg.n_points]:
            for name, fn in (("kernel", kernel_closed), ("tilde_kernel", tilde_kernel_closed)):
                out.append(VerificationReport.build(
                    f"{name}_hermitian", "K(z; w) = conj K(w; z)",
                    {"alpha": alpha, "z": z, "w": w}, fn(alpha, *z, *w), np.conj(fn(alpha, *w, *z)),
                    tol_abs=tol_abs, tol_rel=tol_rel,
                ))
        pts6 = _points(rng, 2.0, 6)
        gram = kernel_gram_matrix(alpha, pts6)
        eig = np.linalg.eigvalsh(0.5 * (gram + gram.conj().T))
        floor = -1e-10 * float(np.trace(gram).real)
        out.append(VerificationReport(
            check_id="kernel_positive_definite",
            identity="Gram matrix of the kernel at 6 points is positive semidefinite",
            inputs={"alpha": alpha, "points": [list(map(lambda c: [c.real, c.imag], p)) for p in pts6]},
            computed=float(eig.min()), reference=floor,
            abs_err=max(0.0, floor - float(eig.min())), rel_err=max(0.0, floor - float(eig.min())),
            tol_abs=0.0, tol_rel=0.0, passed=bool(eig.min() >= floor),
        ))
        z, w = pts_z[0], pts_w[0]
        out.append(VerificationReport.build(
            "kernel_A_generating", "sum Phi(z) conj h(w) -> A(z, conj w)",
            {"alpha": alpha, "z": z, "w": w, "M": 40},
            bargmann_generating_truncated(alpha, *z, *w, 40),
            bargmann_kernel_A(alpha, *z, np.conj(w[0]), np.conj(w[1])),
            tol_abs=1e-9, tol_rel=1e-9,
        ))

    tol_abs, tol_rel = cfg.tolerances(0.0, 1e-10)
    for z, w in zip(_points(rng, 2.0, cfg.n_points), _points(rng, 2.0, cfg.n_points)):
        out.append(VerificationReport.build(
            "bargmann_kernel_series", "sum Phi(z) conj Phi(w) -> exp(z1 conj w1 + z2 conj w2)",
            {"z": z, "w": w, "M": 40}, bargmann_truncated(*z, *w, 40), bargmann_kernel_B2(*z, *w),
            tol_abs=tol_abs, tol_rel=tol_rel,
        ))

    out += reproducing_suite(cfg)
    return out


def reproducing_values(alpha: float, max_each: int, points: Sequence[tuple[complex, complex]], nodes: int):
    """``int h_{m,n}(z) K(w; z) dmu_alpha(z)`` for all ``m, n <= max_each`` and each ``w``.

    ``K(w; z) = conj K(z; w)`` is the kernel with the integration variable
    in the second slot; in the integrand it is merged with the ``e^{-z1 z2/2}``
    of ``h`` and the measure density before exponentiation.

    Returns an array of shape ``(len(pairs), len(points))`` and the pairs.
    """
    a = Alpha.coerce(alpha)
    A, B = kernel_coefficients(a)
    pairs = _pairs_box(max_each)
    idx_m = np.array([m for m, _ in pairs])
    idx_n = np.array([n for _, n in pairs])
    w = np.asarray(points, dtype=complex).reshape(-1, 2)
    pre = math.log((1 - a.alpha**2) ** 2 / (16 * a.alpha**2))

    def poly(z1, z2):
        tab = normalized_table(max_each, max_each, z1, z2, a.lambda_)
        return a.prefactor * np.moveaxis(tab[idx_m, idx_n], 0, -1)

    def exponent(z1, z2):
        zb1, zb2 = np.conj(z1)[:, None], np.conj(z2)[:, None]
        w1, w2 = w[None, :, 0], w[None, :, 1]
        return (-0.5 * (z1 * z2)[:, None] - A * (w1 * w2 + zb1 * zb2)
                + B * (w1 * zb1 + w2 * zb2) + pre)

    return integrate_mu_alpha(poly, a, nodes, exponent=exponent), pairs


def reproducing_property_check(alpha: float, m: int, n: int, w: tuple[complex, complex],
                               cfg: SuiteConfig | None = None) -> VerificationReport:
    """``<h_{m,n}, K(w; .)>_{mu_alpha} = h_{m,n}(w)`` at a single point."""
    cfg = cfg or SuiteConfig()
    vals, pairs = reproducing_values(alpha, max(m, n), [w], cfg.analytic_nodes)
    value = vals[pairs.index((m, n)), 0]
    tol_abs, tol_rel = cfg.tolerances(1e-8, 0.0)
    return VerificationReport.build(
        "reproducing", "int h_{m,n}(z) K(w; z) dmu_alpha(z) = h_{m,n}(w)",
        {"alpha": alpha, "m": m, "n": n, "w": w}, complex(value),
        hermite_function(m, n, alpha, *w).value, tol_abs=tol_abs, tol_rel=tol_rel,
    )


def _reproducing_points(cfg: SuiteConfig, rng) -> list[tuple[complex, complex]]:
    fixed = [(0j, 0j), (1 + 0j, 1 + 0j), (0.5 + 0j, -0.3j), (1.5 + 0j, 0j)]
    return fixed + _points(rng, 1.5, cfg.n_points)


def reproducing_suite(cfg: SuiteConfig | None = None, max_each: int = 4) -> list[VerificationReport]:
    """Reproducing property for ``m, n <= max_each`` and points in ``|w1|, |w2| <= 1.5``."""
    cfg = cfg or SuiteConfig()
    rng = cfg.rng("reproducing")
    tol_abs, tol_rel = cfg.tolerances(1e-8, 0.0)
    out = []
    for alpha in cfg.alpha_list:
        pts = _reproducing_points(cfg, rng)
        (vals, pairs), ms = _timed(reproducing_values, alpha, max_each, pts, cfg.analytic_nodes)
        for k, (m, n) in enumerate(pairs):
            for j, w in enumerate(pts):
                out.append(VerificationReport.build(
                    "reproducing", "int h_{m,n}(z) K(w; z) dmu_alpha(z) = h_{m,n}(w)",
                    {"alpha": alpha, "m": m, "n": n, "w": w}, complex(vals[k, j]),
                    hermite_function(m, n, alpha, *w).value,
                    tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms / vals.size,
                ))
    return out


# --- Bargmann transform -----------------------------------------------------------


def bargmann_forward_values(alpha: float, max_each: int, points, nodes: int):
    """``(U h_{m,n})(z) = int A(z, conj w) h_{m,n}(w) dmu_alpha(w)`` for a batch of ``z``."""
    a = Alpha.coerce(alpha)
    pairs = _pairs_box(max_each)
    idx_m = np.array([m for m, _ in pairs])
    idx_n = np.array([n for _, n in pairs])
    z = np.asarray(points, dtype=complex).reshape(-1, 2)
    lam = a.lambda_

    def poly(w1, w2):
        tab = normalized_table(max_each, max_each, w1, w2, lam)
        return a.prefactor**2 * np.moveaxis(tab[idx_m, idx_n], 0, -1)

    def exponent(w1, w2):
        wb1, wb2 = np.conj(w1)[:, None], np.conj(w2)[:, None]
        z1, z2 = z[None, :, 0], z[None, :, 1]
        # A(z, conj w) e^{-w1 w2 / 2} without the constant prefactor
        return (-0.5 * wb1 * wb2 + lam * (z1 * wb1 + z2 * wb2) - a.lambda_sq * z1 * z2
                - 0.5 * (w1 * w2)[:, None])

    return integrate_mu_alpha(poly, a, nodes, exponent=exponent), pairs


def bargmann_forward_check(alpha: float, m: int, n: int, z: tuple[complex, complex],
                           cfg: SuiteConfig | None = None) -> VerificationReport:
    """``(U h_{m,n})(z) = Phi_{m,n}(z)``."""
    cfg = cfg or SuiteConfig()
    vals, pairs = bargmann_forward_values(alpha, max(m, n), [z], cfg.analytic_nodes)
    tol_abs, tol_rel = cfg.tolerances(1e-8, 0.0)
    return VerificationReport.build(
        "bargmann_forward", "(U h_{m,n})(z) = Phi_{m,n}(z)",
        {"alpha": alpha, "m": m, "n": n, "z": z}, complex(vals[pairs.index((m, n)), 0]),
        phi_basis(m, n, *z), tol_abs=tol_abs, tol_rel=tol_rel,
    )


def composition_values(alpha: float, zs, ws, nodes: int) -> np.ndarray:
    """``int A(w; conj u, conj v) conj A(z; conj u, conj v) dmu_alpha(u, v)`` for pairs ``(z_k, w_k)``."""
    a = Alpha.coerce(alpha)
    z = np.asarray(zs, dtype=complex).reshape(-1, 2)
    w = np.asarray(ws, dtype=complex).reshape(-1, 2)
    lam = a.lambda_

    def poly(u, v):
        return np.full(u.shape, a.prefactor**2, dtype=complex)

    def exponent(u, v):
        ub, vb = np.conj(u)[:, None], np.conj(v)[:, None]
        uu, vv = u[:, None], v[:, None]
        w1, w2 = w[None, :, 0], w[None, :, 1]
        zb1, zb2 = np.conj(z[None, :, 0]), np.conj(z[None, :, 1])
        first = -0.5 * ub * vb + lam * (w1 * ub + w2 * vb) - a.lambda_sq * w1 * w2
        second = -0.5 * uu * vv + lam * (zb1 * uu + zb2 * vv) - a.lambda_sq * zb1 * zb2
        return first + second

    return integrate_mu_alpha(poly, a, nodes, exponent=exponent)


def kernel_A_composition_check(alpha: float, z, w, cfg: SuiteConfig | None = None) -> VerificationReport:
    """``int A(w; .) conj A(z; .) dmu_alpha = exp(w1 conj z1 + w2 conj z2)``."""
    cfg = cfg or SuiteConfig()
    val = composition_values(alpha, [z], [w], cfg.analytic_nodes)[0]
    tol_abs, tol_rel = cfg.tolerances(0.0, 1e-7)
    return VerificationReport.build(
        "bargmann_composition", "int A(w; .) conj A(z; .) dmu_alpha = exp(w . conj z)",
        {"alpha": alpha, "z": z, "w": w}, complex(val), bargmann_kernel_B2(*w, *z),
        tol_abs=tol_abs, tol_rel=tol_rel,
    )


def inverse_values(alpha: float, max_each: int, points, nodes: int, reading: str = "full"):
    """``(W Phi_{m,n})(p) = int conj A(z; conj p) Phi_{m,n}(z) dnu(z)`` for a batch of ``p``.

    ``reading="full"`` uses ``dnu = e^{-|z|^2} dz / pi^2``;
    ``reading="half"`` uses ``e^{-|z|^2 / 2} dz / pi^2``, handled by
    ``z = sqrt(2) u`` (real Jacobian 4).
    """
    a = Alpha.coerce(alpha)
    pairs = _pairs_box(max_each)
    idx_m = np.array([m for m, _ in pairs])
    idx_n = np.array([n for _, n in pairs])
    p = np.asarray(points, dtype=complex).reshape(-1, 2)
    lam = a.lambda_
    if reading == "full":
        scale, jac = 1.0, 1.0
    elif reading == "half":
        scale, jac = math.sqrt(2.0), 4.0
    else:
        raise DomainError("reading must be 'full' or 'half'")

    def basis(u1, u2):
        ph = phi_table(max_each, max_each, scale * u1, scale * u2)
        return jac * np.moveaxis(ph[idx_m, idx_n], 0, -1)  # (P, K)

    def kernel(u1, u2):
        zb1, zb2 = np.conj(scale * u1)[:, None], np.conj(scale * u2)[:, None]
        p1, p2 = p[None, :, 0], p[None, :, 1]
        return a.prefactor * np.exp(-0.5 * p1 * p2 + lam * (zb1 * p1 + zb2 * p2) - a.lambda_sq * zb1 * zb2)

    return integrate_std_gaussian_C2_outer(basis, kernel, nodes), pairs


def bargmann_inverse_roundtrip(alpha: float, m: int, n: int, p, cfg: SuiteConfig | None = None,
                               reading: str = "full") -> VerificationReport:
    """``(W Phi_{m,n})(p) = h_{m,n}(p)``; only the full-Gaussian reading is gating."""
    cfg = cfg or SuiteConfig()
    vals, pairs = inverse_values(alpha, max(m, n), [p], cfg.analytic_nodes, reading)
    return _inverse_report(alpha, m, n, p, complex(vals[pairs.index((m, n)), 0]), reading, cfg)


def _inverse_report(alpha, m, n, p, value, reading, cfg, ms=0.0) -> VerificationReport:
    tol_abs, tol_rel = cfg.tolerances(1e-7, 0.0)
    rep = VerificationReport.build(
        f"bargmann_inverse_{reading}",
        "(W Phi_{m,n})(p) = h_{m,n}(p), weight "
        + ("exp(-|z|^2)" if reading == "full" else "exp(-|z|^2/2)"),
        {"alpha": alpha, "m": m, "n": n, "p": p, "reading": reading}, value,
        hermite_function(m, n, alpha, *p).value, tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms,
    )
    if reading != "full":
        rep.gating = False
    return rep


def integral_representation_reports(m: int, n: int, z1: complex, z2: complex,
                                    cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Planar integral representation of ``e^{-z1 z2} H``, with both index orders.

    With ``w = r + i s``,
    ``(1/(pi i^(m+n))) int_{R^2} w^m conj(w)^n exp(-|w|^2 + i z1 w + i z2 conj w) dr ds``
    equals ``e^{-z1 z2} H_{n,m}(z1, z2) = e^{-z1 z2} H_{m,n}(z2, z1)``: from
    ``int exp(-|w|^2 + A w + B conj w) dr ds = pi e^{AB}``, each factor ``w``
    is a derivative in ``A`` and therefore lands on the power of ``B``
    (that is, of ``z2``).  The first report (gating) checks that identity.
    The second, informational report compares the same integral with the
    unswapped ``e^{-z1 z2} H_{m,n}(z1, z2)``, which agrees only when
    ``m == n``.  Warns with :class:`AccuracyWarning` when ``|z1|`` or
    ``|z2|`` exceeds 4, where the fixed rule loses accuracy.
    """
    cfg = cfg or SuiteConfig()
    z1, z2 = complex(z1), complex(z2)
    if abs(z1) > 4 or abs(z2) > 4:
        warnings.warn("integral representation is only validated for |z1|, |z2| <= 4", AccuracyWarning)

    def g(r, s):
        w = r + 1j * s
        wb = r - 1j * s
        return w**m * wb**n * np.exp(1j * z1 * w + 1j * z2 * wb)

    start = time.perf_counter()
    integral = integrate_planar_R2(g, cfg.integral_rep_nodes, gaussian_factored=True)
    value = integral / (math.pi * 1j ** (m + n))
    ms = 1e3 * (time.perf_counter() - start)
    damp = cmath.exp(-z1 * z2)
    tol_abs, tol_rel = cfg.tolerances(1e-6, 0.0)
    inputs = {"m": m, "n": n, "z1": z1, "z2": z2, "nodes": cfg.integral_rep_nodes}
    gating = VerificationReport.build(
        "integral_representation",
        "planar Fourier-type integral of w^m conj(w)^n = exp(-z1 z2) H_{m,n}(z2, z1)",
        inputs, value, damp * eval_hermite(m, n, z2, z1, "hermite1d"),
        tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms,
    )
    unswapped = VerificationReport.build(
        "integral_representation_unswapped",
        "planar Fourier-type integral of w^m conj(w)^n vs exp(-z1 z2) H_{m,n}(z1, z2)",
        inputs, value, damp * eval_hermite(m, n, z1, z2, "hermite1d"),
        tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms,
    )
    unswapped.gating = False
    return [gating, unswapped]


def integral_representation_check(m: int, n: int, z1: complex, z2: complex,
                                  cfg: SuiteConfig | None = None) -> VerificationReport:
    """Gating report of :func:`integral_representation_reports`."""
    return integral_representation_reports(m, n, z1, z2, cfg)[0]


def bargmann_suite(cfg: SuiteConfig | None = None, max_each: int = 4) -> list[VerificationReport]:
    """Forward transform, kernel composition, inverse (both readings), integral representation."""
    cfg = cfg or SuiteConfig()
    rng = cfg.rng("bargmann")
    out: list[VerificationReport] = []
    fixed = [(0j, 0j), (2 + 0j, 0j), (1 + 0j, 1 + 0j)]
    for alpha in cfg.alpha_list:
        pts = fixed + _points(rng, 2.0, cfg.n_points)
        (vals, pairs), ms = _timed(bargmann_forward_values, alpha, max_each, pts, cfg.analytic_nodes)
        tol_abs, tol_rel = cfg.tolerances(1e-8, 0.0)
        for k, (m, n) in enumerate(pairs):
            for j, z in enumerate(pts):
                out.append(VerificationReport.build(
                    "bargmann_forward", "(U h_{m,n})(z) = Phi_{m,n}(z)",
                    {"alpha": alpha, "m": m, "n": n, "z": z}, complex(vals[k, j]), phi_basis(m, n, *z),
                    tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms / vals.size,
                ))
        zs = [(0j, 0j), (1 + 0j, 0j), (1 + 0j, 0j)] + _points(rng, 2.0, cfg.n_points)
        ws = [(0j, 0j), (1 + 0j, 0j), (1j, 0j)] + _points(rng, 2.0, cfg.n_points)
        vals, ms = _timed(composition_values, alpha, zs, ws, cfg.analytic_nodes)
        tol_abs, tol_rel = cfg.tolerances(0.0, 1e-7)
        for j, (z, w) in enumerate(zip(zs, ws)):
            out.append(VerificationReport.build(
                "bargmann_composition", "int A(w; .) conj A(z; .) dmu_alpha = exp(w . conj z)",
                {"alpha": alpha, "z": z, "w": w}, complex(vals[j]), bargmann_kernel_B2(*w, *z),
                tol_abs=tol_abs, tol_rel=tol_rel, runtime_ms=ms / len(zs),
            ))
        ps = fixed + _points(rng, 2.0, cfg.n_points)
        for reading in ("full", "half"):
            (vals, pairs), ms = _timed(inverse_values, alpha, max_each, ps, cfg.analytic_nodes, reading)
            for k, (m, n) in enumerate(pairs):
                for j, p in enumerate(ps):
                    out.append(_inverse_report(alpha, m, n, p, complex(vals[k, j]), reading, cfg,
                                               ms / vals.size))
    fixed_z = [(0j, 0j), (1 + 1j, 0.5 + 0j), (2 + 0j, -2j)]
    for z in fixed_z + _points(rng, 2.0, cfg.n_points):
        for m in range(7):
            for n in range(7):
                out += integral_representation_reports(m, n, *z, cfg)
    return out


# --- limits -------------------------------------------------------------------------


def xi_to_u(xi1: complex, xi2: complex) -> tuple[complex, complex]:
    """Inverse of ``xi1 = (u1 - u2)/sqrt(2)``, ``xi2 = (conj u1 + conj u2)/sqrt(2)``."""
    xi1, xi2 = complex(xi1), complex(xi2)
    r = math.sqrt(2.0)
    return (xi1 + xi2.conjugate()) / r, (xi2.conjugate() - xi1) / r


def kernel_limit_errors(alpha: float, xis, zetas) -> np.ndarray:
    """``|K~(z(u); z(s)) - exp(xi1 conj zeta1 + xi2 conj zeta2)|`` for paired points."""
    out = []
    for xi, ze in zip(xis, zetas):
        u = xi_to_u(*xi)
        s = xi_to_u(*ze)
        z = tilde_limit_arguments(alpha, *u)
        w = tilde_limit_arguments(alpha, *s)
        val = tilde_kernel_closed(alpha, *z, *w)
        out.append(abs(val - bargmann_kernel_B2(*xi, *ze)))
    return np.array(out)


def kernel_limit_suite(cfg: SuiteConfig | None = None, kmax: int = 10, count: int = 200,
                       tol: float = 1e-4) -> list[VerificationReport]:
    """Tilde kernel at the substituted arguments -> Bargmann kernel as ``alpha -> 1``.

    Along ``alpha_k = 1 - 2^-k`` the maximum error over ``count`` random
    pairs in the unit polydisc is recorded.  The gating check asks for an
    error below ``tol`` at ``k = kmax``.  Diagnostics (also gating) test that
    the error decreases monotonically, that it halves with each step (first
    order in ``1 - alpha``), and that one Richardson step
    ``2 K(alpha_k) - K(alpha_{k-1})`` lands below ``tol``.  Finally the
    limiting monomials are checked to be orthonormal under the standard
    Gaussian on ``C^2``.
    """
    cfg = cfg or SuiteConfig()
    rng = cfg.rng("kernel_limit")
    xis = [(0j, 0j)] + _points(rng, 1.0, count - 1)
    zetas = [(0j, 0j)] + _points(rng, 1.0, count - 1)
    # coincident pairs exercise the diagonal exp(|xi|^2)
    zetas[1] = xis[1]
    alphas = [1.0 - 2.0 ** -k for k in range(1, kmax + 1)]
    start = time.perf_counter()
    errs = [kernel_limit_errors(a, xis, zetas) for a in alphas]
    maxima = [float(e.max()) for e in errs]
    ms = 1e3 * (time.perf_counter() - start)
    out = []
    tol_abs, tol_rel = cfg.tolerances(tol, 0.0)
    out.append(VerificationReport(
        check_id="kernel_limit",
        identity="tilde kernel at substituted arguments -> exp(xi . conj zeta), alpha = 1 - 2^-k",
        inputs={"k": kmax, "alpha": alphas[-1], "points": count, "radius": 1.0},
        computed=maxima[-1], reference=0.0, abs_err=maxima[-1], rel_err=math.inf,
        tol_abs=tol_abs, tol_rel=0.0, passed=maxima[-1] <= tol_abs, runtime_ms=ms,
        details={"max_error_by_k": maxima, "median_error_by_k": [float(np.median(e)) for e in errs]},
    ))
    monotone = all(b < a for a, b in zip(maxima, maxima[1:]))
    out.append(VerificationReport(
        check_id="kernel_limit_monotone",
        identity="kernel-limit error decreases strictly along alpha = 1 - 2^-k",
        inputs={"kmax": kmax}, computed=monotone, reference=True,
        abs_err=0.0 if monotone else 1.0, rel_err=0.0 if monotone else 1.0,
        tol_abs=0.0, tol_rel=0.0, passed=monotone,
    ))
    ratios = [a / b for a, b in zip(maxima[-4:], maxima[-3:])]
    rate_dev = max(abs(r - 2.0) for r in ratios)
    out.append(VerificationReport(
        check_id="kernel_limit_rate",
        identity="kernel-limit error is first order in 1 - alpha (ratio 2 per step)",
        inputs={"kmax": kmax}, computed=ratios[-1], reference=2.0,
        abs_err=rate_dev, rel_err=rate_dev / 2.0, tol_abs=0.2, tol_rel=0.0,
        passed=rate_dev <= 0.2, details={"ratios": ratios},
    ))
    extrap = []
    for xi, ze in zip(xis, zetas):
        u, s = xi_to_u(*xi), xi_to_u(*ze)
        vals = []
        for a in alphas[-2:]:
            vals.append(tilde_kernel_closed(a, *tilde_limit_arguments(a, *u), *tilde_limit_arguments(a, *s)))
        extrap.append(abs(2 * vals[1] - vals[0] - bargmann_kernel_B2(*xi, *ze)))
    ext = float(max(extrap))
    out.append(VerificationReport(
        check_id="kernel_limit_extrapolated",
        identity="Richardson-extrapolated kernel limit 2K(alpha_k) - K(alpha_{k-1}) -> Bargmann kernel",
        inputs={"k": kmax}, computed=ext, reference=0.0, abs_err=ext, rel_err=math.inf,
        tol_abs=tol, tol_rel=0.0, passed=ext <= tol,
    ))
    out += monomial_limit_orthogonality(cfg)
    return out


def monomial_limit_orthogonality(cfg: SuiteConfig | None = None, max_total: int = 4) -> list[VerificationReport]:
    """Orthonormality of ``xi1^m xi2^n / sqrt(m! n!)`` under the standard Gaussian on ``C^2``.

    Here ``xi1 = (u1 - u2)/sqrt(2)`` and ``xi2 = (conj u1 + conj u2)/sqrt(2)``.
    """
    cfg = cfg or SuiteConfig()
    pairs = _pairs_total(max_total)
    idx_m = np.array([m for m, _ in pairs])
    idx_n = np.array([n for _, n in pairs])

    def integrand(u1, u2):
        xi1 = (u1 - u2) / math.sqrt(2)
        xi2 = (np.conj(u1) + np.conj(u2)) / math.sqrt(2)
        v = np.moveaxis(phi_table(max_total, max_total, xi1, xi2)[idx_m, idx_n], 0, -1)
        return v[:, :, None] * np.conj(v[:, None, :])

    gram, ms = _timed(integrate_std_gaussian_C2, integrand, max(cfg.nodes_per_axis, max_total + 1))
    tol_abs, tol_rel = cfg.tolerances(1e-9, 0.0)
    return _gram_reports(
        "limit_monomial_orthogonality", "limit monomials are orthonormal under the standard Gaussian",
        gram, pairs, None, tol_abs, tol_rel, ms,
    )


def bound_sweep(cfg: SuiteConfig | None = None, samples: int = 10_000, max_each: int = 10,
                radius: float = 3.0, *, conjugate_slice: bool = False) -> VerificationReport:
    """Growth bound ``|H_{m,n}| <= sqrt(m! n!) e^{|z1||z2|}`` over a seeded random sweep.

    Points are drawn from the polydisc ``|z1|, |z2| <= radius``, or from the
    conjugate slice ``z2 = conj(z1)`` with ``|z1| <= radius`` when
    ``conjugate_slice`` is set.  Off the slice the inequality is false in
    general (see :func:`bound_counterexample`), so the polydisc sweep is
    expected to record violations.
    """
    cfg = cfg or SuiteConfig()
    rng = cfg.rng("bound_slice" if conjugate_slice else "bound")
    ms_ = rng.integers(0, max_each + 1, samples)
    ns_ = rng.integers(0, max_each + 1, samples)
    z1s = _disc(rng, radius, samples)
    z2s = np.conj(z1s) if conjugate_slice else _disc(rng, radius, samples)
    start = time.perf_counter()
    violations = 0
    worst = 0.0
    first = None
    for m, n, z1, z2 in zip(ms_, ns_, z1s, z2s):
        rep = bound_check(int(m), int(n), complex(z1), complex(z2))
        worst = max(worst, rep.abs_err)
        if not rep.passed:
            violations += 1
            if first is None:
                first = rep.inputs
    ms = 1e3 * (time.perf_counter() - start)
    where = "conjugate slice" if conjugate_slice else "polydisc"
    return VerificationReport(
        check_id="bound_sweep_slice" if conjugate_slice else "bound_sweep",
        identity=f"|H_{{m,n}}| <= sqrt(m! n!) exp(|z1||z2|) on random {where} samples",
        inputs={"samples": samples, "max_each": max_each, "radius": radius, "seed": cfg.seed,
                "conjugate_slice": conjugate_slice},
        computed=violations, reference=0, abs_err=float(violations), rel_err=float(violations),
        tol_abs=0.0, tol_rel=0.0, passed=violations == 0, runtime_ms=ms,
        details={"largest_log_violation": worst, "first_violation": first},
    )


def bound_counterexample() -> VerificationReport:
    """Exact witness that the growth bound fails off the conjugate slice.

    ``H_{1,0}(z1, z2) = z1``, so at ``(z1, z2) = (3, 0)`` the left side is 3
    while ``sqrt(1! 0!) e^{|z1||z2|} = 1``.  The report passes when the
    exact polynomial confirms the violation.
    """
    start = time.perf_counter()
    value = exact.hermite_exact_direct(1, 0)(3, 0)
    confirmed = complex(value) == 3 and abs(complex(value)) > 1
    return VerificationReport.exact(
        "bound_counterexample", "exact H_{1,0}(3, 0) = 3 exceeds sqrt(1! 0!) exp(3 * 0) = 1",
        {"m": 1, "n": 0, "z1": 3, "z2": 0}, confirmed, 1e3 * (time.perf_counter() - start),
    )


def tilde_limit_tail(reports: Sequence[VerificationReport], tail: int = 4,
                     tol_abs: float = 1e-3) -> VerificationReport:
    """Aggregate diagnostic: every tilde-limit residual sequence is decreasing over its
    last ``tail`` values and ends below ``tol_abs``.

    Strict monotonicity from the first step can fail where the first-order
    term of the residual is small; this checks the asymptotic regime only.
    """
    bad = []
    worst = 0.0
    for r in reports:
        res = r.details["residuals"]
        end = res[-tail:]
        ok = all(b < a for a, b in zip(end, end[1:])) or max(end) <= 1e-13
        worst = max(worst, res[-1])
        if not ok or res[-1] > tol_abs:
            bad.append(r.inputs)
    return VerificationReport(
        check_id="tilde_limit_tail",
        identity=f"tilde-limit residuals decrease over the last {tail} alphas and end below tolerance",
        inputs={"sequences": len(reports), "tail": tail}, computed=len(bad), reference=0,
        abs_err=worst, rel_err=float(len(bad)), tol_abs=tol_abs, tol_rel=0.0,
        passed=not bad, details={"failures": bad[:10], "largest_final_residual": worst},
    )


def tilde_limit_points(cfg: SuiteConfig | None = None) -> list[tuple[complex, complex]]:
    """Fixed points ``(1, 0)``, ``(1, 1)`` plus seeded random points of the unit polydisc."""
    cfg = cfg or SuiteConfig()
    return [(1 + 0j, 0j), (1 + 0j, 1 + 0j)] + _points(cfg.rng("tilde_limit"), 1.0, max(cfg.n_points, 8))


def limits_suite(cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Scaling, tilde and kernel limits; growth bound; generating functions."""
    cfg = cfg or SuiteConfig()
    out: list[VerificationReport] = []
    ts = [2.0 ** -k for k in range(1, 13)]
    rep = scaling_limit_check(1, 1, 1, 1, ts)
    for t, e in zip(ts, rep.details["errors"]):
        out.append(VerificationReport.build(
            "scaling_limit_closed_form", "scaling-limit error for (1,1) at z = (1,1) equals t^2",
            {"t": t}, e, t * t, tol_abs=1e-12, tol_rel=0.0,
        ))
    out.append(rep)
    out.append(scaling_limit_check(3, 2, 1 + 1j, 2, [0.1, 0.01, 0.001]))
    out.append(scaling_limit_check(0, 0, 0.3, 0.7j))

    alphas = [1.0 - 2.0 ** -k for k in range(1, 11)]
    tilde = [tilde_limit_check(m, n, *u, alphas)
             for u in tilde_limit_points(cfg) for m in range(4) for n in range(4)]
    out += tilde
    out.append(tilde_limit_tail(tilde))

    out += kernel_limit_suite(cfg)
    out.append(bound_sweep(cfg))
    out.append(bound_sweep(cfg, conjugate_slice=True))
    out.append(bound_counterexample())
    out.append(bound_check(1, 1, 0j, 0j))
    out.append(generating_function_check(0j, 0j, 0.3 + 0j, 0.4 + 0j, 5))
    out.append(generating_function_check(0.5 + 0j, 0.5 + 0j, 1 + 0j, 1 + 0j, 25))
    out.append(generating_function_check(1 + 0j, -1 + 0j, 2 + 0j, 0j, 30))
    out.append(partial_generating_check("sum_over_m", 0.3, 1, 1 + 0j, 2 + 0j, 30))
    out.append(partial_generating_check("sum_over_m", -0.5, 2, 1j, 1 + 0j, 30))
    out.append(partial_generating_check("sum_over_n", 0.4 - 0.2j, 3, 0.5 + 1j, -1 + 0j, 30))
    return out


SUITES: dict[str, Callable[[SuiteConfig], list[VerificationReport]]] = {
    "identities": identities_suite,
    "orthogonality": orthogonality_suite,
    "kernels": kernels_suite,
    "bargmann": bargmann_suite,
    "limits": limits_suite,
}


def run_suites(names: Iterable[str], cfg: SuiteConfig | None = None) -> list[VerificationReport]:
    """Run suites by name (``"all"`` expands to every suite) in a fixed order."""
    cfg = cfg or SuiteConfig()
    names = list(names)
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s): {', '.join(unknown)}")
    out: list[VerificationReport] = []
    for name in SUITES:
        if name in names:
            out += SUITES[name](cfg)
    return out
