"""Gauss-Hermite rules, tensor grids over C^2, and Monte-Carlo Gaussian integration.

All integrals in the package reduce to one of

* ``int_C f(u) e^{-|u|^2} du / pi`` (one complex variable),
* ``int_{C^2} f(u1, u2) e^{-|u1|^2 - |u2|^2} du1 du2 / pi^2``,
* ``int_{R^2} f(r, s) dr ds``,

evaluated with tensor products of a one-dimensional Gauss-Hermite rule.
The deformed measure ``mu_alpha`` is handled by a linear change of
variables that turns its density into the standard Gaussian on ``C^2``.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import IntegrationError, RangeError
from .evaluate import Alpha

__all__ = [
    "QuadratureRule",
    "MCConfig",
    "gauss_hermite_rule",
    "hermite_moment",
    "integrate_std_gaussian_C1",
    "integrate_std_gaussian_C2",
    "integrate_std_gaussian_C2_outer",
    "integrate_mu_alpha",
    "mu_alpha_jacobian",
    "mu_alpha_substitution",
    "integrate_planar_R2",
    "mc_integrate_gaussian",
    "rule_to_csv",
]

MAX_NODES = 200
# pi to more digits than any binary float format used here can hold
_PI_DIGITS = "3.14159265358979323846264338327950288"
CHUNK_POINTS = 1 << 14


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights for ``int f(x) e^{-x^2} dx``."""

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.nodes.shape != self.weights.shape or self.nodes.ndim != 1:
            raise ValueError("nodes and weights must be 1-D arrays of equal length")
        if np.any(self.weights <= 0):
            raise ValueError("weights must be positive")

    @property
    def order(self) -> int:
        return int(self.nodes.size)

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]):
        """``sum_i w_i f(x_i)``."""
        return self.weights @ np.asarray(f(self.nodes))


def _orthonormal_hermite(x: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal (w.r.t. ``e^{-x^2}``) Hermite polynomials ``p_n`` and ``p_{n-1}``.

    Works in the floating type of ``x``.
    """
    ft = x.dtype.type
    p_prev = np.zeros_like(x)
    p = np.full_like(x, ft(_PI_DIGITS) ** ft(-0.25))
    for k in range(n):
        a = np.sqrt(ft(2) / ft(k + 1))
        b = np.sqrt(ft(k) / ft(k + 1))
        p_prev, p = p, a * x * p - b * p_prev
    return p, p_prev


@lru_cache(maxsize=64)
def _rule_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    # Golub-Welsch: eigenvalues of the symmetric Jacobi matrix
    off = np.sqrt(np.arange(1, n) / 2.0)
    x = eigh_tridiagonal(np.zeros(n), off, eigvals_only=True) if n > 1 else np.zeros(1)
    # Newton polish on p_n, with p_n' = sqrt(2n) p_{n-1}, carried out in
    # extended precision (where the platform has it) so that the final
    # rounding to double is as close to correct as possible
    xe = np.sort(x).astype(np.longdouble)
    two_n = np.sqrt(np.longdouble(2 * n))
    for _ in range(3):
        p, p_prev = _orthonormal_hermite(xe, n)
        xe = xe - p / (two_n * p_prev)
    # enforce the exact +/- symmetry of the rule
    xe = (xe - xe[::-1]) / 2
    _, p_prev = _orthonormal_hermite(xe, n)
    we = 1 / (np.longdouble(n) * p_prev**2)
    we = (we + we[::-1]) / 2
    x = xe.astype(float)
    w = we.astype(float)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_hermite_rule(n: int) -> QuadratureRule:
    """The ``n``-point Gauss-Hermite rule for the weight ``e^{-x^2}``.

    Nodes come from the eigenvalues of the Hermite Jacobi matrix, refined by
    Newton steps on the three-term recurrence; weights use the
    Christoffel-Darboux formula ``w_i = 1 / (n p_{n-1}(x_i)^2)``.

    Raises
    ------
    RangeError
        Unless ``1 <= n <= 200``.
    """
    if int(n) != n or not (1 <= n <= MAX_NODES):
        raise RangeError(f"node count must be an integer in [1, {MAX_NODES}]; got {n!r}")
    x, w = _rule_arrays(int(n))
    return QuadratureRule(x, w)


def hermite_moment(k: int) -> float:
    """``int x^k e^{-x^2} dx``: zero for odd ``k``, ``Gamma((k+1)/2)`` otherwise."""
    if k % 2:
        return 0.0
    try:
        return math.gamma((k + 1) / 2)
    except OverflowError:
        return math.inf


def _check_finite(values: np.ndarray) -> None:
    if not np.all(np.isfinite(values)):
        raise IntegrationError("integrand produced non-finite values on the quadrature grid")


def integrate_std_gaussian_C1(f: Callable, n: int):
    """``int_C f(u) e^{-|u|^2} du / pi`` with an ``n x n`` tensor rule.

    ``f`` receives a 1-D complex array of nodes and returns an array whose
    first axis matches it (extra trailing axes integrate componentwise).
    """
    rule = gauss_hermite_rule(n)
    x, w = rule.nodes, rule.weights
    u = (x[:, None] + 1j * x[None, :]).ravel()
    ww = (w[:, None] * w[None, :]).ravel()
    vals = np.asarray(f(u))
    _check_finite(vals)
    out = np.tensordot(ww, vals, axes=(0, 0)) / math.pi
    return complex(out) if np.ndim(out) == 0 else out


def _c2_chunks(n: int):
    """Yield ``(u1, u2, weights)`` chunks of the ``n**4``-point tensor grid on ``C^2``.

    The ``(x2, y2)`` plane is shared by every chunk and ``y1`` is sliced so
    that a chunk never holds more than ``CHUNK_POINTS`` points.
    """
    rule = gauss_hermite_rule(n)
    x, w = rule.nodes, rule.weights
    x2, y2 = np.meshgrid(x, x, indexing="ij")
    u2_plane = (x2 + 1j * y2).ravel()
    w_plane = (w[:, None] * w[None, :]).ravel()
    step = max(1, CHUNK_POINTS // u2_plane.size)
    for xa, wa in zip(x, w):
        for start in range(0, n, step):
            y1 = x[start:start + step]
            wy = w[start:start + step]
            u1 = np.repeat(xa + 1j * y1, u2_plane.size)
            u2 = np.tile(u2_plane, y1.size)
            yield u1, u2, wa * (wy[:, None] * w_plane[None, :]).ravel()


def integrate_std_gaussian_C2(f: Callable, n: int):
    """``int_{C^2} f(u1, u2) e^{-|u1|^2-|u2|^2} du1 du2 / pi^2`` by a 4-fold tensor rule.

    Exact up to rounding for polynomials in ``(u1, conj u1, u2, conj u2)``
    whose degree in each real variable is at most ``2n - 1``.  The grid is
    processed in ``n`` chunks of ``n**3`` points (one per node of the first
    real axis, further sliced to at most ``CHUNK_POINTS`` points), so ``f``
    sees 1-D arrays ``(u1, u2)`` and may return extra trailing axes for
    batched integrands.
    """
    total = None
    for u1, u2, ww in _c2_chunks(n):
        vals = np.asarray(f(u1, u2))
        _check_finite(vals)
        part = np.tensordot(ww, vals, axes=(0, 0))
        total = part if total is None else total + part
    out = total / math.pi**2
    return complex(out) if np.ndim(out) == 0 else out


def mu_alpha_substitution(alpha, u1, u2) -> tuple[np.ndarray, np.ndarray]:
    """The map ``u -> z`` that turns ``mu_alpha`` into the standard Gaussian.

    ``z1 = (u1 - sqrt(a) u2) / sqrt(1-a)`` and
    ``z2 = (conj u1 + sqrt(a) conj u2) / sqrt(1-a)``.
    """
    a = Alpha.coerce(alpha)
    ra = a.sqrt_alpha
    s = math.sqrt(1.0 - a.alpha)
    u1 = np.asarray(u1, dtype=complex)
    u2 = np.asarray(u2, dtype=complex)
    return (u1 - ra * u2) / s, (np.conj(u1) + ra * np.conj(u2)) / s


def mu_alpha_jacobian(alpha) -> float:
    """Absolute determinant of the real 4x4 linearization of the substitution.

    Computed by pushing the real unit vectors of ``(x1, y1, x2, y2)``
    through :func:`mu_alpha_substitution`, then checked against the closed
    form ``4 alpha / (1 - alpha)^2``.
    """
    a = Alpha.coerce(alpha)
    basis = np.array([1, 1j, 0, 0, 0, 0, 1, 1j], dtype=complex).reshape(2, 4)
    z1, z2 = mu_alpha_substitution(a, basis[0], basis[1])
    jac = np.vstack([z1.real, z1.imag, z2.real, z2.imag])
    det = abs(float(np.linalg.det(jac)))
    closed = 4.0 * a.alpha / (1.0 - a.alpha) ** 2
    if abs(det - closed) > 1e-12 * closed:
        raise ArithmeticError(f"Jacobian mismatch: {det!r} vs {closed!r}")
    return det


def integrate_mu_alpha(f: Callable, alpha, n: int, exponent: Callable | None = None):
    """``int f dmu_alpha`` over ``C^2``.

    ``mu_alpha`` has density
    ``exp[(1+a^2)/(4a) 2 Re(z1 z2) - (1-a^2)/(4a) (|z1|^2 + |z2|^2)]``
    with respect to ``dz1 dz2 / pi^2`` (planar Lebesgue measure).  Under the
    substitution of :func:`mu_alpha_substitution` that density equals
    ``e^{-|u|^2} e^{Re(z1 z2)}``, so the integral becomes
    ``J * int f(z(u)) e^{Re(z1 z2)} e^{-|u|^2} du / pi^2`` with
    ``J = 4 alpha / (1 - alpha)^2``.

    Parameters
    ----------
    f : callable
        ``f(z1, z2)`` on 1-D complex arrays.
    alpha : float or Alpha
    n : int
        Gauss-Hermite nodes per real axis.
    exponent : callable, optional
        ``exponent(z1, z2)`` returning a complex log-factor; the integrand is
        then ``f * exp(exponent)``.  Merging exponentials before
        exponentiating avoids spurious overflow.  If ``f`` returns shape
        ``(P,) + A`` and ``exponent`` returns ``(P,) + B``, the result has
        shape ``A + B`` (an outer product over the trailing axes).
    """
    a = Alpha.coerce(alpha)
    jac = mu_alpha_jacobian(a)

    def log_factor(u1, u2):
        z1, z2 = mu_alpha_substitution(a, u1, u2)
        log_w = (z1 * z2).real
        if exponent is None:
            return log_w
        extra = np.asarray(exponent(z1, z2))
        return log_w.reshape(log_w.shape + (1,) * (extra.ndim - 1)) + extra

    def poly(u1, u2):
        return f(*mu_alpha_substitution(a, u1, u2))

    return jac * integrate_std_gaussian_C2_outer(poly, lambda u1, u2: np.exp(log_factor(u1, u2)), n)


def integrate_std_gaussian_C2_outer(f: Callable, g: Callable, n: int):
    """``int_{C^2} f[..., A] g[..., B] e^{-|u|^2} du / pi^2`` for every index pair.

    ``f(u1, u2)`` returns shape ``(P,) + A`` and ``g(u1, u2)`` returns
    ``(P,) + B``; the result has shape ``A + B``.  Each chunk is contracted
    with a single weighted matrix product, so the ``(P,) + A + B`` outer
    product is never formed.
    """
    total = None
    tail_a = tail_b = ()
    for u1, u2, ww in _c2_chunks(n):
        vals = np.asarray(f(u1, u2))
        if vals.ndim == 0:
            vals = np.broadcast_to(vals, u1.shape)
        other = np.asarray(g(u1, u2))
        if other.ndim == 0:
            other = np.broadcast_to(other, u1.shape)
        _check_finite(vals)
        _check_finite(other)
        tail_a, tail_b = vals.shape[1:], other.shape[1:]
        lhs = (vals.reshape(vals.shape[0], -1) * ww[:, None]).T
        part = lhs @ other.reshape(other.shape[0], -1)
        total = part if total is None else total + part
    out = total.reshape(tail_a + tail_b) / math.pi**2
    _check_finite(out)
    return complex(out) if np.ndim(out) == 0 else out


def integrate_planar_R2(f: Callable, n: int, *, gaussian_factored: bool = False):
    """``int_{R^2} f(r, s) dr ds`` by a 2-fold Gauss-Hermite rule.

    By default ``f`` is the full integrand and ``e^{r^2 + s^2}`` is
    multiplied back in at the nodes.  With ``gaussian_factored=True``,
    ``f`` is the integrand with ``e^{-r^2-s^2}`` already removed.
    """
    rule = gauss_hermite_rule(n)
    x, w = rule.nodes, rule.weights
    r = np.repeat(x, x.size)
    s = np.tile(x, x.size)
    ww = np.repeat(w, w.size) * np.tile(w, w.size)
    vals = np.asarray(f(r, s), dtype=complex)
    if not gaussian_factored:
        g = np.exp(r**2 + s**2)
        vals = vals * g.reshape(g.shape + (1,) * (vals.ndim - 1))
    _check_finite(vals)
    out = np.tensordot(ww, vals, axes=(0, 0))
    return complex(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class MCConfig:
    """Monte-Carlo sample count and 64-bit seed."""

    samples: int
    seed: int = 0
    block: int = 1 << 16

    def __post_init__(self):
        if int(self.samples) != self.samples or self.samples < 1:
            raise RangeError("samples must be a positive integer")
        if self.block < 1:
            raise RangeError("block must be positive")


def _complex_normal(rng: np.random.Generator, size: tuple[int, ...]) -> np.ndarray:
    # standard complex Gaussian: real and imaginary parts ~ N(0, 1/2)
    z = rng.standard_normal(size + (2,)) * math.sqrt(0.5)
    return z[..., 0] + 1j * z[..., 1]


def mc_integrate_gaussian(f: Callable, dims: int, cfg: MCConfig) -> tuple[complex, float]:
    """Monte-Carlo estimate of ``E[f]`` under standard complex Gaussian(s).

    Samples are drawn in blocks, each from its own Philox stream spawned
    from the seed, so the estimate does not depend on how blocks would be
    scheduled.  ``f`` takes ``dims`` arrays of complex samples.

    Returns
    -------
    value : complex
    stderr : float
        Standard error of the mean, ``sqrt((Var Re f + Var Im f) / samples)``.
    """
    if dims not in (1, 2):
        raise RangeError("dims must be 1 or 2")
    nblocks = -(-cfg.samples // cfg.block)
    children = np.random.SeedSequence(cfg.seed).spawn(nblocks)
    s1 = 0j
    s2 = 0.0
    remaining = cfg.samples
    for child in children:
        size = min(cfg.block, remaining)
        remaining -= size
        rng = np.random.Generator(np.random.Philox(child))
        u = _complex_normal(rng, (dims, size))
        vals = np.asarray(f(*u), dtype=complex)
        vals = np.broadcast_to(vals, (size,))
        _check_finite(vals)
        s1 += vals.sum()
        s2 += float((vals.real**2 + vals.imag**2).sum())
    mean = s1 / cfg.samples
    if cfg.samples > 1:
        var = max(0.0, (s2 - cfg.samples * abs(mean) ** 2) / (cfg.samples - 1))
    else:
        var = 0.0
    return complex(mean), math.sqrt(var / cfg.samples)


def rule_to_csv(rule: QuadratureRule) -> str:
    """``node,weight`` rows with round-trip (``repr``) float formatting."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["node", "weight"])
    for x, w in zip(rule.nodes, rule.weights):
        writer.writerow([repr(float(x)), repr(float(w))])
    return buf.getvalue()
