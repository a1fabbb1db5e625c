"""Hermite functions, the measure density, reproducing kernels and Bargmann kernels.

Notation: ``a = (1 + alpha^2) / (4 alpha)``, ``b = (1 - alpha^2) / (4 alpha)``,
``lam = sqrt((1 - alpha) / (1 + alpha))`` and ``c = (1 - alpha) / (2 sqrt(alpha))``.

The Hermite functions are ``h_{m,n}(z) = c e^{-z1 z2 / 2} H~_{m,n}(z)``; they
are orthonormal in ``L^2(mu_alpha)`` where ``mu_alpha`` has density
``g_alpha(z) = exp[a 2 Re(z1 z2) - b (|z1|^2 + |z2|^2)]`` with respect to
``dz1 dz2 / pi^2``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import lgamma

import numpy as np

from .evaluate import Alpha, ComplexPoint, normalized_table

__all__ = [
    "HermiteFunctionValue",
    "hermite_function",
    "hermite_function_table",
    "weight_g_alpha",
    "kernel_closed",
    "kernel_truncated",
    "norm_sum_closed",
    "norm_sum_truncated",
    "tilde_kernel_closed",
    "tilde_kernel_truncated",
    "bargmann_kernel_A",
    "phi_basis",
    "phi_table",
    "bargmann_kernel_B2",
    "bargmann_truncated",
    "bargmann_generating_truncated",
    "kernel_gram_matrix",
    "kernel_coefficients",
]


def kernel_coefficients(alpha) -> tuple[float, float]:
    """The pair ``(a, b) = ((1 + alpha^2)/(4 alpha), (1 - alpha^2)/(4 alpha))``."""
    al = Alpha.coerce(alpha).alpha
    return (1.0 + al * al) / (4.0 * al), (1.0 - al * al) / (4.0 * al)


@dataclass(frozen=True)
class HermiteFunctionValue:
    """A complex number stored as ``mantissa * exp(log_scale)``.

    ``|mantissa|`` lies in ``[1, e)`` unless the value is exactly zero, in
    which case ``mantissa == 0`` and ``log_scale == 0``.
    """

    mantissa: complex
    log_scale: float

    @classmethod
    def from_log(cls, log_abs: float, phase_factor: complex) -> "HermiteFunctionValue":
        """Build from ``log|v|`` and a unit-modulus (or zero) phase factor."""
        if phase_factor == 0 or log_abs == -math.inf:
            return cls(0j, 0.0)
        k = math.floor(log_abs)
        return cls(complex(phase_factor) * math.exp(log_abs - k), float(k))

    @classmethod
    def from_complex(cls, v: complex) -> "HermiteFunctionValue":
        """Exact-as-possible conversion: the mantissa is ``v`` scaled by ``e^{-k}``."""
        v = complex(v)
        if v == 0:
            return cls(0j, 0.0)
        k = math.floor(math.log(abs(v)))
        mant = _scale_by_exp(v, -k)
        # guard the [1, e) invariant against rounding at the boundaries
        if abs(mant) >= math.e:
            mant, k = mant / math.e, k + 1
        elif abs(mant) < 1:
            mant, k = mant * math.e, k - 1
        return cls(mant, float(k))

    @property
    def value(self) -> complex:
        """The represented number; may overflow to ``inf`` or underflow to 0."""
        if self.mantissa == 0:
            return 0j
        if self.log_scale > 710:
            return complex(math.copysign(math.inf, self.mantissa.real) if self.mantissa.real else 0.0,
                           math.copysign(math.inf, self.mantissa.imag) if self.mantissa.imag else 0.0)
        return _scale_by_exp(self.mantissa, self.log_scale)

    @property
    def log_abs(self) -> float:
        if self.mantissa == 0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.log_scale

    def __complex__(self) -> complex:
        return self.value


def _scale_by_exp(v: complex, k: float) -> complex:
    """``v * e^k`` in two halves, so that neither factor over- or underflows early."""
    half = math.floor(k / 2)
    return (v * math.exp(half)) * math.exp(k - half)


def _normalized_scaled(m: int, n: int, lam: float, z1: complex, z2: complex) -> tuple[complex, float]:
    """``H~_{m,n}`` as ``(mantissa, log_scale)``; rows are renormalized as they go."""
    z1, z2 = complex(z1), complex(z2)
    lz1, lz2, lam2 = lam * z1, lam * z2, lam * lam
    row = [0j] * (n + 1)
    row[0] = 1 + 0j
    log_scale = 0.0
    for j in range(n):
        row[j + 1] = lz2 * row[j] / math.sqrt(j + 1)
    for i in range(m):
        nxt = [lz1 * row[j] - (lam2 * math.sqrt(j) * row[j - 1] if j else 0) for j in range(n + 1)]
        inv = 1.0 / math.sqrt(i + 1)
        row = [v * inv for v in nxt]
        big = max(abs(v) for v in row)
        if big > 1e100 or (0 < big < 1e-100):
            row = [v / big for v in row]
            log_scale += math.log(big)
    return row[n], log_scale


def hermite_function(m: int, n: int, alpha, z1: complex, z2: complex) -> HermiteFunctionValue:
    """``h^(alpha)_{m,n}(z1, z2) = c lam^(m+n) e^{-z1 z2/2} H_{m,n}(z1, z2) / sqrt(m! n!)``.

    Returned in mantissa/exponent form so it stays representable for large
    degrees or arguments.

    Examples
    --------
    >>> round(hermite_function(0, 0, 0.5, 0, 0).value.real, 6)
    0.353553
    """
    a = Alpha.coerce(alpha)
    p = ComplexPoint.make(z1, z2)
    mant, log_scale = _normalized_scaled(m, n, a.lambda_, p.z1, p.z2)
    if mant == 0:
        return HermiteFunctionValue(0j, 0.0)
    e = -0.5 * p.z1 * p.z2
    log_abs = math.log(a.prefactor) + log_scale + math.log(abs(mant)) + e.real
    phase = (mant / abs(mant)) * cmath.exp(1j * e.imag)
    return HermiteFunctionValue.from_log(log_abs, phase)


def hermite_function_table(M: int, N: int, alpha, z1, z2) -> np.ndarray:
    """All ``h_{i,j}`` for ``i <= M, j <= N`` on arrays of points (plain floats).

    Shape ``(M+1, N+1) + shape(z)``.
    """
    a = Alpha.coerce(alpha)
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    tab = normalized_table(M, N, z1, z2, a.lambda_)
    return a.prefactor * np.exp(-0.5 * z1 * z2) * tab


def weight_g_alpha(alpha, z1, z2):
    """Density ``g_alpha = exp[a 2 Re(z1 z2) - b (|z1|^2 + |z2|^2)]`` of ``mu_alpha``."""
    a, b = kernel_coefficients(alpha)
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    out = np.exp(2.0 * a * (z1 * z2).real - b * (np.abs(z1) ** 2 + np.abs(z2) ** 2))
    return float(out) if out.ndim == 0 else out


def _kernel_prefactor(alpha) -> float:
    al = Alpha.coerce(alpha).alpha
    return (1.0 - al * al) ** 2 / (16.0 * al * al)


def kernel_closed(alpha, z1, z2, w1, w2):
    """Closed-form reproducing kernel ``K(z; w)`` of the Hermite-function space.

    ``K = (1-a^2)^2/(16 a^2) exp[-A (z1 z2 + conj(w1 w2)) + B (z1 conj w1 + z2 conj w2)]``
    with ``A = (1 + alpha^2)/(4 alpha)`` and ``B = (1 - alpha^2)/(4 alpha)``.
    """
    a, b = kernel_coefficients(alpha)
    z1, z2, w1, w2 = (np.asarray(v, dtype=complex) for v in (z1, z2, w1, w2))
    wb1, wb2 = np.conj(w1), np.conj(w2)
    out = _kernel_prefactor(alpha) * np.exp(-a * (z1 * z2 + wb1 * wb2) + b * (z1 * wb1 + z2 * wb2))
    return complex(out) if out.ndim == 0 else out


def _fsum_by_degree(grid: np.ndarray) -> complex:
    """Compensated sum of an ``(M+1) x (N+1)`` grid in order of total degree."""
    rows, cols = grid.shape
    re, im = [], []
    for d in range(rows + cols - 1):
        for i in range(max(0, d - cols + 1), min(d, rows - 1) + 1):
            v = grid[i, d - i]
            re.append(v.real)
            im.append(v.imag)
    return complex(math.fsum(re), math.fsum(im))


def kernel_truncated(alpha, z1, z2, w1, w2, M: int = 60) -> complex:
    """``sum_{m,n <= M} h_{m,n}(z) conj(h_{m,n}(w))``, compensated, by total degree."""
    if M < 0:
        raise ValueError("truncation order must be non-negative")
    hz = hermite_function_table(M, M, alpha, complex(z1), complex(z2))
    hw = hermite_function_table(M, M, alpha, complex(w1), complex(w2))
    return _fsum_by_degree(hz * np.conj(hw))


def norm_sum_closed(alpha, z1, z2):
    """``sum |h_{m,n}(z)|^2`` in closed form; identical to ``kernel_closed(z; z)``."""
    a, b = kernel_coefficients(alpha)
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    out = _kernel_prefactor(alpha) * np.exp(
        -2.0 * a * (z1 * z2).real + b * (np.abs(z1) ** 2 + np.abs(z2) ** 2)
    )
    return float(out) if out.ndim == 0 else out


def norm_sum_truncated(alpha, z1, z2, M: int = 60) -> float:
    """Partial sum ``sum_{m,n <= M} |h_{m,n}(z)|^2``."""
    hz = hermite_function_table(M, M, alpha, complex(z1), complex(z2))
    return _fsum_by_degree(np.abs(hz) ** 2 + 0j).real


def tilde_kernel_closed(alpha, z1, z2, w1, w2):
    """Closed form of ``sum H~_{m,n}(z) conj(H~_{m,n}(w))``.

    ``(1+alpha)^2/(4 alpha) exp[-(1-alpha)^2/(4 alpha) (z1 z2 + conj(w1 w2))
    + (1-alpha^2)/(4 alpha) (z1 conj w1 + z2 conj w2)]``.
    """
    al = Alpha.coerce(alpha).alpha
    z1, z2, w1, w2 = (np.asarray(v, dtype=complex) for v in (z1, z2, w1, w2))
    wb1, wb2 = np.conj(w1), np.conj(w2)
    pre = (1.0 + al) ** 2 / (4.0 * al)
    out = pre * np.exp(
        -((1.0 - al) ** 2) / (4.0 * al) * (z1 * z2 + wb1 * wb2)
        + (1.0 - al * al) / (4.0 * al) * (z1 * wb1 + z2 * wb2)
    )
    return complex(out) if out.ndim == 0 else out


def tilde_kernel_truncated(alpha, z1, z2, w1, w2, M: int = 80) -> complex:
    """``sum_{m,n <= M} H~_{m,n}(z) conj(H~_{m,n}(w))``."""
    lam = Alpha.coerce(alpha).lambda_
    tz = normalized_table(M, M, complex(z1), complex(z2), lam)
    tw = normalized_table(M, M, complex(w1), complex(w2), lam)
    return _fsum_by_degree(tz * np.conj(tw))


def bargmann_kernel_A(alpha, z1, z2, wbar1, wbar2):
    """Kernel of the Bargmann-type transform.

    ``A(z, wbar) = c exp[-wbar1 wbar2 / 2 + lam (z1 wbar1 + z2 wbar2) - lam^2 z1 z2]``.
    The second pair of arguments is passed already conjugated.
    """
    a = Alpha.coerce(alpha)
    z1, z2, wb1, wb2 = (np.asarray(v, dtype=complex) for v in (z1, z2, wbar1, wbar2))
    lam = a.lambda_
    out = a.prefactor * np.exp(-0.5 * wb1 * wb2 + lam * (z1 * wb1 + z2 * wb2) - a.lambda_sq * z1 * z2)
    return complex(out) if out.ndim == 0 else out


def phi_basis(m: int, n: int, z1: complex, z2: complex) -> complex:
    """Orthonormal monomial ``z1^m z2^n / sqrt(m! n!)`` of the Bargmann space.

    Evaluated through its logarithm, so large degrees neither overflow
    the factorials nor lose the phase.
    """
    z1, z2 = complex(z1), complex(z2)
    if (m and z1 == 0) or (n and z2 == 0):
        return 0j
    log_abs = -0.5 * (lgamma(m + 1) + lgamma(n + 1))
    phase = 0.0
    if m:
        log_abs += m * math.log(abs(z1))
        phase += m * cmath.phase(z1)
    if n:
        log_abs += n * math.log(abs(z2))
        phase += n * cmath.phase(z2)
    return cmath.rect(math.exp(log_abs), phase)


def phi_table(M: int, N: int, z1, z2) -> np.ndarray:
    """All ``Phi_{i,j}`` for ``i <= M, j <= N`` on arrays, by stable products."""
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    z1, z2 = np.broadcast_arrays(z1, z2)
    p1 = np.empty((M + 1,) + z1.shape, dtype=complex)
    p2 = np.empty((N + 1,) + z2.shape, dtype=complex)
    p1[0] = 1.0
    p2[0] = 1.0
    for k in range(M):
        p1[k + 1] = p1[k] * z1 / math.sqrt(k + 1)
    for k in range(N):
        p2[k + 1] = p2[k] * z2 / math.sqrt(k + 1)
    return p1[:, None] * p2[None, :]


def bargmann_kernel_B2(z1, z2, w1, w2):
    """Reproducing kernel ``exp(z1 conj w1 + z2 conj w2)`` of the Bargmann space."""
    z1, z2, w1, w2 = (np.asarray(v, dtype=complex) for v in (z1, z2, w1, w2))
    out = np.exp(z1 * np.conj(w1) + z2 * np.conj(w2))
    return complex(out) if out.ndim == 0 else out


def bargmann_truncated(z1, z2, w1, w2, M: int = 40) -> complex:
    """``sum_{m,n <= M} Phi_{m,n}(z) conj(Phi_{m,n}(w))``."""
    return _fsum_by_degree(phi_table(M, M, complex(z1), complex(z2)) * np.conj(phi_table(M, M, complex(w1), complex(w2))))


def bargmann_generating_truncated(alpha, z1, z2, w1, w2, M: int = 40) -> complex:
    """``sum_{m,n <= M} Phi_{m,n}(z) conj(h_{m,n}(w))``, which tends to ``A(z, conj w)``."""
    ph = phi_table(M, M, complex(z1), complex(z2))
    hw = hermite_function_table(M, M, alpha, complex(w1), complex(w2))
    return _fsum_by_degree(ph * np.conj(hw))


def kernel_gram_matrix(alpha, points) -> np.ndarray:
    """Matrix ``G[i, j] = K(p_i; p_j)`` for a sequence of points ``(z1, z2)``."""
    pts = np.asarray(points, dtype=complex).reshape(-1, 2)
    z1, z2 = pts[:, 0][:, None], pts[:, 1][:, None]
    w1, w2 = pts[:, 0][None, :], pts[:, 1][None, :]
    return kernel_closed(alpha, z1, z2, w1, w2)
