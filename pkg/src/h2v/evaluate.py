"""Floating-point evaluation of the holomorphic Hermite polynomials.

Four evaluators of ``H_{m,n}(z1, z2)`` are provided:

``direct``
    The finite sum over ``k``, evaluated by Horner's rule in ``w = z1*z2``.
``recurrence``
    The two-term ladder ``H_{m+1,n} = z1 H_{m,n} - n H_{m,n-1}`` filling an
    ``(m+1) x (n+1)`` table.  Vectorized over arrays of points.
``hermite1d``
    The representation through 1D Hermite polynomials at ``(z1+z2)/2`` and
    ``(z1-z2)/(2i)``.  That sum cancels catastrophically in floating point,
    so it is carried out in exact dyadic integer arithmetic on the (exactly
    representable) float inputs and rounded once at the end.
``laguerre_diagonal``
    The associated-Laguerre form, valid only on the slice ``z2 = conj(z1)``.

The normalized polynomials ``H~ = lam**(m+n) H / sqrt(m! n!)`` come from a
rescaled ladder with no explicit factorials, so they stay finite far past the
point where ``m!`` overflows.
"""
from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, lgamma
from typing import NamedTuple, Sequence

import numpy as np
from scipy import special

from .errors import DomainError
from .report import VerificationReport

__all__ = [
    "Alpha",
    "ComplexPoint",
    "METHODS",
    "eval_hermite",
    "eval_hermite_normalized",
    "normalized_table",
    "hermite_table",
    "generating_function_check",
    "partial_generating_check",
    "bound_check",
    "scaling_limit_check",
    "tilde_limit_check",
    "tilde_limit_arguments",
    "default_t_sequence",
    "default_alpha_sequence",
]

METHODS = ("direct", "recurrence", "hermite1d", "laguerre_diagonal")


@dataclass(frozen=True)
class Alpha:
    """Deformation parameter ``0 < alpha < 1`` with its derived constants.

    Attributes
    ----------
    alpha : float
    lambda_ : float
        ``sqrt((1 - alpha) / (1 + alpha))``.
    lambda_sq : float
        ``(1 - alpha) / (1 + alpha)``.
    """

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not (0.0 < a < 1.0) or not math.isfinite(a):
            raise DomainError(f"alpha must lie strictly inside (0, 1); got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)

    @property
    def lambda_sq(self) -> float:
        return (1.0 - self.alpha) / (1.0 + self.alpha)

    @property
    def lambda_(self) -> float:
        return math.sqrt(self.lambda_sq)

    @property
    def sqrt_alpha(self) -> float:
        return math.sqrt(self.alpha)

    @property
    def prefactor(self) -> float:
        """``(1 - alpha) / (2 sqrt(alpha))``, the Hermite-function normalization."""
        return (1.0 - self.alpha) / (2.0 * self.sqrt_alpha)

    @classmethod
    def coerce(cls, a) -> "Alpha":
        return a if isinstance(a, Alpha) else cls(a)


class ComplexPoint(NamedTuple):
    """A point ``(z1, z2)`` of complex two-space."""

    z1: complex
    z2: complex

    @classmethod
    def make(cls, z1, z2) -> "ComplexPoint":
        z1, z2 = complex(z1), complex(z2)
        if not (cmath.isfinite(z1) and cmath.isfinite(z2)):
            raise DomainError("point components must be finite")
        return cls(z1, z2)

    @classmethod
    def polar(cls, r: float, theta: float) -> "ComplexPoint":
        """The point ``(r e^{i theta}, r e^{-i theta})`` on the conjugate slice."""
        return cls.make(cmath.rect(r, theta), cmath.rect(r, -theta))


def _check_degrees(m: int, n: int) -> None:
    if int(m) != m or int(n) != n or m < 0 or n < 0:
        raise DomainError(f"degrees must be non-negative integers; got ({m}, {n})")


# --- evaluators -----------------------------------------------------------


def _eval_direct(m: int, n: int, z1, z2):
    # H = z1^(m-n) * P(z1 z2) for m >= n, P of degree n in w = z1 z2
    if m < n:
        return _eval_direct(n, m, z2, z1)
    w = z1 * z2
    acc = np.zeros_like(w) + 1.0  # k = 0 coefficient of w^n
    for k in range(1, n + 1):
        coef = float(comb(m, k) * comb(n, k) * factorial(k)) * (-1) ** k
        acc = acc * w + coef
    return acc * z1 ** (m - n)


def hermite_table(m: int, n: int, z1, z2) -> np.ndarray:
    """All ``H_{i,j}(z1, z2)`` for ``i <= m, j <= n`` by the ladder.

    Returns an array of shape ``(m+1, n+1) + shape(z1)``.
    """
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    z1, z2 = np.broadcast_arrays(z1, z2)
    out = np.empty((m + 1, n + 1) + z1.shape, dtype=complex)
    row = np.empty((n + 1,) + z1.shape, dtype=complex)
    row[0] = 1.0
    for j in range(n):
        row[j + 1] = z2 * row[j]
    out[0] = row
    jj = np.arange(n + 1, dtype=float).reshape((n + 1,) + (1,) * z1.ndim)
    for i in range(m):
        nxt = z1 * row
        nxt[1:] -= jj[1:] * row[:-1]
        row = nxt
        out[i + 1] = row
    return out


def _eval_recurrence(m: int, n: int, z1, z2):
    # single row sweep; the table itself is only materialized on request
    z1, z2 = np.broadcast_arrays(np.asarray(z1, dtype=complex), np.asarray(z2, dtype=complex))
    row = np.empty((n + 1,) + z1.shape, dtype=complex)
    row[0] = 1.0
    for j in range(n):
        row[j + 1] = z2 * row[j]
    jj = np.arange(n + 1, dtype=float).reshape((n + 1,) + (1,) * z1.ndim)
    for _ in range(m):
        nxt = z1 * row
        nxt[1:] -= jj[1:] * row[:-1]
        row = nxt
    return row[n]


@lru_cache(maxsize=512)
def _unit_poly_coeffs(m: int, n: int) -> tuple[tuple[int, int], ...]:
    """Gaussian-integer coefficients of ``x^j`` in ``(x + i)^m (x - i)^n``."""
    coeffs = [(1, 0)]
    for factor, count in (((0, 1), m), ((0, -1), n)):
        for _ in range(count):
            nxt = [(0, 0)] * (len(coeffs) + 1)
            for j, (a, b) in enumerate(coeffs):
                ra, rb = nxt[j + 1]
                nxt[j + 1] = (ra + a, rb + b)  # times x
                fa, fb = factor
                pa, pb = nxt[j]
                nxt[j] = (pa + a * fa - b * fb, pb + a * fb + b * fa)
            coeffs = nxt
    return tuple(coeffs)


def _dyadic_parts(values: Sequence[float]) -> tuple[list[int], int]:
    """Integers ``k_i`` and a shift ``s`` with ``values[i] == k_i / 2**s`` exactly."""
    ratios = [float(v).as_integer_ratio() for v in values]
    s = max(den.bit_length() - 1 for _, den in ratios)
    return [num << (s - (den.bit_length() - 1)) for num, den in ratios], s


def _scaled_hermite1d(re: int, im: int, s: int, nmax: int) -> list[tuple[int, int]]:
    """``2**(j s) H_j(x)`` at ``x = (re + i im) / 2**s`` as Gaussian integers."""
    out = [(1, 0)]
    if nmax >= 1:
        out.append((2 * re, 2 * im))
    four_s = 1 << (2 * s)
    for j in range(1, nmax):
        a, b = out[j]
        pa, pb = out[j - 1]
        c = 2 * j * four_s
        out.append((2 * (re * a - im * b) - c * pa, 2 * (re * b + im * a) - c * pb))
    return out


def _eval_hermite1d_scalar(m: int, n: int, z1: complex, z2: complex) -> complex:
    (x1, y1, x2, y2), s = _dyadic_parts((z1.real, z1.imag, z2.real, z2.imag))
    # a = (z1 + z2) / 2 and b = (z1 - z2) / (2i) = ((y1 - y2) - i (x1 - x2)) / 2
    s += 1
    a_re, a_im = x1 + x2, y1 + y2
    b_re, b_im = y1 - y2, -(x1 - x2)
    big_n = m + n
    ha = _scaled_hermite1d(a_re, a_im, s, big_n)
    hb = _scaled_hermite1d(b_re, b_im, s, big_n)
    acc_re = acc_im = 0
    for j, (c_re, c_im) in enumerate(_unit_poly_coeffs(m, n)):
        if c_re == 0 and c_im == 0:
            continue
        pa, pb = ha[j]
        qa, qb = hb[big_n - j]
        t_re = pa * qa - pb * qb
        t_im = pa * qb + pb * qa
        acc_re += c_re * t_re - c_im * t_im
        acc_im += c_re * t_im + c_im * t_re
    den = 1 << (big_n * (s + 1))
    return complex(_fraction_to_float(acc_re, den), _fraction_to_float(acc_im, den))


def _fraction_to_float(num: int, den: int) -> float:
    # correctly rounded, and well defined even when num/den overflows
    try:
        return num / den
    except OverflowError:
        return math.copysign(math.inf, num)


def _eval_laguerre(m: int, n: int, z1, z2, atol: float):
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    gap = np.abs(z2 - np.conj(z1))
    if np.any(gap > atol * np.maximum(1.0, np.abs(z1))):
        raise DomainError("laguerre_diagonal requires z2 == conj(z1)")
    r2 = (z1 * np.conj(z1)).real
    if m >= n:
        lag = special.eval_genlaguerre(n, m - n, r2)
        return (-1) ** n * float(factorial(n)) * z1 ** (m - n) * lag
    lag = special.eval_genlaguerre(m, n - m, r2)
    return (-1) ** m * float(factorial(m)) * np.conj(z1) ** (n - m) * lag


def eval_hermite(m: int, n: int, z1, z2, method: str = "recurrence", *, diagonal_atol: float = 1e-12):
    """Evaluate ``H_{m,n}(z1, z2)``.

    Parameters
    ----------
    m, n : int
        Bi-degree, both non-negative.
    z1, z2 : complex or array_like
        Arguments; arrays broadcast against each other.
    method : {"direct", "recurrence", "hermite1d", "laguerre_diagonal"}
    diagonal_atol : float
        Tolerance for the ``z2 == conj(z1)`` requirement of
        ``laguerre_diagonal`` (relative to ``max(1, |z1|)``).

    Returns
    -------
    complex or ndarray

    Raises
    ------
    DomainError
        For negative degrees, an unknown method, non-finite scalar input,
        or ``laguerre_diagonal`` off the conjugate slice.
    """
    _check_degrees(m, n)
    scalar = np.ndim(z1) == 0 and np.ndim(z2) == 0
    if scalar:
        ComplexPoint.make(z1, z2)
    if method == "direct":
        out = _eval_direct(m, n, np.asarray(z1, dtype=complex), np.asarray(z2, dtype=complex))
    elif method == "recurrence":
        out = _eval_recurrence(m, n, z1, z2)
    elif method == "hermite1d":
        if scalar:
            return _eval_hermite1d_scalar(m, n, complex(z1), complex(z2))
        a1, a2 = np.broadcast_arrays(np.asarray(z1, dtype=complex), np.asarray(z2, dtype=complex))
        out = np.array(
            [_eval_hermite1d_scalar(m, n, complex(u), complex(v)) for u, v in zip(a1.ravel(), a2.ravel())],
            dtype=complex,
        ).reshape(a1.shape)
    elif method == "laguerre_diagonal":
        out = _eval_laguerre(m, n, z1, z2, diagonal_atol)
    else:
        raise DomainError(f"unknown method {method!r}; choose from {METHODS}")
    return complex(out) if scalar else out


def normalized_table(m: int, n: int, z1, z2, lam: float) -> np.ndarray:
    """All ``lam**(i+j) H_{i,j}(z1, z2) / sqrt(i! j!)`` for ``i <= m, j <= n``.

    Uses the rescaled ladder::

        H~_{i+1,j} = (lam z1 H~_{i,j} - lam**2 sqrt(j) H~_{i,j-1}) / sqrt(i+1)

    with first row ``H~_{0,j} = (lam z2)**j / sqrt(j!)``.  With ``lam = 1``
    this gives ``H / sqrt(m! n!)``.  Shape ``(m+1, n+1) + shape(z)``.
    """
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    z1, z2 = np.broadcast_arrays(z1, z2)
    lz1 = lam * z1
    lz2 = lam * z2
    lam2 = lam * lam
    out = np.empty((m + 1, n + 1) + z1.shape, dtype=complex)
    row = np.empty((n + 1,) + z1.shape, dtype=complex)
    row[0] = 1.0
    for j in range(n):
        row[j + 1] = lz2 * row[j] / math.sqrt(j + 1)
    out[0] = row
    sq = np.sqrt(np.arange(n + 1, dtype=float)).reshape((n + 1,) + (1,) * z1.ndim)
    for i in range(m):
        nxt = lz1 * row
        nxt[1:] -= lam2 * sq[1:] * row[:-1]
        row = nxt / math.sqrt(i + 1)
        out[i + 1] = row
    return out


def eval_hermite_normalized(m: int, n: int, alpha, z1, z2):
    """``H~^(alpha)_{m,n}(z1, z2) = lam**(m+n) H_{m,n} / sqrt(m! n!)``.

    Parameters
    ----------
    m, n : int
    alpha : float or Alpha
        Deformation parameter; ``lam = sqrt((1-alpha)/(1+alpha))``.
    z1, z2 : complex or array_like

    Examples
    --------
    >>> round(abs(eval_hermite_normalized(1, 1, 0.5, 2.0, 2.0)), 12)
    1.0
    """
    _check_degrees(m, n)
    a = Alpha.coerce(alpha)
    out = normalized_table(m, n, z1, z2, a.lambda_)[m, n]
    return complex(out) if np.ndim(out) == 0 else out


# --- checks ---------------------------------------------------------------


def _series_factor(x: complex, nmax: int) -> np.ndarray:
    """``x**k / sqrt(k!)`` for ``k = 0..nmax`` by a stable recursion."""
    out = np.empty(nmax + 1, dtype=complex)
    out[0] = 1.0
    for k in range(nmax):
        out[k + 1] = out[k] * x / math.sqrt(k + 1)
    return out


def _fsum_complex(values) -> complex:
    values = np.asarray(values, dtype=complex).ravel()
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _by_total_degree(grid: np.ndarray) -> np.ndarray:
    """Flatten an ``(M+1) x (N+1)`` array in order of increasing ``i + j``."""
    rows, cols = grid.shape[:2]
    order = sorted(((i, j) for i in range(rows) for j in range(cols)), key=lambda t: (t[0] + t[1], t[0]))
    return np.array([grid[i, j] for i, j in order])


def _abs_series_sum(x: float, tail_from: int) -> tuple[float, float]:
    """``sum_k x**k / sqrt(k!)`` in full and its tail from ``k = tail_from``."""
    total = 0.0
    tail = 0.0
    k = 0
    while True:
        term = math.exp(k * math.log(x) - 0.5 * lgamma(k + 1)) if x > 0 else (1.0 if k == 0 else 0.0)
        total += term
        if k >= tail_from:
            tail += term
        if k > max(tail_from, 2 * x * x + 10) and term < 1e-300 + 1e-18 * total:
            break
        k += 1
    return total, tail


def generating_function_check(
    s: complex, t: complex, z1: complex, z2: complex, M: int = 30, *, tol_rel: float = 1e-10
) -> VerificationReport:
    """Truncated double generating series against ``exp(z1 s + z2 t - s t)``.

    The absolute tolerance is the explicit tail bound obtained by summing
    ``|s|**m |t|**n e^{|z1||z2|} / sqrt(m! n!)`` over the omitted indices,
    plus a rounding allowance proportional to the sum of term magnitudes.
    """
    if M < 0:
        raise DomainError("truncation order must be non-negative")
    start = time.perf_counter()
    table = normalized_table(M, M, z1, z2, 1.0)  # H / sqrt(m! n!)
    fs = _series_factor(complex(s), M)
    ft = _series_factor(complex(t), M)
    terms = fs[:, None] * ft[None, :] * table
    value = _fsum_complex(_by_total_degree(terms))
    reference = cmath.exp(z1 * s + z2 * t - s * t)
    bound_scale = math.exp(abs(z1) * abs(z2))
    a_full, a_tail = _abs_series_sum(abs(s), M + 1)
    b_full, b_tail = _abs_series_sum(abs(t), M + 1)
    tail_bound = bound_scale * (a_tail * b_full + (a_full - a_tail) * b_tail)
    rounding = 64 * np.finfo(float).eps * float(np.abs(terms).sum())
    return VerificationReport.build(
        "generating_function",
        "double generating function of H_{m,n}",
        {"s": s, "t": t, "z1": z1, "z2": z2, "M": M},
        value,
        reference,
        tol_abs=tail_bound + rounding,
        tol_rel=tol_rel,
        runtime_ms=1e3 * (time.perf_counter() - start),
        details={"tail_bound": tail_bound},
    )


def partial_generating_check(
    which: str, s_or_t: complex, d_fixed: int, z1: complex, z2: complex, M: int = 30,
    *, tol_rel: float = 1e-10,
) -> VerificationReport:
    """Partial generating series with one index held fixed.

    ``which="sum_over_m"`` checks ``sum_m s^m/m! H_{m,n} = (z2 - s)^n e^{z1 s}``;
    ``which="sum_over_n"`` checks ``sum_n t^n/n! H_{m,n} = (z1 - t)^m e^{z2 t}``.
    """
    start = time.perf_counter()
    x = complex(s_or_t)
    if which == "sum_over_m":
        col = normalized_table(M, d_fixed, z1, z2, 1.0)[:, d_fixed]
        reference = (z2 - x) ** d_fixed * cmath.exp(z1 * x)
    elif which == "sum_over_n":
        col = normalized_table(d_fixed, M, z1, z2, 1.0)[d_fixed, :]
        reference = (z1 - x) ** d_fixed * cmath.exp(z2 * x)
    else:
        raise DomainError("which must be 'sum_over_m' or 'sum_over_n'")
    # s^k/k! H = (s^k/sqrt(k!)) * sqrt(d!) * H/sqrt(k! d!)
    terms = _series_factor(x, M) * math.sqrt(factorial(d_fixed)) * col
    value = _fsum_complex(terms)
    full, tail = _abs_series_sum(abs(x), M + 1)
    tail_bound = math.exp(abs(z1) * abs(z2)) * math.sqrt(factorial(d_fixed)) * tail
    rounding = 64 * np.finfo(float).eps * float(np.abs(terms).sum())
    return VerificationReport.build(
        f"partial_generating_{which}",
        "partial generating function of H_{m,n}",
        {"which": which, "s_or_t": x, "d_fixed": d_fixed, "z1": z1, "z2": z2, "M": M},
        value,
        reference,
        tol_abs=tail_bound + rounding,
        tol_rel=tol_rel,
        runtime_ms=1e3 * (time.perf_counter() - start),
    )


BOUND_SLACK = 1e-12


def bound_check(m: int, n: int, z1: complex, z2: complex) -> VerificationReport:
    """``|H_{m,n}(z1, z2)| <= sqrt(m! n!) e^{|z1||z2|}``, compared in log space.

    Equality holds for ``H_{n,n}`` at the origin, so a rounding slack of
    ``1e-12`` in the logarithm is allowed.  ``abs_err`` is the size of the
    violation (zero when the bound holds).
    """
    start = time.perf_counter()
    _check_degrees(m, n)
    h0 = complex(normalized_table(m, n, z1, z2, 1.0)[m, n])  # H / sqrt(m! n!)
    lhs = math.log(abs(h0)) if h0 != 0 else -math.inf
    rhs = abs(z1) * abs(z2)
    violation = max(0.0, lhs - rhs)
    return VerificationReport(
        check_id="bound",
        identity="|H_{m,n}| <= sqrt(m! n!) exp(|z1||z2|)",
        inputs={"m": m, "n": n, "z1": [z1.real, z1.imag] if isinstance(z1, complex) else [float(z1), 0.0],
                "z2": [z2.real, z2.imag] if isinstance(z2, complex) else [float(z2), 0.0]},
        computed=lhs + 0.5 * (lgamma(m + 1) + lgamma(n + 1)),
        reference=rhs + 0.5 * (lgamma(m + 1) + lgamma(n + 1)),
        abs_err=violation,
        rel_err=violation,
        tol_abs=BOUND_SLACK,
        tol_rel=0.0,
        passed=violation <= BOUND_SLACK,
        runtime_ms=1e3 * (time.perf_counter() - start),
    )


def default_t_sequence(kmax: int = 12) -> list[float]:
    """``t = 2**-k`` for ``k = 1..kmax``."""
    return [2.0 ** -k for k in range(1, kmax + 1)]


def default_alpha_sequence(kmax: int = 12) -> list[float]:
    """``alpha = 1 - 2**-k`` for ``k = 1..kmax``."""
    return [1.0 - 2.0 ** -k for k in range(1, kmax + 1)]


def _relative(err: float, scale: float) -> float:
    if scale > 0:
        return err / scale
    return 0.0 if err == 0 else math.inf


def _non_increasing(values: Sequence[float], slack: float) -> bool:
    return all(b <= a + slack for a, b in zip(values, values[1:]))


def scaling_limit_check(
    m: int, n: int, z1: complex, z2: complex, t_sequence: Sequence[float] | None = None,
    *, tol_abs: float = 1e-3,
) -> VerificationReport:
    """``t**(m+n) H_{m,n}(z1/t, z2/t) -> z1**m z2**n`` as ``t -> 0``.

    Passes when ``e(t)`` is non-increasing over the second half of the
    sequence and its last value is below ``tol_abs``.  The full sequence of
    errors is returned in ``details["errors"]``.
    """
    start = time.perf_counter()
    ts = list(default_t_sequence() if t_sequence is None else t_sequence)
    if any(not (0 < t <= 1) for t in ts):
        raise DomainError("t values must lie in (0, 1]")
    target = complex(z1) ** m * complex(z2) ** n
    errors = [abs(t ** (m + n) * eval_hermite(m, n, z1 / t, z2 / t, "direct") - target) for t in ts]
    scale = max(1.0, abs(target))
    monotone = _non_increasing(errors[len(errors) // 2:], 8 * np.finfo(float).eps * scale)
    final = errors[-1]
    passed = monotone and final <= tol_abs
    return VerificationReport(
        check_id="scaling_limit",
        identity="t^(m+n) H_{m,n}(z/t) -> z1^m z2^n",
        inputs={"m": m, "n": n, "z1": [complex(z1).real, complex(z1).imag],
                "z2": [complex(z2).real, complex(z2).imag], "t_sequence": ts},
        computed=final,
        reference=0.0,
        abs_err=final if monotone else math.inf,
        rel_err=final / scale if monotone else math.inf,
        tol_abs=tol_abs,
        tol_rel=0.0,
        passed=passed,
        runtime_ms=1e3 * (time.perf_counter() - start),
        details={"errors": errors, "monotone_tail": monotone},
    )


def tilde_limit_arguments(alpha: float, u1: complex, u2: complex) -> tuple[complex, complex]:
    """The substituted arguments ``((u1 - sqrt(a) u2), (conj u1 + sqrt(a) conj u2)) / sqrt(1 - a)``."""
    ra = math.sqrt(alpha)
    s = math.sqrt(1.0 - alpha)
    u1, u2 = complex(u1), complex(u2)
    return (u1 - ra * u2) / s, (u1.conjugate() + ra * u2.conjugate()) / s


def tilde_limit_value(m: int, n: int, u1: complex, u2: complex) -> complex:
    """The monomial limit ``xi1**m xi2**n / sqrt(m! n!)``, with ``xi`` as below.

    ``xi1 = (u1 - u2)/sqrt(2)`` and ``xi2 = (conj u1 + conj u2)/sqrt(2)``.
    """
    u1, u2 = complex(u1), complex(u2)
    xi1 = (u1 - u2) / math.sqrt(2)
    xi2 = (u1.conjugate() + u2.conjugate()) / math.sqrt(2)
    return xi1 ** m * xi2 ** n / math.sqrt(factorial(m) * factorial(n))


def tilde_limit_check(
    m: int, n: int, u1: complex, u2: complex, alpha_sequence: Sequence[float] | None = None,
    *, tol_abs: float = 1e-3,
) -> VerificationReport:
    """Convergence of ``H~^(alpha)_{m,n}`` at the substituted arguments as ``alpha -> 1``.

    The limit is the unit-normalized monomial (no ``1/pi`` factor).  The
    residual against the ``1/pi``-scaled monomial is reported as well in
    ``details["residuals_with_inv_pi"]``; it tends to a non-zero constant
    whenever the monomial is non-zero.  Passes when the residual sequence is
    non-increasing and its last value is below ``tol_abs``.
    """
    start = time.perf_counter()
    alphas = list(default_alpha_sequence() if alpha_sequence is None else alpha_sequence)
    if any(not (0 < a < 1) for a in alphas):
        raise DomainError("alpha values must lie in (0, 1)")
    limit = tilde_limit_value(m, n, u1, u2)
    residuals = []
    residuals_pi = []
    for a in alphas:
        w1, w2 = tilde_limit_arguments(a, u1, u2)
        val = eval_hermite_normalized(m, n, a, w1, w2)
        residuals.append(abs(val - limit))
        residuals_pi.append(abs(val - limit / math.pi))
    monotone = _non_increasing(residuals, 1e-13 * max(1.0, abs(limit)))
    final = residuals[-1]
    passed = monotone and final <= tol_abs
    return VerificationReport(
        check_id="tilde_limit",
        identity="H~^(alpha)_{m,n} at substituted arguments -> monomial, alpha -> 1",
        inputs={"m": m, "n": n, "u1": [complex(u1).real, complex(u1).imag],
                "u2": [complex(u2).real, complex(u2).imag], "alpha_sequence": alphas},
        computed=final,
        reference=0.0,
        abs_err=final if monotone else math.inf,
        rel_err=_relative(final, abs(limit)) if monotone else math.inf,
        tol_abs=tol_abs,
        tol_rel=0.0,
        passed=passed,
        runtime_ms=1e3 * (time.perf_counter() - start),
        details={"residuals": residuals, "residuals_with_inv_pi": residuals_pi, "monotone": monotone},
    )
