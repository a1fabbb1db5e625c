"""Holomorphic Hermite polynomials in two complex variables.

Subpackages
-----------
exact
    Exact Gaussian-rational polynomial algebra and identity checks.
evaluate
    Floating-point evaluation of ``H_{m,n}`` and its normalized form.
kernels
    Hermite functions, reproducing kernels and Bargmann-type kernels.
quadrature
    Gauss-Hermite rules, tensor integration over ``C^2`` and Monte Carlo.
verify
    End-to-end verification suites producing :class:`VerificationReport`.
cli
    The ``h2v`` command-line tool.
"""
from .errors import AccuracyWarning, DomainError, IntegrationError, RangeError
from .evaluate import Alpha, ComplexPoint, eval_hermite, eval_hermite_normalized
from .exact import BiPoly, GaussianRational, hermite_exact_direct
from .report import VerificationReport

__all__ = [
    "AccuracyWarning",
    "Alpha",
    "BiPoly",
    "ComplexPoint",
    "DomainError",
    "GaussianRational",
    "IntegrationError",
    "RangeError",
    "VerificationReport",
    "eval_hermite",
    "eval_hermite_normalized",
    "hermite_exact_direct",
]

__version__ = "0.1.0"
