"""Tour: limits as alpha -> 1 and the growth bound on H_{m,n}.

Run with ``python3 demos/limits_and_bound.py``.
"""
from __future__ import annotations

import numpy as np

from h2v.evaluate import bound_check, scaling_limit_check, tilde_limit_check
from h2v.verify import kernel_limit_errors

ALPHAS = [1 - 2.0**-k for k in range(1, 11)]


def main() -> None:
    rep = scaling_limit_check(1, 1, 1, 1, [2.0**-k for k in range(1, 6)])
    print("Scaling limit for (1,1) at z = (1,1); the error equals t^2:")
    print("  ", ["%.3e" % e for e in rep.details["errors"]])

    print("\nTilde limit residuals along alpha = 1 - 2^-k:")
    for m, n, u in [(1, 0, (1, 0)), (2, 2, (0.3 + 0.4j, -0.5j)), (3, 3, (1, 0))]:
        res = tilde_limit_check(m, n, *u, ALPHAS).details["residuals"]
        mono = all(b < a for a, b in zip(res, res[1:]))
        print(f"  ({m},{n}) at u = {u}: {' '.join('%.1e' % r for r in res)}  monotone: {mono}")

    rng = np.random.default_rng(0)
    pts = rng.random((50, 2)) * np.exp(2j * np.pi * rng.random((50, 2)))
    xis = [tuple(p) for p in pts[:25]]
    zetas = [tuple(p) for p in pts[25:]]
    print("\nKernel limit: max error halves with each step (first order in 1 - alpha):")
    prev = None
    for k, a in enumerate(ALPHAS, 1):
        err = kernel_limit_errors(a, xis, zetas).max()
        ratio = "" if prev is None else f"  ratio {prev / err:.3f}"
        print(f"  k = {k:2d}: {err:.3e}{ratio}")
        prev = err

    print("\nGrowth bound |H_{m,n}| <= sqrt(m! n!) exp(|z1||z2|):")
    for args in [(5, 5, 1j, -1j), (1, 0, 3, 0), (4, 2, 2 + 1j, 0.1)]:
        r = bound_check(*args)
        print(f"  (m, n, z1, z2) = {args}: {'holds' if r.passed else 'violated'}")


if __name__ == "__main__":
    main()
