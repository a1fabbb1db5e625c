"""Tour: reproducing kernel and the Bargmann-type transform.

Run with ``python3 demos/kernel_and_transform.py``.
"""
from __future__ import annotations

from h2v.kernels import hermite_function, kernel_closed, kernel_truncated, phi_basis
from h2v.verify import bargmann_forward_values, inverse_values, reproducing_values


def main() -> None:
    alpha = 0.5
    z, w = (0.7 - 0.2j, 1.1j), (-0.4 + 0.3j, 0.9 + 0j)
    closed = kernel_closed(alpha, *z, *w)
    print(f"K(z; w) closed form: {closed:.12f}")
    for M in (5, 10, 20, 40, 60):
        approx = kernel_truncated(alpha, *z, *w, M)
        print(f"  truncated at total degree {M:2d}: relative error {abs(approx - closed) / abs(closed):.2e}")

    vals, pairs = reproducing_values(alpha, 2, [w], nodes=40)
    print("\nReproducing property <h_{m,n}, K(w; .)> = h_{m,n}(w):")
    for k, (m, n) in enumerate(pairs):
        print(f"  (m, n) = ({m}, {n}): error {abs(vals[k, 0] - hermite_function(m, n, alpha, *w).value):.1e}")

    fwd, pairs = bargmann_forward_values(alpha, 2, [z], nodes=40)
    inv, _ = inverse_values(alpha, 2, [w], nodes=40, reading="full")
    half, _ = inverse_values(alpha, 2, [w], nodes=40, reading="half")
    print("\nTransform U h_{m,n} = Phi_{m,n} and its inverse (full vs half Gaussian weight):")
    for k, (m, n) in enumerate(pairs):
        h = hermite_function(m, n, alpha, *w).value
        print(f"  ({m}, {n}): |U h - Phi| = {abs(fwd[k, 0] - phi_basis(m, n, *z)):.1e}, "
              f"|W Phi - h| full = {abs(inv[k, 0] - h):.1e}, half = {abs(half[k, 0] - h):.2e}")


if __name__ == "__main__":
    main()
