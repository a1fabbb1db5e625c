"""Tour: evaluating H_{m,n} and checking orthogonality under the alpha-weight.

Run with ``python3 demos/orthogonality_tour.py``.
"""
from __future__ import annotations

import numpy as np

from h2v import eval_hermite, hermite_exact_direct
from h2v.verify import hermite_function_gram, normalized_gram, raw_orthogonality


def main() -> None:
    print("H_{2,1} as an exact polynomial:", hermite_exact_direct(2, 1).to_json())
    for method in ("direct", "recurrence", "hermite1d"):
        print(f"  H_(2,1)(i, 1) via {method:10s} = {eval_hermite(2, 1, 1j, 1, method)}")

    print("\nGram matrices of the normalized polynomials (total degree <= 5, 12 nodes/axis):")
    for alpha in (0.25, 0.5, 0.75):
        gram, pairs = normalized_gram(alpha, 5, 12)
        err = np.abs(gram - np.eye(len(pairs))).max()
        print(f"  alpha = {alpha}: {len(pairs)} polynomials, max |G - I| = {err:.2e}")

    rep = raw_orthogonality(0.5, 0, 0, 0, 0)
    print(f"\nUnnormalized weighted integral of 1 * 1 at alpha = 1/2: {rep.computed} (expected {rep.reference})")

    gram, pairs = hermite_function_gram(0.75, 4, 12)
    print(f"Hermite functions at alpha = 3/4: max |G - I| = {np.abs(gram - np.eye(len(pairs))).max():.2e}")


if __name__ == "__main__":
    main()
