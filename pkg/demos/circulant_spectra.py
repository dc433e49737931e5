"""Walk through the circulant and skew-circulant machinery.

A circulant matrix is determined by its first row; every later row is the
cyclic right-shift of the one above.  The skew-circulant variant flips the
sign of each entry that wraps around below the diagonal.  Both families are
commutative polynomial algebras in a single generator, and both are
diagonalized by fixed unitary transforms, so eigenvalues come from
evaluating the first-row polynomial at roots of unity: no iterative
eigensolver anywhere.
"""

import numpy as np

from centrocirc import (
    Circulant,
    SkewCirculant,
    basic_circulant,
    basic_skew_circulant,
    circ_dense,
    circ_eigenpairs,
    circ_matvec,
    circ_mul,
    circ_spectrum,
    scirc_dense,
    scirc_mul,
    scirc_spectrum,
)

np.set_printoptions(precision=4, suppress=True, linewidth=100)


def main():
    n = 6
    print("The generator pi (cyclic shift) and its skew twin eta:")
    print(circ_dense(basic_circulant(n)).real)
    print()
    print(scirc_dense(basic_skew_circulant(n)).real)

    c = Circulant([2, -1, 0, 0, 0, -1])
    print("\nA familiar guest: Circ(2, -1, 0, ..., -1), the periodic")
    print("second-difference matrix:")
    print(circ_dense(c).real)

    values = circ_spectrum(c)
    print("\nIts eigenvalues, straight from the transform of the first row")
    print("(all real, all in [0, 4], as the analytic formula 2 - 2cos says):")
    print(np.sort(values.real))

    print("\nEigenpair residuals ||Av - lambda v|| for the same matrix:")
    dense = circ_dense(c)
    for pair in circ_eigenpairs(c):
        residual = np.linalg.norm(dense @ pair.vector - pair.value * pair.vector)
        print(f"  lambda = {pair.value.real:+.4f}   residual = {residual:.2e}")

    rng = np.random.default_rng(8)
    x = rng.standard_normal(n)
    fast = circ_matvec(c, x)
    slow = dense @ x
    print(f"\nFast transform-based matvec vs dense product: "
          f"gap = {np.linalg.norm(fast - slow):.2e}")

    a = Circulant([1, 2, 0, 0, 0, 0])
    b = Circulant([3, 0, 0, 0, 0, 1])
    prod = circ_mul(a, b)
    print("\nProducts never leave the algebra; coefficient arithmetic is")
    print("exact on integer inputs:")
    print("  Circ(1,2,0,0,0,0) * Circ(3,0,0,0,0,1) =", prod.coeffs.real)

    sa = SkewCirculant([1, 2, 0, 0, 0, 0])
    sb = SkewCirculant([3, 0, 0, 0, 0, 1])
    sprod = scirc_mul(sa, sb)
    print("  same rows, skew product (note the wrapped sign):", sprod.coeffs.real)

    print("\nSkew spectra live at the odd roots of unity; for the skew shift")
    print("itself they are exactly those roots:")
    print(scirc_spectrum(basic_skew_circulant(4)))


if __name__ == "__main__":
    main()
