"""Exchange-matrix machinery: even/odd vectors and centro-symmetry.

The exchange matrix E has ones on the counter-diagonal; conjugation
``X -> E X E`` is an involution whose fixed points are the centro-symmetric
matrices and whose negated points are the centro-skew ones.  Vectors fixed
by E are even (palindromic), vectors negated by E are odd.  Both actions
are realized by index reversal, never by materializing E.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dense import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    as_vector,
    frobenius_norm,
    solve_dense,
)
from .circulant import EigenPair


class NotCentroSymmetricError(ValueError):
    """Input failed the centro-symmetry predicate."""


class NotCentroSkewError(ValueError):
    """Input failed the centro-skew predicate."""


def exchange_dense(n: int) -> np.ndarray:
    """Ones on the counter-diagonal, zeros elsewhere."""
    if n < 1:
        raise ValueError("size must be >= 1")
    return np.eye(n, dtype=np.complex128)[::-1]


def reverse(x) -> np.ndarray:
    """The action of the exchange matrix on a vector, in O(n)."""
    return as_vector(x)[::-1]


def _flip_conjugate(x: np.ndarray) -> np.ndarray:
    # E X E reverses both the row and the column order
    return x[::-1, ::-1]


@dataclass(frozen=True)
class EvenOddSplit:
    """x = even + odd with reverse(even) = even and reverse(odd) = -odd."""

    even: np.ndarray
    odd: np.ndarray


def even_odd_split(x) -> EvenOddSplit:
    x = as_vector(x)
    rx = x[::-1]
    return EvenOddSplit(even=(x + rx) / 2, odd=(x - rx) / 2)


@dataclass(frozen=True)
class CentroSplit:
    """X = sym + skew with sym centro-symmetric and skew centro-skew."""

    sym: np.ndarray
    skew: np.ndarray


def centro_split(x) -> CentroSplit:
    x = as_matrix(x)
    if x.shape[0] != x.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {x.shape}")
    fx = _flip_conjugate(x)
    return CentroSplit(sym=(x + fx) / 2, skew=(x - fx) / 2)


def _entrywise_tol(x: np.ndarray, tol: Tolerance) -> float:
    # scale-invariant classification threshold
    return tol.abs_eps + tol.rel_eps * float(np.max(np.abs(x), initial=0.0))


def is_centro_symmetric(x, tol: Tolerance = DEFAULT_TOL) -> bool:
    x = as_matrix(x)
    if x.shape[0] != x.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {x.shape}")
    return bool(np.max(np.abs(x - _flip_conjugate(x))) <= _entrywise_tol(x, tol))


def is_centro_skew(x, tol: Tolerance = DEFAULT_TOL) -> bool:
    x = as_matrix(x)
    if x.shape[0] != x.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {x.shape}")
    return bool(np.max(np.abs(x + _flip_conjugate(x))) <= _entrywise_tol(x, tol))


@dataclass(frozen=True)
class EvenOddBasis:
    """Orthonormal bases: columns of p_cols even, columns of q_cols odd.

    With r = ceil(n/2) and s = floor(n/2), the n x (r+s) concatenation
    (P, Q) is unitary.
    """

    p_cols: np.ndarray
    q_cols: np.ndarray

    @property
    def n(self) -> int:
        return self.p_cols.shape[0]


def even_odd_basis(n: int) -> EvenOddBasis:
    """Paired columns (e_k +/- e_{n+1-k})/sqrt(2), k ascending; for odd n the
    middle coordinate vector closes the even basis."""
    if n < 1:
        raise ValueError("size must be >= 1")
    half = n // 2
    r = n - half
    p = np.zeros((n, r), dtype=np.complex128)
    q = np.zeros((n, half), dtype=np.complex128)
    root_half = 1.0 / np.sqrt(2.0)
    for k in range(half):
        p[k, k] = root_half
        p[n - 1 - k, k] = root_half
        q[k, k] = root_half
        q[n - 1 - k, k] = -root_half
    if n % 2 == 1:
        p[half, r - 1] = 1.0
    return EvenOddBasis(p_cols=p, q_cols=q)


def block_form(x, basis: EvenOddBasis):
    """The four blocks of X in the even/odd basis: (P*XP, P*XQ, Q*XP, Q*XQ)."""
    x = as_matrix(x)
    if x.shape != (basis.n, basis.n):
        raise ValueError(f"shape mismatch: {x.shape} vs basis size {basis.n}")
    p, q = basis.p_cols, basis.q_cols
    ph, qh = p.conj().T, q.conj().T
    return ph @ x @ p, ph @ x @ q, qh @ x @ p, qh @ x @ q


def solve_centro_symmetric(a, w, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Solve A z = w through the two half-size even/odd systems.

    A must be centro-symmetric to tolerance; then P*AP and Q*AQ carry the
    whole problem and z = P y1 + Q y2 recombines the half-size solutions.
    """
    a = as_matrix(a)
    w = as_vector(w)
    if not is_centro_symmetric(a, tol):
        raise NotCentroSymmetricError("matrix is not centro-symmetric to tolerance")
    if a.shape[0] != w.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} x {w.shape}")
    basis = even_odd_basis(a.shape[0])
    p, q = basis.p_cols, basis.q_cols
    y1 = solve_dense(p.conj().T @ a @ p, p.conj().T @ w, tol)
    y2 = solve_dense(q.conj().T @ a @ q, q.conj().T @ w, tol)
    return p @ y1 + q @ y2


def reflect_eigenpair(k, pair: EigenPair, tol: Tolerance = DEFAULT_TOL) -> EigenPair:
    """Map an eigenpair (lambda, z) of a centro-skew K to (-lambda, Ez).

    The input residual ||Kz - lambda z|| must already be within tolerance;
    the reflected pair then satisfies the same bound.
    """
    k = as_matrix(k)
    if not is_centro_skew(k, tol):
        raise NotCentroSkewError("matrix is not centro-skew to tolerance")
    z = as_vector(pair.vector)
    residual = float(np.linalg.norm(k @ z - pair.value * z))
    bound = tol.abs_eps + tol.rel_eps * frobenius_norm(k) * float(np.linalg.norm(z))
    if residual > bound:
        raise ValueError(
            f"input eigenpair residual {residual:.3e} exceeds tolerance {bound:.3e}"
        )
    return EigenPair(value=-pair.value, vector=z[::-1])
