"""The near-Toeplitz tridiagonal operator and its circulant restrictions.

``R_n`` has -1 on the subdiagonal, +1 on the superdiagonal, and a diagonal
that is zero except for -1 in the (1,1) corner and +1 in the (n,n) corner.
It is centro-skew, and it acts as the circulant ``pi - pi^T`` on even
vectors and as the skew-circulant ``eta - eta^T`` on odd vectors.  The
defects

    D_plus  = R - (pi - pi^T)  = (e_n + e_1)(e_n - e_1)^T
    D_minus = R - (eta - eta^T) = (e_n - e_1)(e_n + e_1)^T

are rank one and annihilate the even resp. odd subspace, which is the whole
content of the decomposition.

Also here: sign patterns over {-1, 0, +1} and the positive diagonal scaling
``f_k = 1 / (2 sin((2k-1) pi / (2n)))`` that makes ``Diag(f) @ R_n``
nilpotent while preserving the sign pattern of ``R_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dense import DEFAULT_TOL, Tolerance, as_matrix, as_vector, matrix_power
from .circulant import (
    Circulant,
    SkewCirculant,
    circ_dense,
    circ_matvec,
    poly_eval,
    scirc_dense,
    scirc_matvec,
)
from .centro import even_odd_split


class ComplexEntriesError(ValueError):
    """Sign patterns are defined for real matrices only."""


@dataclass(frozen=True)
class SpecialTridiag:
    """The operator R_n, determined entirely by its size."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("size must be >= 2")


def r_dense(r: SpecialTridiag) -> np.ndarray:
    n = r.n
    out = np.zeros((n, n), dtype=np.complex128)
    idx = np.arange(n - 1)
    out[idx + 1, idx] = -1.0
    out[idx, idx + 1] = 1.0
    out[0, 0] = -1.0
    out[n - 1, n - 1] = 1.0
    return out


def lower_shift_dense(n: int) -> np.ndarray:
    """Ones on the subdiagonal only; the building block of the identities
    R = Z^T - Z - e1 e1^T + en en^T and its circulant analogues."""
    if n < 1:
        raise ValueError("size must be >= 1")
    out = np.zeros((n, n), dtype=np.complex128)
    idx = np.arange(n - 1)
    out[idx + 1, idx] = 1.0
    return out


def r_apply(r: SpecialTridiag, x) -> np.ndarray:
    """O(n) stencil: y_i = x_{i+1} - x_{i-1}, with the missing neighbours at
    the two ends replaced by the boundary value itself."""
    x = as_vector(x)
    n = r.n
    if x.shape[0] != n:
        raise ValueError(f"length mismatch: {n} vs {x.shape[0]}")
    y = np.empty(n, dtype=np.complex128)
    y[0] = x[1] - x[0]
    y[1:-1] = x[2:] - x[:-2]
    y[-1] = x[-1] - x[-2]
    return y


def pi_minus_pit_coeffs(n: int) -> Circulant:
    """pi - pi^T as a circulant: first row (0, 1, 0, ..., 0, -1)."""
    if n < 2:
        raise ValueError("size must be >= 2")
    coeffs = np.zeros(n, dtype=np.complex128)
    coeffs[1] += 1.0
    coeffs[n - 1] -= 1.0
    return Circulant(coeffs)


def eta_minus_etat_coeffs(n: int) -> SkewCirculant:
    """eta - eta^T as a skew-circulant: first row (0, 1, 0, ..., 0, 1)."""
    if n < 2:
        raise ValueError("size must be >= 2")
    coeffs = np.zeros(n, dtype=np.complex128)
    coeffs[1] += 1.0
    coeffs[n - 1] += 1.0
    return SkewCirculant(coeffs)


def r_apply_via_relation(r: SpecialTridiag, x) -> np.ndarray:
    """Apply R_n through its even/odd restrictions: the circulant part acts
    on the even component, the skew-circulant part on the odd component."""
    x = as_vector(x)
    n = r.n
    if x.shape[0] != n:
        raise ValueError(f"length mismatch: {n} vs {x.shape[0]}")
    split = even_odd_split(x)
    even_part = circ_matvec(pi_minus_pit_coeffs(n), split.even)
    odd_part = scirc_matvec(eta_minus_etat_coeffs(n), split.odd)
    return even_part + odd_part


def rank_one_defects(n: int) -> tuple[np.ndarray, np.ndarray]:
    """The two defects (D_plus, D_minus) of the decomposition, checked
    against their closed rank-one forms entry for entry."""
    if n < 2:
        raise ValueError("size must be >= 2")
    r = r_dense(SpecialTridiag(n))
    d_plus = r - circ_dense(pi_minus_pit_coeffs(n))
    d_minus = r - scirc_dense(eta_minus_etat_coeffs(n))
    e_first = np.zeros(n, dtype=np.complex128)
    e_last = np.zeros(n, dtype=np.complex128)
    e_first[0] = 1.0
    e_last[n - 1] = 1.0
    if not np.array_equal(d_plus, np.outer(e_last + e_first, e_last - e_first)):
        raise AssertionError("even-defect construction is broken")
    if not np.array_equal(d_minus, np.outer(e_last - e_first, e_last + e_first)):
        raise AssertionError("odd-defect construction is broken")
    return d_plus, d_minus


def restriction_spectra(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of the two restrictions of R_n.

    The even restriction pi - pi^T has values 2i sin(2 pi (k-1) / n) and the
    odd restriction eta - eta^T has values 2i sin((2k-1) pi / n), obtained by
    evaluating the coefficient polynomials at their roots of unity.
    """
    if n < 2:
        raise ValueError("size must be >= 2")
    even_coeffs = pi_minus_pit_coeffs(n).coeffs
    odd_coeffs = eta_minus_etat_coeffs(n).coeffs
    circ_roots = np.exp(2j * np.pi * np.arange(n) / n)
    scirc_roots = np.exp(1j * np.pi * (2 * np.arange(n) + 1) / n)
    even_values = np.array([poly_eval(even_coeffs, t) for t in circ_roots])
    odd_values = np.array([poly_eval(odd_coeffs, t) for t in scirc_roots])
    return even_values, odd_values


@dataclass(frozen=True)
class SignPattern:
    """n x n matrix with entries in {-1, 0, +1}."""

    n: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.int64)
        if entries.shape != (self.n, self.n):
            raise ValueError(f"expected shape {(self.n, self.n)}, got {entries.shape}")
        if not np.all(np.isin(entries, (-1, 0, 1))):
            raise ValueError("sign pattern entries must be -1, 0 or +1")
        object.__setattr__(self, "entries", entries)


def sign_pattern_of(a, tol: Tolerance = DEFAULT_TOL) -> SignPattern:
    """Entrywise signum with dead zone |a_ij| <= abs_eps -> 0."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a.imag)) > tol.abs_eps:
        raise ComplexEntriesError("matrix has entries with nonreal parts")
    real = a.real
    signs = np.sign(real).astype(np.int64)
    signs[np.abs(real) <= tol.abs_eps] = 0
    return SignPattern(n=a.shape[0], entries=signs)


def has_sign_pattern(a, pattern: SignPattern, tol: Tolerance = DEFAULT_TOL) -> bool:
    return bool(np.array_equal(sign_pattern_of(a, tol).entries, pattern.entries))


@dataclass(frozen=True)
class NilpotentScaling:
    """Positive diagonal f with f_k = 1 / (2 sin((2k-1) pi / (2n)))."""

    n: int
    f: np.ndarray


def nilpotent_scaling(n: int) -> NilpotentScaling:
    if n < 2:
        raise ValueError("size must be >= 2")
    theta = (2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n)
    return NilpotentScaling(n=n, f=1.0 / (2.0 * np.sin(theta)))


def nilpotent_realization(n: int) -> np.ndarray:
    """Diag(f) @ R_n: a nilpotent matrix with the sign pattern of R_n."""
    scaling = nilpotent_scaling(n)
    return scaling.f[:, None] * r_dense(SpecialTridiag(n))


def verify_nilpotent(a, tol_nilp: float = 1e-8) -> bool:
    """Numerical nilpotency check by powering.

    True when ||A^n||_F <= tol_nilp * max(1, ||A||_F)**n.  The bound is
    relative to ||A||**n because powering amplifies round-off by roughly
    that factor.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    power_norm = float(np.linalg.norm(matrix_power(a, n)))
    return bool(power_norm <= tol_nilp * max(1.0, norm) ** n)
