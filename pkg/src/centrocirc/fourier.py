"""Roots of unity, the unitary Fourier matrix and its half-twisted variant.

Conventions (0-based array indices j, k; size n):

* ``omega = exp(2i*pi/n)`` is the primitive n-th root of unity and
  ``sigma = exp(i*pi/n)`` its square root, so ``sigma**2 == omega``.
* ``f_star[j, k] = omega**(j*k) / sqrt(n)`` -- the unitary synthesis
  matrix.  Its conjugate ``F = conj(f_star)`` is the analysis matrix.
* ``h_star = Diag(1, sigma, ..., sigma**(n-1)) @ f_star``, the twisted
  transform that diagonalizes skew-circulants.

Powers of the roots are always evaluated as ``exp`` of the exact angle for
each index (with the exponent reduced mod n), never by repeated
multiplication, so there is no error accumulation at large powers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RootOfUnity:
    """The pair omega = exp(2i*pi/n), sigma = exp(i*pi/n) for one size n."""

    n: int
    omega: complex
    sigma: complex


def root_of_unity(n: int) -> RootOfUnity:
    n = int(n)
    if n < 1:
        raise ValueError("size must be >= 1")
    return RootOfUnity(n=n, omega=np.exp(2j * np.pi / n), sigma=np.exp(1j * np.pi / n))


def omega_powers(n: int) -> np.ndarray:
    """[omega**0, ..., omega**(n-1)], each from its exact angle."""
    if n < 1:
        raise ValueError("size must be >= 1")
    return np.exp(2j * np.pi * np.arange(n) / n)


def sigma_powers(n: int) -> np.ndarray:
    """[sigma**0, ..., sigma**(n-1)], each from its exact angle."""
    if n < 1:
        raise ValueError("size must be >= 1")
    return np.exp(1j * np.pi * np.arange(n) / n)


def fourier_star_dense(n: int) -> np.ndarray:
    """The n x n matrix with entries omega**(j*k) / sqrt(n)."""
    if n < 1:
        raise ValueError("size must be >= 1")
    j = np.arange(n)
    # reduce j*k mod n before taking the angle: keeps every argument in [0, 2*pi)
    exponents = np.outer(j, j) % n
    return np.exp(2j * np.pi * exponents / n) / np.sqrt(n)


@dataclass(frozen=True)
class FourierPack:
    """Dense transform matrices and diagonals for one size n."""

    n: int
    f_star: np.ndarray
    omega_diag: np.ndarray
    omega_half_diag: np.ndarray
    h_star: np.ndarray


def make_fourier_pack(n: int) -> FourierPack:
    n = int(n)
    if n < 1:
        raise ValueError("size must be >= 1")
    f_star = fourier_star_dense(n)
    omega_half = sigma_powers(n)
    return FourierPack(
        n=n,
        f_star=f_star,
        omega_diag=omega_powers(n),
        omega_half_diag=omega_half,
        h_star=omega_half[:, None] * f_star,
    )


def dft_apply(x, inverse: bool = False) -> np.ndarray:
    """Multiply by F (forward) or by its inverse = F* (``inverse=True``).

    Unitary normalization 1/sqrt(n) in both directions, so a forward
    followed by an inverse is the identity to round-off.
    """
    x = np.asarray(x, dtype=np.complex128)
    if inverse:
        return np.fft.ifft(x, norm="ortho")
    return np.fft.fft(x, norm="ortho")


def h_apply(x, inverse: bool = False) -> np.ndarray:
    """Multiply by H (forward) or by its inverse = H* (``inverse=True``).

    H* is Diag(sigma**j) composed with F*, so the forward map is the
    conjugate twist followed by the forward transform.
    """
    x = np.asarray(x, dtype=np.complex128)
    twist = sigma_powers(x.shape[0])
    if inverse:
        return twist * np.fft.ifft(x, norm="ortho")
    return np.fft.fft(twist.conj() * x, norm="ortho")
