"""Seeded invariant suites behind the ``verify`` command.

Each suite walks a size range, draws reproducible random instances from a
PCG64 generator, measures the worst violation it sees and reports it as a
(name, value, bound) metric.  A run passes when every metric value stays
within its bound.  Identical seed means identical draws, so repeated runs
produce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dense import SingularMatrixError, solve_dense
from .fourier import make_fourier_pack
from .centro import (
    block_form,
    centro_split,
    even_odd_basis,
    even_odd_split,
    solve_centro_symmetric,
)
from .relation import (
    SpecialTridiag,
    has_sign_pattern,
    nilpotent_realization,
    r_apply,
    r_apply_via_relation,
    r_dense,
    rank_one_defects,
    sign_pattern_of,
)

RELATION_SAMPLES = 100
CENTRO_SAMPLES = 50
SUITE_NAMES = ("relation", "nilpotent", "centro", "unitary", "all")
VERIFY_N_MIN = 2
VERIFY_N_MAX = 64


@dataclass(frozen=True)
class Metric:
    name: str
    value: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.value <= self.bound


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def ramp_even(n: int) -> np.ndarray:
    """The palindromic ramp (1, 2, ..., 2, 1)."""
    k = np.arange(1, n + 1)
    return np.minimum(k, n + 1 - k).astype(np.complex128)


def ramp_odd(n: int) -> np.ndarray:
    """The anti-palindromic ramp (1, 2, ..., -2, -1), zero center if n odd."""
    k = np.arange(1, n + 1)
    return (np.minimum(k, n + 1 - k) * np.sign(n + 1 - 2 * k)).astype(np.complex128)


def relation_suite(n_lo: int, n_hi: int, rng: np.random.Generator,
                   tol: float = 1e-10, samples: int = RELATION_SAMPLES) -> list[Metric]:
    """R_n applied directly vs through its even/odd circulant restrictions."""
    worst_relation = 0.0
    worst_defect = 0.0
    for n in range(n_lo, n_hi + 1):
        r = SpecialTridiag(n)
        d_plus, d_minus = rank_one_defects(n)
        vectors = [ramp_even(n), ramp_odd(n)]
        vectors.extend(_complex_normal(rng, n) for _ in range(samples))
        for x in vectors:
            scale = n * max(np.linalg.norm(x), 1e-300)
            diff = np.linalg.norm(r_apply(r, x) - r_apply_via_relation(r, x))
            worst_relation = max(worst_relation, diff / scale)
            split = even_odd_split(x)
            defect = np.linalg.norm(d_plus @ split.even) + np.linalg.norm(
                d_minus @ split.odd
            )
            worst_defect = max(worst_defect, defect / scale)
    return [
        Metric("max_relation_residual_over_n_normx", worst_relation, tol),
        Metric("max_defect_on_projected_parts", worst_defect, 1e-12),
    ]


def nilpotent_suite(n_lo: int, n_hi: int, tol_nilp: float = 1e-8) -> list[Metric]:
    """Power norms of the scaled operator, plus sign-pattern preservation."""
    metrics = []
    mismatches = 0
    for n in range(n_lo, n_hi + 1):
        scaled = nilpotent_realization(n)
        bound = tol_nilp * max(1.0, float(np.linalg.norm(scaled))) ** n
        power_norm = float(np.linalg.norm(np.linalg.matrix_power(scaled, n)))
        metrics.append(Metric(f"nilpotent_power_norm_n{n}", power_norm, bound))
        pattern = sign_pattern_of(r_dense(SpecialTridiag(n)))
        if not has_sign_pattern(scaled, pattern):
            mismatches += 1
    metrics.append(Metric("sign_pattern_mismatch_count", float(mismatches), 0.0))
    return metrics


def centro_suite(n_lo: int, n_hi: int, rng: np.random.Generator,
                 roundoff: float = 1e-12, solve_tol: float = 1e-8,
                 samples: int = CENTRO_SAMPLES) -> list[Metric]:
    """Projection algebra, the centro multiplication table, block structure
    and the half-size solver against the full LU."""
    worst_projection = 0.0
    worst_table = 0.0
    worst_parity = 0.0
    worst_blocks = 0.0
    worst_decomp = 0.0
    worst_solve = 0.0
    for n in range(n_lo, n_hi + 1):
        basis = even_odd_basis(n)
        for _ in range(samples):
            x = _complex_normal(rng, n)
            split = even_odd_split(x)
            scale = max(np.linalg.norm(x), 1e-300)
            # E+ + E- = I, projections idempotent and orthogonal
            residual = np.linalg.norm(split.even + split.odd - x)
            residual += np.linalg.norm(even_odd_split(split.even).even - split.even)
            residual += np.linalg.norm(even_odd_split(split.even).odd)
            residual += np.linalg.norm(even_odd_split(split.odd).odd - split.odd)
            residual += np.linalg.norm(even_odd_split(split.odd).even)
            worst_projection = max(worst_projection, residual / scale)

            parts = centro_split(_complex_normal(rng, (n, n)))
            other = centro_split(_complex_normal(rng, (n, n)))
            mscale = max(
                np.linalg.norm(parts.sym) + np.linalg.norm(parts.skew), 1e-300
            ) * max(np.linalg.norm(other.sym) + np.linalg.norm(other.skew), 1e-300)
            table = np.linalg.norm(centro_split(parts.sym @ other.sym).skew)
            table += np.linalg.norm(centro_split(parts.sym @ other.skew).sym)
            table += np.linalg.norm(centro_split(parts.skew @ other.sym).sym)
            table += np.linalg.norm(centro_split(parts.skew @ other.skew).skew)
            worst_table = max(worst_table, table / mscale)

            sym_scale = max(np.linalg.norm(parts.sym), 1e-300) * scale
            skew_scale = max(np.linalg.norm(parts.skew), 1e-300) * scale
            parity = (
                np.linalg.norm(even_odd_split(parts.sym @ split.even).odd)
                + np.linalg.norm(even_odd_split(parts.sym @ split.odd).even)
            ) / sym_scale
            parity = max(parity, (
                np.linalg.norm(even_odd_split(parts.skew @ split.even).even)
                + np.linalg.norm(even_odd_split(parts.skew @ split.odd).odd)
            ) / skew_scale)
            worst_parity = max(worst_parity, parity)

            # centro-symmetric: off-diagonal blocks vanish; centro-skew: diagonal
            b11, b12, b21, b22 = block_form(parts.sym, basis)
            blocks = np.linalg.norm(b12) + np.linalg.norm(b21)
            k11, _, _, k22 = block_form(parts.skew, basis)
            blocks += np.linalg.norm(k11) + np.linalg.norm(k22)
            worst_blocks = max(worst_blocks, blocks / max(
                np.linalg.norm(parts.sym) + np.linalg.norm(parts.skew), 1e-300))

            # K z = w iff K E+ z = E- w and K E- z = E+ w
            w = parts.skew @ x
            wsplit = even_odd_split(w)
            kscale = max(np.linalg.norm(parts.skew), 1e-300) * scale
            decomp = np.linalg.norm(parts.skew @ split.even - wsplit.odd)
            decomp += np.linalg.norm(parts.skew @ split.odd - wsplit.even)
            worst_decomp = max(worst_decomp, decomp / kscale)

        sym = _random_nonsingular_sym(rng, n)
        w = _complex_normal(rng, n)
        z_full = solve_dense(sym, w)
        z_half = solve_centro_symmetric(sym, w)
        worst_solve = max(
            worst_solve,
            float(np.linalg.norm(z_half - z_full)) / (1.0 + float(np.linalg.norm(z_full))),
        )
    return [
        Metric("max_projection_residual", worst_projection, roundoff),
        Metric("max_multiplication_table_residual", worst_table, roundoff * 10),
        Metric("max_action_parity_residual", worst_parity, roundoff),
        Metric("max_block_structure_residual", worst_blocks, roundoff),
        Metric("max_solution_decomposition_residual", worst_decomp, roundoff),
        Metric("max_half_vs_full_solve_difference", worst_solve, solve_tol),
    ]


def _random_nonsingular_sym(rng: np.random.Generator, n: int) -> np.ndarray:
    # the sym part of a Gaussian draw is almost surely fine; retry to be safe
    for _ in range(64):
        candidate = centro_split(_complex_normal(rng, (n, n))).sym
        try:
            solve_dense(candidate, np.ones(n, dtype=np.complex128))
        except SingularMatrixError:
            continue
        return candidate
    raise RuntimeError("could not draw a nonsingular centro-symmetric matrix")


def unitary_suite(n_lo: int, n_hi: int, tol: float = 1e-11) -> list[Metric]:
    """Unitarity defects of the plain and twisted transform matrices."""
    worst = 0.0
    for n in range(n_lo, n_hi + 1):
        pack = make_fourier_pack(n)
        for u in (pack.f_star, pack.h_star):
            defect = float(np.linalg.norm(u @ u.conj().T - np.eye(n)))
            worst = max(worst, defect / n)
    return [Metric("max_unitary_defect_over_n", worst, tol)]


def run_suite(suite: str, n_lo: int, n_hi: int, seed: int,
              relation_tol: float = 1e-10) -> list[Metric]:
    """Run one named suite (or all of them), each on a fresh seeded generator."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}")
    metrics: list[Metric] = []
    if suite in ("relation", "all"):
        metrics += relation_suite(n_lo, n_hi, np.random.default_rng(seed),
                                  tol=relation_tol)
    if suite in ("nilpotent", "all"):
        metrics += nilpotent_suite(n_lo, n_hi)
    if suite in ("centro", "all"):
        metrics += centro_suite(n_lo, n_hi, np.random.default_rng(seed))
    if suite in ("unitary", "all"):
        metrics += unitary_suite(n_lo, n_hi)
    return metrics
