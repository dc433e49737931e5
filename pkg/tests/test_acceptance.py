"""Acceptance gate: the eight release criteria, one pass/fail line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
print.  Every criterion pins its own tolerances; none of them consults the
library's defaults.
"""

import json
from contextlib import contextmanager

import numpy as np

from centrocirc import (
    Circulant,
    SkewCirculant,
    SpecialTridiag,
    basic_circulant,
    basic_skew_circulant,
    circ_dense,
    circ_eigenpairs,
    circ_mul,
    even_odd_basis,
    exchange_dense,
    has_sign_pattern,
    lower_shift_dense,
    make_fourier_pack,
    nilpotent_realization,
    r_apply,
    r_apply_via_relation,
    r_dense,
    rank_one_defects,
    scirc_dense,
    scirc_eigenpairs,
    scirc_mul,
    sigma_powers,
    sign_pattern_of,
)
from centrocirc.cli import main
from centrocirc.verify import centro_suite, ramp_even, ramp_odd

SEED = 20240615


@contextmanager
def criterion(num, label):
    try:
        yield
    except BaseException:
        print(f"criterion {num} ({label}): FAIL")
        raise
    print(f"criterion {num} ({label}): PASS")


def complex_normal(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def test_criterion_1_golden_matrices():
    with criterion(1, "golden matrices"):
        np.testing.assert_array_equal(
            r_dense(SpecialTridiag(5)),
            [
                [-1, 1, 0, 0, 0],
                [-1, 0, 1, 0, 0],
                [0, -1, 0, 1, 0],
                [0, 0, -1, 0, 1],
                [0, 0, 0, -1, 1],
            ],
        )
        np.testing.assert_array_equal(
            circ_dense(basic_circulant(4)),
            [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]],
        )
        np.testing.assert_array_equal(
            circ_dense(basic_circulant(5)),
            [
                [0, 1, 0, 0, 0],
                [0, 0, 1, 0, 0],
                [0, 0, 0, 1, 0],
                [0, 0, 0, 0, 1],
                [1, 0, 0, 0, 0],
            ],
        )
        np.testing.assert_array_equal(
            scirc_dense(basic_skew_circulant(4)),
            [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0]],
        )
        np.testing.assert_array_equal(
            scirc_dense(basic_skew_circulant(5)),
            [
                [0, 1, 0, 0, 0],
                [0, 0, 1, 0, 0],
                [0, 0, 0, 1, 0],
                [0, 0, 0, 0, 1],
                [-1, 0, 0, 0, 0],
            ],
        )
        np.testing.assert_array_equal(
            exchange_dense(4),
            [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
        )
        np.testing.assert_array_equal(
            lower_shift_dense(4),
            [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]],
        )


def test_criterion_2_relation_decomposition():
    with criterion(2, "direct application vs even/odd restrictions"):
        rng = np.random.default_rng(SEED)
        for n in range(2, 33):
            r = SpecialTridiag(n)
            vectors = [ramp_even(n), ramp_odd(n)]
            vectors += [complex_normal(rng, n) for _ in range(100)]
            for x in vectors:
                gap = np.linalg.norm(r_apply(r, x) - r_apply_via_relation(r, x))
                assert gap <= 1e-10 * n * np.linalg.norm(x)


def test_criterion_3_rank_one_identities():
    with criterion(3, "rank-one defects and their annihilated subspaces"):
        for n in range(2, 33):
            d_plus, d_minus = rank_one_defects(n)
            e = np.eye(n, dtype=np.complex128)
            first, last = e[:, 0], e[:, n - 1]
            np.testing.assert_array_equal(d_plus, np.outer(last + first, last - first))
            np.testing.assert_array_equal(d_minus, np.outer(last - first, last + first))
            zero = np.zeros(n)
            for k in range(n):
                np.testing.assert_array_equal(d_plus @ (e[:, k] + e[:, n - 1 - k]), zero)
                np.testing.assert_array_equal(d_minus @ (e[:, k] - e[:, n - 1 - k]), zero)


def test_criterion_4_spectral_decompositions():
    with criterion(4, "transform unitarity and eigenpair residuals"):
        for n in range(1, 65):
            pack = make_fourier_pack(n)
            for u in (pack.f_star, pack.h_star):
                defect = np.linalg.norm(u @ u.conj().T - np.eye(n))
                assert defect <= 1e-11 * n
        rng = np.random.default_rng(SEED + 4)
        for n in range(2, 33):
            for _ in range(50):
                coeffs = complex_normal(rng, n)
                bound = 1e-10 * n * np.linalg.norm(coeffs)
                for pairs, dense in (
                    (circ_eigenpairs(Circulant(coeffs)), circ_dense(Circulant(coeffs))),
                    (
                        scirc_eigenpairs(SkewCirculant(coeffs)),
                        scirc_dense(SkewCirculant(coeffs)),
                    ),
                ):
                    values = np.array([p.value for p in pairs])
                    vectors = np.column_stack([p.vector for p in pairs])
                    residuals = np.linalg.norm(
                        dense @ vectors - vectors * values, axis=0
                    )
                    assert np.max(residuals) <= bound


def test_criterion_5_algebraic_identities():
    with criterion(5, "generator powers, reconstruction, twist similarity"):
        rng = np.random.default_rng(SEED + 5)
        for n in range(2, 17):
            identity = np.zeros(n)
            identity[0] = 1.0
            pi_pow = basic_circulant(n)
            eta_pow = basic_skew_circulant(n)
            for k in range(1, n):
                # no power below n reaches +I or -I
                assert not np.array_equal(pi_pow.coeffs, identity)
                assert not np.array_equal(pi_pow.coeffs, -identity)
                assert not np.array_equal(eta_pow.coeffs, identity)
                assert not np.array_equal(eta_pow.coeffs, -identity)
                pi_pow = circ_mul(pi_pow, basic_circulant(n))
                eta_pow = scirc_mul(eta_pow, basic_skew_circulant(n))
            np.testing.assert_array_equal(pi_pow.coeffs, identity)
            np.testing.assert_array_equal(eta_pow.coeffs, -identity)

            # Circ(c) is the polynomial sum(c_k pi^(k-1)), exactly over integers
            c = rng.integers(-9, 10, n).astype(np.complex128)
            pi = circ_dense(basic_circulant(n))
            eta = scirc_dense(basic_skew_circulant(n))
            rebuilt_c = sum(
                c[k] * np.linalg.matrix_power(pi, k) for k in range(n)
            )
            rebuilt_s = sum(
                c[k] * np.linalg.matrix_power(eta, k) for k in range(n)
            )
            np.testing.assert_array_equal(circ_dense(Circulant(c)), rebuilt_c)
            np.testing.assert_array_equal(scirc_dense(SkewCirculant(c)), rebuilt_s)

            # eta comes from pi by the diagonal half-angle twist
            sigma = np.exp(1j * np.pi / n)
            twist = np.diag(sigma_powers(n))
            gap = np.linalg.norm(eta - sigma * (twist @ pi @ twist.conj()))
            assert gap <= 1e-12 * n


def test_criterion_6_centro_symmetry_suite():
    with criterion(6, "centro-symmetry invariants and half-size solver"):
        metrics = centro_suite(
            2, 16, np.random.default_rng(SEED + 6), roundoff=1e-12,
            solve_tol=1e-8, samples=50,
        )
        for metric in metrics:
            assert metric.ok, f"{metric.name}: {metric.value} > {metric.bound}"

        # four-term decomposition through the dense projections
        rng = np.random.default_rng(SEED + 66)
        for n in range(2, 17):
            basis = even_odd_basis(n)
            e_plus = basis.p_cols @ basis.p_cols.conj().T
            e_minus = basis.q_cols @ basis.q_cols.conj().T
            for _ in range(50):
                lmat = complex_normal(rng, (n, n))
                rebuilt = (
                    e_plus @ lmat @ e_plus
                    + e_plus @ lmat @ e_minus
                    + e_minus @ lmat @ e_plus
                    + e_minus @ lmat @ e_minus
                )
                assert np.linalg.norm(lmat - rebuilt) <= 1e-12 * np.linalg.norm(lmat)


def test_criterion_7_nilpotency():
    with criterion(7, "nilpotent diagonal scaling"):
        for n in range(2, 13):
            scaled = nilpotent_realization(n)
            power = np.linalg.matrix_power(scaled, n)
            bound = 1e-8 * max(1.0, np.linalg.norm(scaled)) ** n
            assert np.linalg.norm(power) <= bound
        assert np.linalg.norm(np.linalg.matrix_power(nilpotent_realization(2), 2)) <= 1e-14
        for n in range(2, 33):
            pattern = sign_pattern_of(r_dense(SpecialTridiag(n)))
            assert has_sign_pattern(nilpotent_realization(n), pattern)


def test_criterion_8_cli(capsys):
    with criterion(8, "command-line exit codes and reproducibility"):
        assert main(["show", "r", "5"]) == 0
        assert main(["spectrum", "circ", "0,1,0,0", "--tol", "0"]) == 1
        assert main(["verify", "all", "1..4"]) == 2
        capsys.readouterr()

        argv = ["verify", "all", "2..6", "--seed", "11", "--format", "json"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second
        json.loads(first)  # well-formed

        assert main(["verify", "all", "2..12"]) == 0
        capsys.readouterr()
