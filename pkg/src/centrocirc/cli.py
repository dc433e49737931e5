"""Command-line front end.

Grammar::

    centrocirc show {r,pi,eta,exchange,fourier,h,shift} N [--format F]
    centrocirc spectrum {circ,scirc} C1,C2,...   [--format F] [--tol X]
    centrocirc spectrum {r-even,r-odd} N         [--format F] [--tol X]
    centrocirc verify {relation,nilpotent,centro,unitary,all} LO..HI
                      [--seed N] [--format F] [--tol X]

Formats: ``pretty`` (default), ``json``, ``csv``.  JSON reports follow the
schema ``{"command", "n", "status", "metrics": [{"name", "value", "bound"}],
"payload": {"rows", "cols", "entries": [[re, im], ...]}}``; verify reports
additionally carry ``"seed"`` and ``"n_range"``.  Complex numbers are
``[re, im]`` pairs in JSON and ``re+imi`` strings in CSV.

Exit codes: 0 when the report status is pass, 1 on a verification failure,
2 on a usage error.  Randomness comes only from the seeded PCG64 generator,
so identical command lines print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field

import numpy as np

from .fourier import make_fourier_pack
from .circulant import (
    Circulant,
    SkewCirculant,
    basic_circulant,
    basic_skew_circulant,
    circ_dense,
    circ_eigenpairs,
    scirc_dense,
    scirc_eigenpairs,
)
from .centro import exchange_dense
from .relation import (
    SpecialTridiag,
    eta_minus_etat_coeffs,
    lower_shift_dense,
    pi_minus_pit_coeffs,
    r_dense,
)
from .verify import Metric, SUITE_NAMES, VERIFY_N_MAX, VERIFY_N_MIN, run_suite

SHOW_KINDS = ("r", "pi", "eta", "exchange", "fourier", "h", "shift")
SPECTRUM_KINDS = ("circ", "scirc", "r-even", "r-odd")
SHOW_N_MAX = 1024
DEFAULT_SEED = 0
DEFAULT_RESIDUAL_TOL = 1e-10


class UsageError(ValueError):
    """Bad command-line arguments; maps to exit code 2."""


@dataclass
class CommandReport:
    command: str
    n: int
    status: str
    metrics: list[Metric] = field(default_factory=list)
    payload: dict | None = None
    seed: int | None = None
    n_range: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"command": self.command, "n": self.n}
        if self.n_range is not None:
            out["n_range"] = self.n_range
        if self.seed is not None:
            out["seed"] = self.seed
        out["status"] = self.status
        out["metrics"] = [
            {"name": m.name, "value": m.value, "bound": m.bound} for m in self.metrics
        ]
        if self.payload is not None:
            out["payload"] = self.payload
        return out


def matrix_payload(a: np.ndarray) -> dict:
    if a.ndim == 1:
        a = a[:, None]
    entries = [[float(z.real), float(z.imag)] for z in a.ravel()]
    return {"rows": int(a.shape[0]), "cols": int(a.shape[1]), "entries": entries}


def format_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _status(metrics: list[Metric]) -> str:
    return "pass" if all(m.ok for m in metrics) else "fail"


def _parse_scalar(token: str) -> complex:
    text = token.strip().replace("i", "j")
    try:
        return complex(text)
    except ValueError:
        raise UsageError(f"cannot parse coefficient {token!r}")


def _parse_coeffs(text: str) -> np.ndarray:
    tokens = [t for t in text.split(",") if t.strip()]
    if not tokens:
        raise UsageError("empty coefficient list")
    return np.array([_parse_scalar(t) for t in tokens], dtype=np.complex128)


def _parse_size(text: str, lo: int, hi: int) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"size must be an integer, got {text!r}")
    if not lo <= n <= hi:
        raise UsageError(f"size {n} outside the supported range {lo}..{hi}")
    return n


def _parse_range(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)\.\.(\d+)", text.strip())
    if not match:
        raise UsageError(f"range must look like 2..16, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    if lo < VERIFY_N_MIN or hi > VERIFY_N_MAX:
        raise UsageError(
            f"range {text!r} outside the supported window "
            f"{VERIFY_N_MIN}..{VERIFY_N_MAX}"
        )
    return lo, hi


def cmd_show(kind: str, size_text: str) -> CommandReport:
    if kind not in SHOW_KINDS:
        raise UsageError(f"unknown matrix kind {kind!r}")
    n_min = 2 if kind in ("r", "pi", "eta") else 1
    n = _parse_size(size_text, n_min, SHOW_N_MAX)
    builders = {
        "r": lambda: r_dense(SpecialTridiag(n)),
        "pi": lambda: circ_dense(basic_circulant(n)),
        "eta": lambda: scirc_dense(basic_skew_circulant(n)),
        "exchange": lambda: exchange_dense(n),
        "fourier": lambda: make_fourier_pack(n).f_star,
        "h": lambda: make_fourier_pack(n).h_star,
        "shift": lambda: lower_shift_dense(n),
    }
    return CommandReport(
        command=f"show {kind}", n=n, status="pass",
        payload=matrix_payload(builders[kind]()),
    )


def cmd_spectrum(kind: str, arg: str,
                 tol: float = DEFAULT_RESIDUAL_TOL) -> CommandReport:
    if kind not in SPECTRUM_KINDS:
        raise UsageError(f"unknown spectrum kind {kind!r}")
    if kind == "circ":
        matrix = Circulant(_parse_coeffs(arg))
        pairs, dense = circ_eigenpairs(matrix), circ_dense(matrix)
    elif kind == "scirc":
        matrix = SkewCirculant(_parse_coeffs(arg))
        pairs, dense = scirc_eigenpairs(matrix), scirc_dense(matrix)
    elif kind == "r-even":
        matrix = pi_minus_pit_coeffs(_parse_size(arg, 2, SHOW_N_MAX))
        pairs, dense = circ_eigenpairs(matrix), circ_dense(matrix)
    else:
        matrix = eta_minus_etat_coeffs(_parse_size(arg, 2, SHOW_N_MAX))
        pairs, dense = scirc_eigenpairs(matrix), scirc_dense(matrix)
    n = matrix.n
    values = np.array([p.value for p in pairs])
    vectors = np.column_stack([p.vector for p in pairs])
    residual = float(np.max(np.linalg.norm(dense @ vectors - vectors * values, axis=0)))
    coeff_norm = float(np.linalg.norm(matrix.coeffs))
    metrics = [Metric("max_eigenpair_residual", residual, tol * n * max(coeff_norm, 1.0))]
    return CommandReport(
        command=f"spectrum {kind}", n=n, status=_status(metrics),
        metrics=metrics, payload=matrix_payload(values),
    )


def cmd_verify(suite: str, range_text: str, seed: int = DEFAULT_SEED,
               tol: float = DEFAULT_RESIDUAL_TOL) -> CommandReport:
    if suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {suite!r}")
    lo, hi = _parse_range(range_text)
    metrics = run_suite(suite, lo, hi, seed, relation_tol=tol)
    return CommandReport(
        command=f"verify {suite}", n=hi, status=_status(metrics),
        metrics=metrics, seed=seed, n_range=f"{lo}..{hi}",
    )


def render_report(report: CommandReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2)
    if fmt == "csv":
        return _render_csv(report)
    return _render_pretty(report)


def _render_csv(report: CommandReport) -> str:
    lines = [f"command,{report.command}", f"n,{report.n}"]
    if report.n_range is not None:
        lines.append(f"n_range,{report.n_range}")
    if report.seed is not None:
        lines.append(f"seed,{report.seed}")
    lines.append(f"status,{report.status}")
    for m in report.metrics:
        lines.append(f"metric,{m.name},{m.value!r},{m.bound!r}")
    if report.payload is not None:
        rows, cols = report.payload["rows"], report.payload["cols"]
        lines.append(f"payload,{rows},{cols}")
        entries = report.payload["entries"]
        for i in range(rows):
            row = entries[i * cols:(i + 1) * cols]
            lines.append(",".join(format_complex(complex(re, im)) for re, im in row))
    return "\n".join(lines)


def _render_pretty(report: CommandReport) -> str:
    lines = [f"{report.command}  (n = {report.n})"]
    if report.n_range is not None:
        lines[0] = f"{report.command}  (n = {report.n_range}, seed = {report.seed})"
    lines.append(f"status: {report.status}")
    for m in report.metrics:
        verdict = "ok" if m.ok else "VIOLATED"
        lines.append(f"  {m.name} = {m.value:.6e}  (bound {m.bound:.6e}, {verdict})")
    if report.payload is not None:
        rows, cols = report.payload["rows"], report.payload["cols"]
        entries = report.payload["entries"]
        cells = [[_pretty_cell(complex(re, im)) for re, im in
                  entries[i * cols:(i + 1) * cols]] for i in range(rows)]
        width = max(len(c) for row in cells for c in row)
        for row in cells:
            lines.append("  " + "  ".join(c.rjust(width) for c in row))
    return "\n".join(lines)


def _pretty_cell(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.6g}"
    return f"{z.real:.6g}{z.imag:+.6g}i"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centrocirc",
        description="Structured-matrix toolkit: build, diagonalize and verify "
                    "circulants, skew-circulants and the tridiagonal operator "
                    "they decompose.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "csv"),
                        default="pretty", help="output format")
    common.add_argument("--tol", type=float, default=DEFAULT_RESIDUAL_TOL,
                        help="residual tolerance for spectrum/relation checks")

    sub = parser.add_subparsers(dest="command", required=True)

    show = sub.add_parser("show", parents=[common],
                          help="print a named matrix densely")
    show.add_argument("kind", choices=SHOW_KINDS)
    show.add_argument("n", help="matrix size")

    spectrum = sub.add_parser("spectrum", parents=[common],
                              help="print eigenvalues with residual metrics")
    spectrum.add_argument("kind", choices=SPECTRUM_KINDS)
    spectrum.add_argument("arg", help="comma-separated coefficients, or a size")

    verify = sub.add_parser("verify", parents=[common],
                            help="run a seeded invariant suite over a size range")
    verify.add_argument("suite", choices=SUITE_NAMES)
    verify.add_argument("range", help="size range like 2..16")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the PCG64 generator")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code is None else int(exc.code)
    try:
        if args.command == "show":
            report = cmd_show(args.kind, args.n)
        elif args.command == "spectrum":
            report = cmd_spectrum(args.kind, args.arg, tol=args.tol)
        else:
            report = cmd_verify(args.suite, args.range, seed=args.seed, tol=args.tol)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render_report(report, args.format))
    return 0 if report.status == "pass" else 1


def entry_point() -> None:
    sys.exit(main())
