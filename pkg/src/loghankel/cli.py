"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 when a bound is violated,
not attained, or a cross-check fails, 2 for usage and input errors.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from pathlib import Path

from . import report as rep
from .bounds import eta_root, theoretical_bound
from .caratheodory import SchurParams
from .classes import GeometricClass
from .errors import LogHankelError
from .functionals import h21_log_from_a, zeta_form_value
from .verifier import (
    SearchConfig,
    Status,
    checks_failed,
    class_function,
    full_report,
    verify_class,
    verify_extremal,
)
from .ykm import y_closed, y_oracle

CLASS_CHOICES = [c.value for c in GeometricClass]
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ORACLE_TOL = 1e-4
EXTREMAL_TOL = 1e-4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _complex(text: str) -> complex:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}") from None
    if len(parts) == 1:
        return complex(parts[0], 0.0)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}")
    return complex(*parts)


def _add_search_flags(p):
    d = SearchConfig()
    p.add_argument("--grid", type=int, help="set all four grid sizes at once")
    p.add_argument("--zeta1-steps", type=int, default=d.zeta1_steps)
    p.add_argument("--mod2-steps", type=int, default=d.mod2_steps)
    p.add_argument("--arg2-steps", type=int, default=d.arg2_steps)
    p.add_argument("--arg3-steps", type=int, default=d.arg3_steps)
    p.add_argument("--refine", type=int, default=d.refine_iterations, help="local polish iterations")
    p.add_argument("--tol", type=float, default=d.sharpness_tol, help="sharpness tolerance")
    p.add_argument("--order", type=int, default=d.order, help="series truncation order")
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--samples", type=int, default=d.consistency_samples, help="consistency samples")
    p.add_argument("--envelope-samples", type=int, default=d.envelope_samples)
    p.add_argument("--workers", type=int, default=d.workers, help="0 = automatic")
    p.add_argument("--zeta3-radii", type=int, default=d.zeta3_radii, help="debug: >1 samples interior zeta3")
    p.add_argument("--format", choices=sorted(rep.RENDERERS), default="text")


def _config(ns) -> SearchConfig:
    cfg = SearchConfig(
        zeta1_steps=ns.zeta1_steps,
        mod2_steps=ns.mod2_steps,
        arg2_steps=ns.arg2_steps,
        arg3_steps=ns.arg3_steps,
        refine_iterations=ns.refine,
        seed=ns.seed,
        order=ns.order,
        sharpness_tol=ns.tol,
        consistency_samples=ns.samples,
        envelope_samples=ns.envelope_samples,
        workers=ns.workers,
        zeta3_radii=ns.zeta3_radii,
    )
    if ns.grid is not None:
        cfg = cfg.with_grid(ns.grid)
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="loghankel", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="certify the bound for one class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_CHOICES)
    p.add_argument("--out", type=Path)
    _add_search_flags(p)

    p = sub.add_parser("all", help="certify all five classes")
    p.add_argument("--out", type=Path, help="directory for report.json / report.csv / report.txt")
    _add_search_flags(p)

    p = sub.add_parser("ymax", help="closed-form maximum of |A+Bz+Cz^2|+1-|z|^2")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--oracle", action="store_true", help="compare against the grid oracle")

    p = sub.add_parser("eval", help="evaluate the functional at Schur parameters")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_CHOICES)
    p.add_argument("--zeta1", type=float, required=True)
    p.add_argument("--zeta2", type=_complex, required=True, help="RE,IM (use --zeta2=-0.5,0 for negatives)")
    p.add_argument("--zeta3", type=_complex, required=True, help="RE,IM")

    p = sub.add_parser("extremal", help="functional at the extremal function")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_CHOICES)

    p = sub.add_parser("eta", help="critical point of the bound curve")
    p.add_argument("--class", dest="cls", required=True, choices=["f1", "f3", "f4"])
    return parser


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _exit_for(reports) -> int:
    if any(r.status is Status.INPUT_ERROR for r in reports):
        return EXIT_USAGE
    if any(r.status is not Status.PASS or checks_failed(r) for r in reports):
        return EXIT_FAIL
    return EXIT_OK


def _cmd_verify(ns) -> int:
    cfg = _config(ns)
    r = verify_class(ns.cls, cfg)
    text = rep.RENDERERS[ns.format](r, cfg)
    if ns.out and r.status is not Status.INPUT_ERROR:
        _write_atomic(ns.out, text)
    sys.stdout.write(text if ns.format == "text" or not ns.out else rep.to_text(r, cfg))
    return _exit_for([r])


def _cmd_all(ns) -> int:
    cfg = _config(ns)
    reports = full_report(cfg)
    if ns.out and not any(r.status is Status.INPUT_ERROR for r in reports):
        outputs = {name: fn(reports, cfg) for name, fn in rep.RENDERERS.items()}
        for name, text in outputs.items():
            _write_atomic(ns.out / f"report.{'txt' if name == 'text' else name}", text)
    sys.stdout.write(rep.RENDERERS[ns.format](reports, cfg))
    if ns.format != "json":
        ok = all(r.passed and not checks_failed(r) for r in reports)
        sys.stdout.write(f"overall: {'PASS' if ok else 'FAIL'}\n")
    return _exit_for(reports)


def _cmd_ymax(ns) -> int:
    y = y_closed(ns.a, ns.b, ns.c)
    print(f"Y = {y.value:.12g}  branch {y.branch}")
    if ns.oracle:
        o = y_oracle(ns.a, ns.b, ns.c)
        diff = abs(o.value - y.value)
        print(f"oracle = {o.value:.12g} at z = {o.witness:.6g}  |diff| = {diff:.3e}")
        return EXIT_OK if diff <= ORACLE_TOL else EXIT_FAIL
    return EXIT_OK


def _cmd_eval(ns) -> int:
    tag = GeometricClass.parse(ns.cls)
    params = SchurParams(ns.zeta1, ns.zeta2, ns.zeta3)
    printed = zeta_form_value(tag, params, "printed")
    pipe = complex(h21_log_from_a(*class_function(tag, params).a234))
    print(f"value {printed.real:.12g}{printed.imag:+.12g}j  (expanded Schur form)")
    print(f"pipeline {pipe.real:.12g}{pipe.imag:+.12g}j  |H| = {abs(pipe):.12g}")
    if tag is GeometricClass.SS:
        print(f"note: the published SS form differs from the pipeline by c1*c3/16 (gap {abs(printed - pipe):.3e})")
    return EXIT_OK


def _cmd_extremal(ns) -> int:
    value = verify_extremal(ns.cls)
    bound = theoretical_bound(ns.cls)
    print(f"{ns.cls}: extremal {value:.12f} bound {bound:.12f}  |diff| {abs(value - bound):.3e}")
    return EXIT_OK if abs(value - bound) <= EXTREMAL_TOL else EXIT_FAIL


def _cmd_eta(ns) -> int:
    print(f"{eta_root(ns.cls):.12f}")
    return EXIT_OK


COMMANDS = {
    "verify": _cmd_verify,
    "all": _cmd_all,
    "ymax": _cmd_ymax,
    "eval": _cmd_eval,
    "extremal": _cmd_extremal,
    "eta": _cmd_eta,
}


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[ns.verb](ns)
    except LogHankelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())
