"""Numerical certification of the sharp bounds for each class.

The search covers ``zeta1 in [0, 1]``, ``zeta2`` in the closed disk and
``zeta3`` on the unit circle. The functional is affine in ``zeta3`` for fixed
``(zeta1, zeta2)``, so its modulus peaks on ``|zeta3| = 1`` and nothing is
lost by pinning the radius (``SearchConfig.zeta3_radii`` re-enables interior
samples for checking that claim).
"""
from __future__ import annotations

import enum
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .bounds import bound_spec, eta_root, theoretical_bound
from .caratheodory import DEFAULT_SEED, SchurParams, expand_p, random_disk, random_schur, rational_from_schur, schur_to_coeffs
from .classes import GeometricClass, build_from_p, closed_form_a234, extremal_witness
from .errors import InputError, LogHankelError
from .functionals import (
    envelope_arrays,
    h21_log,
    h21_log_from_a,
    log_coeffs,
    pipeline_value,
    zeta_form_arrays,
    zeta_form_value,
)

log = logging.getLogger(__name__)

UPPER_SLACK = 1e-9


class Status(str, enum.Enum):
    PASS = "PASS"
    BOUND_VIOLATED = "BOUND_VIOLATED"
    SHARPNESS_GAP = "SHARPNESS_GAP"
    INPUT_ERROR = "INPUT_ERROR"


@dataclass(frozen=True)
class SearchConfig:
    zeta1_steps: int = 101
    mod2_steps: int = 51
    arg2_steps: int = 72
    arg3_steps: int = 72
    refine_iterations: int = 200
    seed: int = DEFAULT_SEED
    order: int = 8
    sharpness_tol: float = 1e-3
    consistency_samples: int = 200
    envelope_samples: int = 500
    workers: int = 0  # 0 picks from os.cpu_count()
    zeta3_radii: int = 1  # >1 samples |zeta3| on linspace(0, 1, n)

    def validate(self) -> "SearchConfig":
        grids = (self.zeta1_steps, self.mod2_steps, self.arg2_steps, self.arg3_steps)
        if any(not isinstance(g, (int, np.integer)) or g < 16 for g in grids):
            raise InputError(f"grid sizes must be integers >= 16, got {grids}")
        if self.refine_iterations < 0:
            raise InputError("refine_iterations must be >= 0")
        if self.order < 4:
            raise InputError(f"series order must be >= 4 to reach a4, got {self.order}")
        if not self.sharpness_tol > 0:
            raise InputError("sharpness_tol must be positive")
        if self.consistency_samples < 1 or self.envelope_samples < 1:
            raise InputError("sample counts must be >= 1")
        if self.workers < 0 or self.zeta3_radii < 1:
            raise InputError("workers must be >= 0 and zeta3_radii >= 1")
        return self

    def with_grid(self, n: int) -> "SearchConfig":
        return replace(self, zeta1_steps=n, mod2_steps=n, arg2_steps=n, arg3_steps=n)

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class BoundReport:
    tag: GeometricClass
    theoretical_bound: float | None = None
    observed_max: float | None = None
    argmax: SchurParams | None = None
    extremal_value: float | None = None
    consistency_residual: float | None = None
    envelope_violation: float | None = None
    eta: float | None = None
    status: Status = Status.INPUT_ERROR
    wall_time: float = 0.0
    grid_max: float | None = None
    flags: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS


def classify(bound: float, observed: float, sharpness_tol: float) -> Status:
    if observed > bound + UPPER_SLACK:
        return Status.BOUND_VIOLATED
    if bound - observed > sharpness_tol:
        return Status.SHARPNESS_GAP
    return Status.PASS


# -- grid search -------------------------------------------------------------


def _axes(cfg: SearchConfig):
    z1 = np.linspace(0.0, 1.0, cfg.zeta1_steps)
    r2 = np.linspace(0.0, 1.0, cfg.mod2_steps)
    p2 = 2 * np.pi * np.arange(cfg.arg2_steps) / cfg.arg2_steps
    p3 = 2 * np.pi * np.arange(cfg.arg3_steps) / cfg.arg3_steps
    r3 = np.ones(1) if cfg.zeta3_radii == 1 else np.linspace(0.0, 1.0, cfg.zeta3_radii)
    return z1, r2, p2, p3, r3


def _objective(tag, z1, z2, z3, printed=False):
    return np.abs(pipeline_value(tag, z1, z2, z3, printed=printed))


def _slab(tag, z1, z2, z3, printed):
    v = _objective(tag, z1, z2, z3, printed)
    k = int(np.argmax(v))
    return float(v.flat[k]), k


def grid_search(tag, cfg: SearchConfig, printed: bool = False):
    """Exhaustive sweep; returns ``(max, (zeta1, |zeta2|, arg zeta2, arg zeta3, |zeta3|))``.

    Slabs of constant ``zeta1`` run concurrently; the reduction keeps the first
    maximum in lexicographic grid order, so results do not depend on scheduling.
    """
    z1s, r2, p2, p3, r3 = _axes(cfg)
    z2 = (r2[:, None] * np.exp(1j * p2)[None, :])[:, :, None, None]
    z3 = (r3[None, :] * np.exp(1j * p3)[:, None])[None, None, :, :]
    shape = (r2.size, p2.size, p3.size, r3.size)
    workers = cfg.workers or min(8, os.cpu_count() or 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda x: _slab(tag, x, z2, z3, printed), z1s))
    else:
        results = [_slab(tag, x, z2, z3, printed) for x in z1s]
    best, where = -1.0, None
    for i, (v, k) in enumerate(results):
        if v > best:
            best, where = v, (i, k)
    i, k = where
    a, b, c, d = np.unravel_index(k, shape)
    return best, (z1s[i], r2[a], p2[b], p3[c], r3[d])


def polish(tag, start, steps, iterations: int, printed: bool = False):
    """Cyclic coordinate search with step halving, projected onto the domain.

    Coordinates are ``(zeta1, |zeta2|, arg zeta2, arg zeta3)``; ``|zeta3|`` is
    held at the start value.
    """
    x = np.array(start[:4], dtype=float)
    r3 = start[4]
    h = np.array(steps, dtype=float)

    def f(y):
        return float(_objective(tag, y[0], y[1] * np.exp(1j * y[2]), r3 * np.exp(1j * y[3]), printed))

    def project(y):
        y = y.copy()
        y[0] = min(max(y[0], 0.0), 1.0)
        y[1] = min(max(y[1], 0.0), 1.0)
        y[2:] = np.mod(y[2:], 2 * np.pi)
        return y

    fx = f(x)
    for _ in range(iterations):
        moved = False
        for i in range(4):
            for sgn in (1.0, -1.0):
                y = x.copy()
                y[i] += sgn * h[i]
                y = project(y)
                fy = f(y)
                if fy > fx:
                    x, fx, moved = y, fy, True
                    break
        if not moved:
            h *= 0.5
            if np.all(h < 1e-15):
                break
    return fx, (x[0], x[1], x[2], x[3], r3)


def _to_params(pt) -> SchurParams:
    z1, r2, p2, p3, r3 = pt
    return SchurParams(float(z1), complex(r2 * np.exp(1j * p2)), complex(r3 * np.exp(1j * p3)))


def search_max(tag, cfg: SearchConfig | None = None, printed: bool = False) -> BoundReport:
    """Grid sweep plus local polish for one class; fills bound, maximum, argmax and status."""
    t0 = time.perf_counter()
    tag = GeometricClass.parse(tag)
    cfg = (cfg or SearchConfig()).validate()
    bound = theoretical_bound(tag)
    gmax, gpt = grid_search(tag, cfg, printed)
    steps = (
        1 / (cfg.zeta1_steps - 1),
        1 / (cfg.mod2_steps - 1),
        2 * np.pi / cfg.arg2_steps,
        2 * np.pi / cfg.arg3_steps,
    )
    pmax, ppt = polish(tag, gpt, steps, cfg.refine_iterations, printed)
    observed, pt = (pmax, ppt) if pmax > gmax else (gmax, gpt)
    report = BoundReport(
        tag=tag,
        theoretical_bound=bound,
        observed_max=float(observed),
        argmax=_to_params(pt),
        grid_max=float(gmax),
        eta=None if bound_spec(tag).eta_bracket is None else eta_root(tag),
        status=classify(bound, observed, cfg.sharpness_tol),
    )
    report.wall_time = time.perf_counter() - t0
    return report


# -- point checks --------------------------------------------------------------


def class_function(tag, params: SchurParams, order: int = 8):
    """The class member generated by the rational witness for ``params``."""
    p = expand_p(rational_from_schur(params), order)
    return build_from_p(tag, p, order)


def verify_extremal(tag, order: int = 8) -> float:
    tag = GeometricClass.parse(tag)
    f = class_function(tag, extremal_witness(tag), order)
    return float(abs(h21_log_from_a(*f.a234)))


def consistency_suite(tag, n: int = 200, seed: int = DEFAULT_SEED, order: int = 8) -> float:
    """Largest disagreement between the independent routes to the functional.

    Compared per sample: log-series route vs the ``a``-quartic, the quartic vs
    the expanded Schur polynomial (SS: the relation-consistent variant), and
    the closed ``a2, a3, a4`` vs the series construction.
    """
    tag = GeometricClass.parse(tag)
    if n < 1:
        raise InputError("n must be >= 1")
    worst = 0.0
    for params in random_schur(np.random.default_rng(seed), n):
        f = class_function(tag, params, order)
        quartic = h21_log_from_a(*f.a234)
        series = h21_log(log_coeffs(f))
        zeta = zeta_form_value(tag, params, variant="pipeline")
        closed = closed_form_a234(tag, schur_to_coeffs(params))
        worst = max(
            worst,
            abs(series - quartic),
            abs(zeta - quartic),
            max(abs(u - v) for u, v in zip(closed[:3], f.a234)),
        )
    return float(worst)


def ss_erratum() -> dict:
    """Printed versus relation-consistent SS functional on the slice ``zeta1 = 1``."""
    params = SchurParams(1.0, 0, 0)
    printed = zeta_form_value(GeometricClass.SS, params, "printed")
    pipeline = complex(h21_log_from_a(*class_function(GeometricClass.SS, params).a234))
    return {
        "printed": printed,
        "pipeline": pipeline,
        "modulus_gap": abs(abs(printed) - abs(pipeline)),
    }


def sample_interior(rng: np.random.Generator, samples: int):
    z1 = rng.uniform(0.0, 1.0, samples)
    z1 = np.clip(z1, 1e-9, 1 - 1e-9)
    return z1, random_disk(rng, samples), random_disk(rng, samples)


def envelope_check(tag, samples: int = 500, seed: int = DEFAULT_SEED) -> float:
    """Largest ``|zeta form| - envelope`` over random interior samples (<= 0 when the envelope holds)."""
    tag = GeometricClass.parse(tag)
    if samples < 1:
        raise InputError("samples must be >= 1")
    z1, z2, z3 = sample_interior(np.random.default_rng(seed), samples)
    lhs = np.abs(zeta_form_arrays(tag, z1, z2, z3, "printed"))
    return float(np.max(lhs - envelope_arrays(tag, z1, z2)))


# -- composition -------------------------------------------------------------

CONSISTENCY_TOL = 1e-10
ENVELOPE_TOL = 1e-10


def verify_class(tag, cfg: SearchConfig | None = None) -> BoundReport:
    """Search, extremal, consistency and envelope checks for one class."""
    t0 = time.perf_counter()
    try:
        tag = GeometricClass.parse(tag)
    except InputError as exc:
        return BoundReport(tag=str(tag), status=Status.INPUT_ERROR, error=str(exc))
    try:
        cfg = (cfg or SearchConfig()).validate()
        report = search_max(tag, cfg)
        report.extremal_value = verify_extremal(tag, cfg.order)
        report.consistency_residual = consistency_suite(tag, cfg.consistency_samples, cfg.seed, cfg.order)
        report.envelope_violation = envelope_check(tag, cfg.envelope_samples, cfg.seed)
    except LogHankelError as exc:
        log.warning("%s: %s", tag.value, exc)
        return BoundReport(tag=tag, status=Status.INPUT_ERROR, error=str(exc), wall_time=time.perf_counter() - t0)
    if report.consistency_residual > CONSISTENCY_TOL:
        report.flags.append("consistency-residual-exceeded")
    if report.envelope_violation > ENVELOPE_TOL:
        report.flags.append("envelope-violated")
    if tag is GeometricClass.SS:
        report.flags.append("printed-a4-sign-erratum")
        printed = search_max(tag, cfg, printed=True)
        report.flags.append(f"printed-variant-max={printed.observed_max:.12g}")
    report.wall_time = time.perf_counter() - t0
    return report


def checks_failed(report: BoundReport) -> bool:
    return any(f in ("consistency-residual-exceeded", "envelope-violated") for f in report.flags)


def full_report(cfg: SearchConfig | None = None) -> list[BoundReport]:
    return [verify_class(tag, cfg) for tag in GeometricClass]


__all__ = [
    "BoundReport",
    "SearchConfig",
    "Status",
    "classify",
    "consistency_suite",
    "envelope_check",
    "full_report",
    "grid_search",
    "search_max",
    "ss_erratum",
    "verify_class",
    "verify_extremal",
    "eta_root",
    "theoretical_bound",
]
