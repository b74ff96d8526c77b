"""Logarithmic coefficients and the Hankel functional ``gamma1*gamma3 - gamma2^2``.

The functional is available three ways:

* from the series ``log(f(z)/z)`` (:func:`log_coeffs` then :func:`h21_log`),
* from ``a2, a3, a4`` through the quartic ``(a2 a4 - a3^2 + a2^4/12) / 4``,
* from the Schur parameters through each class's expanded polynomial
  (:func:`zeta_form_value`).

The per-class envelope ``prefactor(z1) * (|A + B z2 + C z2^2| + 1 - |z2|^2)``
bounds the third form after ``|zeta3| <= 1`` is used.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .caratheodory import SchurParams, coeffs_from_zeta
from .classes import ClassFunction, GeometricClass, a234_arrays
from .errors import DomainError, InputError
from .series import TruncatedSeries, series_log


class LogCoeffVector(NamedTuple):
    gamma1: complex
    gamma2: complex
    gamma3: complex


class CaseCoefficients(NamedTuple):
    A: float
    B: float
    C: float


def log_coeffs(f: ClassFunction) -> LogCoeffVector:
    """``gamma_n`` = half the ``z^n`` coefficient of ``log(f(z)/z)``, n = 1..3."""
    series = f.f if isinstance(f, ClassFunction) else f
    if series.order < 4:
        raise InputError("gamma_3 needs the series through z^4")
    g = series_log(TruncatedSeries(series.coeffs[1:]))
    return LogCoeffVector(*(complex(g[n]) / 2 for n in (1, 2, 3)))


def gamma_closed_form(a2, a3, a4, printed: bool = False) -> LogCoeffVector:
    """``gamma_1..3`` from ``a2, a3, a4``.

    ``gamma3 = (a4 - a2 a3 + a2^3/3) / 2`` is what ``log(f/z)`` gives and what
    reproduces the quartic in :func:`h21_log_from_a`. ``printed=True`` uses the
    divisor 4 that appears in print (it gives Koebe ``gamma3 = 1/6``, not 1/3).
    """
    d3 = 4 if printed else 2
    return LogCoeffVector(a2 / 2, (a3 - a2 * a2 / 2) / 2, (a4 - a2 * a3 + a2**3 / 3) / d3)


def h21_log(g: LogCoeffVector) -> complex:
    return g[0] * g[2] - g[1] ** 2


def h21_log_from_a(a2, a3, a4):
    """``(a2 a4 - a3^2 + a2^4 / 12) / 4``; elementwise on arrays."""
    return (a2 * a4 - a3 * a3 + a2**4 / 12) / 4


def fekete_szego(a2, a3):
    return a3 - a2 * a2


def pipeline_value(tag, z1, z2, z3, printed: bool = False):
    """The functional through ``c -> (a2, a3, a4) -> quartic``; array friendly.

    ``printed`` only matters for SS, where it selects the sign-flipped ``a4``.
    """
    c1, c2, c3 = coeffs_from_zeta(z1, z2, z3)
    return h21_log_from_a(*a234_arrays(tag, c1, c2, c3, printed=printed))


def zeta_form_arrays(tag, z1, z2, z3, variant: str = "printed"):
    """Expanded Schur-parameter polynomial of the functional for ``tag``.

    Each branch is the published expansion term for term. For SS the
    published form carries ``-24 c1 c3`` where the defining relation gives
    ``+24 c1 c3``; ``variant="pipeline"`` adds back ``c1 c3 / 16``.
    """
    tag = GeometricClass.parse(tag)
    if variant not in ("printed", "pipeline"):
        raise InputError(f"variant must be 'printed' or 'pipeline', got {variant!r}")
    m2 = np.abs(z2) ** 2
    if tag is GeometricClass.SS:
        v = (
            6 * z2**2 * (5 * z1**2 - 3 * z1**4 - 2)
            - 11 * z1**4
            - 6 * z1 * (1 - z1**2) * z3 * (1 - m2)
            - 30 * z2 * z1**2 * (1 - z1**2)
        ) / 48
        if variant == "pipeline":
            c1, _, c3 = coeffs_from_zeta(z1, z2, z3)
            v = v + c1 * c3 / 16
        return v
    if tag is GeometricClass.F2:
        return (
            z1**4 * (5 - 4 * z2 + 2 * z2**2)
            + 2 * z1**2 * (1 + 10 * z2 + 7 * z2**2)
            - 4 * (1 + 2 * z2) ** 2
            + 18 * z1 * z3 * (1 - z1**2) * (1 - m2)
        ) / 144
    if tag is GeometricClass.F1:
        inner = (
            1
            + 2 * z3 * (1 - m2)
            + 2 * z1 * (1 + 2 * z2 - z2**2)
            + 2 * z2
            + 2 * z1**3 * (1 - z2) ** 2
            - 2 * z1**2 * (z3 * (1 - m2) + z2 - 1)
        )
        return (
            72 * (1 + 2 * z1) * inner
            + 3 * (1 + 2 * z1) ** 4
            - 64 * (1 + 2 * (z1 + z2) + 2 * z1**2 * (1 - z2)) ** 2
        ) / 2304
    if tag is GeometricClass.F3:
        inner = (
            2 * z1**3 * (1 - z2) ** 2
            + 2 * z1 * z2 * (2 - z2)
            + 2 * (z2 + z3)
            - 1
            + 2 * z1**2 * (1 - z2 - z3 * (1 - m2))
            - 2 * z3 * m2
        )
        return (1 + 2 * z1) * inner / 32 + (1 + 2 * z1) ** 4 / 768 - (z1 + z2 + (1 - z2) * z1**2) ** 2 / 9
    inner = z1**2 * (1 - z2) ** 2 - z1 * (z2**2 - 1 + z3 * (1 - m2)) - z3 * m2 + 2 * z2 + z3 + 2
    return (
        18 * (1 + z1) ** 2 * inner
        + 3 * (1 + z1) ** 4
        - 4 * (3 + 4 * z1 + 2 * z2 - 2 * z1**2 * (z2 - 1)) ** 2
    ) / 144


def zeta_form_value(tag, params: SchurParams, variant: str = "printed") -> complex:
    z1, z2, z3 = params.as_tuple()
    return complex(zeta_form_arrays(tag, z1, z2, z3, variant))


def _check_zeta1(tag: GeometricClass, zeta1: float) -> None:
    if not np.isfinite(zeta1):
        raise DomainError("zeta1 must be finite")
    if tag in (GeometricClass.SS, GeometricClass.F2):
        if not 0 < zeta1 < 1:
            raise DomainError(f"{tag.value}: case coefficients need zeta1 in (0, 1), got {zeta1}")
    elif not 0 <= zeta1 < 1:
        raise DomainError(f"{tag.value}: case coefficients need zeta1 in [0, 1), got {zeta1}")


def _case_arrays(tag: GeometricClass, x):
    if tag is GeometricClass.SS:
        return -11 * x**3 / (6 * (1 - x**2)), -5 * x, 3 * x - 2 / x
    if tag is GeometricClass.F2:
        return (
            (5 * x**4 + 2 * x**2 - 4) / (18 * x * (1 - x**2)),
            -2 * (4 - x**2) / (9 * x),
            -(8 + x**2) / (9 * x),
        )
    if tag is GeometricClass.F1:
        return (
            (11 + 56 * x - 8 * x**2 + 16 * x**3 + 80 * x**4) / (144 * (1 + 2 * x) * (1 - x**2)),
            (4 * x**2 + 4 * x - 7) / (9 * (1 + 2 * x)),
            -(2 * x**2 + 9 * x + 16) / (9 * (1 + 2 * x)),
        )
    if tag is GeometricClass.F3:
        return (
            (80 * x**4 + 16 * x**3 - 40 * x**2 - 120 * x - 69) / (144 * (1 + 2 * x) * (1 - x**2)),
            (4 * x**2 + 4 * x + 9) / (9 * (1 + 2 * x)),
            -(2 * x**2 + 9 * x + 16) / (9 * (1 + 2 * x)),
        )
    return (
        (5 * x**4 + 2 * x**3 - 4 * x**2 + 6 * x + 3) / (18 * (1 - x) * (1 + x) ** 2),
        -2 * (1 - x) * (3 + x) / (9 * (1 + x)),
        -(8 + x) / 9,
    )


def envelope_prefactor(tag, zeta1):
    tag = GeometricClass.parse(tag)
    x = zeta1
    if tag in (GeometricClass.SS, GeometricClass.F2):
        return x * (1 - x**2) / 8
    if tag in (GeometricClass.F1, GeometricClass.F3):
        return (1 + 2 * x) * (1 - x**2) / 16
    return (1 - x) * (1 + x) ** 2 / 8


def case_coefficients(tag, zeta1: float) -> CaseCoefficients:
    tag = GeometricClass.parse(tag)
    zeta1 = float(zeta1)
    _check_zeta1(tag, zeta1)
    return CaseCoefficients(*(float(v) for v in _case_arrays(tag, zeta1)))


def psi(A, B, C, z):
    """``|A + B z + C z^2| + 1 - |z|^2``."""
    return np.abs(A + B * z + C * z * z) + 1 - np.abs(z) ** 2


def envelope_value(tag, zeta1: float, zeta2: complex) -> float:
    tag = GeometricClass.parse(tag)
    A, B, C = case_coefficients(tag, zeta1)
    return float(envelope_prefactor(tag, float(zeta1)) * psi(A, B, C, complex(zeta2)))


def envelope_arrays(tag, zeta1, zeta2):
    """Vectorized :func:`envelope_value`; ``zeta1`` must already be in the open domain."""
    tag = GeometricClass.parse(tag)
    A, B, C = _case_arrays(tag, zeta1)
    return envelope_prefactor(tag, zeta1) * psi(A, B, C, zeta2)
