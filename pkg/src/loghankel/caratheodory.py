"""Schur-parameter description of the first three Carathéodory coefficients.

A function ``p = 1 + c1 z + c2 z^2 + ...`` with positive real part on the
unit disk and ``c1 >= 0`` has

    c1 = 2 z1
    c2 = 2 z1^2 + 2 (1 - z1^2) z2
    c3 = 2 z1^3 + 4 (1 - z1^2) z1 z2 - 2 (1 - z1^2) z1 z2^2
         + 2 (1 - z1^2) (1 - |z2|^2) z3

for some ``z1`` in [0, 1] and ``z2, z3`` in the closed unit disk. The
rational functions built by :func:`rational_from_schur` realize those
coefficients explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InputError, PoleError
from .series import DEFAULT_ORDER, TruncatedSeries, series_mul, series_reciprocal

DEFAULT_SEED = 20240607
_TOL = 1e-12


@dataclass(frozen=True)
class SchurParams:
    zeta1: float
    zeta2: complex
    zeta3: complex

    def __post_init__(self):
        z1, z2, z3 = float(np.real(self.zeta1)), complex(self.zeta2), complex(self.zeta3)
        if np.imag(self.zeta1) != 0:
            raise InputError(f"zeta1 must be real, got {self.zeta1}")
        if not all(np.isfinite([z1, z2.real, z2.imag, z3.real, z3.imag])):
            raise InputError("Schur parameters must be finite")
        if not -_TOL <= z1 <= 1 + _TOL:
            raise InputError(f"zeta1 must lie in [0, 1], got {z1}")
        if abs(z2) > 1 + _TOL or abs(z3) > 1 + _TOL:
            raise InputError(f"zeta2, zeta3 must lie in the closed unit disk, got {z2}, {z3}")
        object.__setattr__(self, "zeta1", min(max(z1, 0.0), 1.0))
        object.__setattr__(self, "zeta2", z2)
        object.__setattr__(self, "zeta3", z3)

    def as_tuple(self) -> tuple[float, complex, complex]:
        return self.zeta1, self.zeta2, self.zeta3


class CaratheodoryCoeffs(NamedTuple):
    c1: complex
    c2: complex
    c3: complex


@dataclass(frozen=True, eq=False)
class RationalWitness:
    """``p = numerator / denominator`` with cubic (or lower) polynomials, lowest degree first."""

    numerator: tuple[complex, complex, complex, complex]
    denominator: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        num = tuple(complex(x) for x in self.numerator)
        den = tuple(complex(x) for x in self.denominator)
        if len(num) != 4 or len(den) != 4:
            raise InputError("witness polynomials carry exactly four coefficients")
        if abs(den[0] - 1) > _TOL:
            raise InputError("witness denominator must have constant term 1")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __call__(self, z):
        """Evaluate the rational function (array-friendly)."""
        z = np.asarray(z, dtype=complex)
        return np.polyval(self.numerator[::-1], z) / np.polyval(self.denominator[::-1], z)


def coeffs_from_zeta(z1, z2, z3):
    """Array version of :func:`schur_to_coeffs`; broadcasts over its inputs."""
    s = 1 - z1 * z1
    m2 = np.abs(z2) ** 2
    c1 = 2 * z1
    c2 = 2 * z1 * z1 + 2 * s * z2
    c3 = 2 * z1**3 + 4 * s * z1 * z2 - 2 * s * z1 * z2 * z2 + 2 * s * (1 - m2) * z3
    return c1, c2, c3


def schur_to_coeffs(params: SchurParams) -> CaratheodoryCoeffs:
    if not isinstance(params, SchurParams):
        raise InputError(f"expected SchurParams, got {type(params).__name__}")
    c1, c2, c3 = coeffs_from_zeta(params.zeta1, params.zeta2, params.zeta3)
    return CaratheodoryCoeffs(complex(c1), complex(c2), complex(c3))


def rational_from_schur(params: SchurParams) -> RationalWitness:
    """The rational Carathéodory function with the given Schur parameters.

    With ``|zeta2| = 1`` the quadratic witness is returned and ``zeta3`` is
    ignored; otherwise the cubic one.
    """
    if not isinstance(params, SchurParams):
        raise InputError(f"expected SchurParams, got {type(params).__name__}")
    z1, z2, z3 = params.as_tuple()
    z1b, z2b = np.conj(z1), np.conj(z2)
    if abs(abs(z2) - 1) <= _TOL:
        num = (1, z1b * z2 + z1, z2, 0)
        den = (1, z1b * z2 - z1, -z2, 0)
    else:
        num = (1, z1b * z2 + z2b * z3 + z1, z1b * z3 + z1 * z2b * z3 + z2, z3)
        den = (1, z1b * z2 + z2b * z3 - z1, z1b * z3 - z1 * z2b * z3 - z2, -z3)
    return RationalWitness(num, den)


def expand_p(w: RationalWitness, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    num = TruncatedSeries.from_coeffs(w.numerator, order)
    den = TruncatedSeries.from_coeffs(w.denominator, order)
    return series_mul(num, series_reciprocal(den))


def positivity_scan(w: RationalWitness, radii: Sequence[float], angles_per_radius: int = 360) -> float:
    """Smallest ``Re p`` over the polar sample grid, evaluated on the rational form."""
    radii = np.asarray(radii, dtype=float)
    if radii.size == 0 or np.any(radii < 0) or np.any(radii >= 1):
        raise InputError("radii must be a non-empty subset of [0, 1)")
    if angles_per_radius < 1:
        raise InputError("angles_per_radius must be positive")
    theta = 2 * np.pi * np.arange(angles_per_radius) / angles_per_radius
    z = radii[:, None] * np.exp(1j * theta)[None, :]
    den = np.polyval(w.denominator[::-1], z)
    if np.min(np.abs(den)) < 1e-14:
        raise PoleError("witness denominator vanishes on the sample grid")
    vals = np.polyval(w.numerator[::-1], z) / den
    return float(np.min(vals.real))


def random_disk(rng: np.random.Generator, size=None):
    """Uniform samples from the closed unit disk (area measure)."""
    r = np.sqrt(rng.uniform(0.0, 1.0, size))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size))


def random_schur(rng: np.random.Generator, n: int) -> list[SchurParams]:
    z1 = rng.uniform(0.0, 1.0, n)
    z2 = random_disk(rng, n)
    z3 = random_disk(rng, n)
    return [SchurParams(a, b, c) for a, b, c in zip(z1, z2, z3)]
