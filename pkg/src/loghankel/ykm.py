"""Maximum of ``|A + B z + C z^2| + 1 - |z|^2`` over the closed unit disk.

:func:`y_closed` is the piecewise closed form for real ``A, B, C``;
:func:`y_oracle` is an independent polar-grid search used to check it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class YOutcome:
    value: float
    branch: str
    witness: complex | None = None


def _check(*xs):
    for x in xs:
        if not math.isfinite(x):
            raise InputError(f"coefficients must be finite, got {xs}")


def r_closed(A: float, B: float, C: float) -> float:
    """Auxiliary maximum used when ``AC < 0`` and neither interior branch applies."""
    return _r_branch(A, B, C)[0]


def _r_branch(A, B, C):
    a, b, c = abs(A), abs(B), abs(C)
    if c * (b + 4 * a) <= a * b:
        return a + b - c, "R:|A|+|B|-|C|"
    if a * b <= c * (b - 4 * a):
        return -a + b + c, "R:-|A|+|B|+|C|"
    return (c + a) * math.sqrt(1 - B * B / (4 * A * C)), "R:sqrt"


def y_closed(A: float, B: float, C: float) -> YOutcome:
    A, B, C = float(A), float(B), float(C)
    _check(A, B, C)
    a, b, c = abs(A), abs(B), abs(C)
    if A * C >= 0:
        if b >= 2 * (1 - c):
            return YOutcome(a + b + c, "AC>=0:|A|+|B|+|C|")
        return YOutcome(1 + a + B * B / (4 * (1 - c)), "AC>=0:interior")
    # AC < 0, so A and C are both non-zero; -4AC(C^-2 - 1) without squaring C
    t = -4 * A * (1 / C - C)
    if t <= B * B and b < 2 * (1 - c):
        return YOutcome(1 - a + B * B / (4 * (1 - c)), "AC<0:1-|A|")
    if B * B < min(4 * (1 + c) ** 2, t):
        return YOutcome(1 + a + B * B / (4 * (1 + c)), "AC<0:1+|A|")
    value, branch = _r_branch(A, B, C)
    return YOutcome(value, branch)


def _psi(A, B, C, z):
    return np.abs(A + z * (B + C * z)) + 1 - (z.real**2 + z.imag**2)


def y_oracle(A: float, B: float, C: float, radial: int = 720, angular: int = 720, rounds: int = 2) -> YOutcome:
    """Polar-grid maximum followed by ``rounds`` of 10x local subdivision.

    Ties on the coarse grid go to the smaller radius, then the smaller angle.
    """
    A, B, C = float(A), float(B), float(C)
    _check(A, B, C)
    if radial < 64 or angular < 64:
        raise InputError("oracle grids need at least 64 nodes per axis")
    r = np.linspace(0.0, 1.0, radial)
    th = 2 * np.pi * np.arange(angular) / angular
    z = r[:, None] * np.exp(1j * th)[None, :]
    vals = _psi(A, B, C, z)
    i, j = np.unravel_index(np.argmax(vals), vals.shape)
    best, r0, t0 = float(vals[i, j]), r[i], th[j]
    dr, dt = r[1] - r[0], th[1] - th[0]
    for _ in range(rounds):
        rr = np.clip(r0 + dr * np.linspace(-1, 1, 21), 0.0, 1.0)
        tt = t0 + dt * np.linspace(-1, 1, 21)
        zz = rr[:, None] * np.exp(1j * tt)[None, :]
        v = _psi(A, B, C, zz)
        k, l = np.unravel_index(np.argmax(v), v.shape)
        if v[k, l] > best:
            best, r0, t0 = float(v[k, l]), rr[k], tt[l]
        dr, dt = dr / 10, dt / 10
    return YOutcome(best, "oracle", complex(r0 * np.exp(1j * t0)))
