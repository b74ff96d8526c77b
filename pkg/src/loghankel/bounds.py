"""Closed-form bound curves and their maximizers.

For F1 and F3 the bound is ``X(eta) / 2304`` with a quartic ``X``; for F4 it
is ``X(eta)`` with the rational

    X(x) = (1 + x) (x^4 + 20 x^3 - 114 x^2 + 4 x + 125) / (48 (17 + x)).

In each case ``eta`` is the critical point of ``X`` in a known bracket.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import bisect

from .classes import GeometricClass
from .errors import BracketError, InputError


class BoundKind(str, enum.Enum):
    CONSTANT = "constant"
    QUARTIC = "quartic-over-2304"
    RATIONAL = "rational"


@dataclass(frozen=True)
class BoundSpec:
    tag: GeometricClass
    bound_kind: BoundKind
    X: tuple[float, ...]  # lowest degree first; for RATIONAL the numerator quintic
    eta_bracket: tuple[float, float] | None
    scale: float

    def X_value(self, x):
        if self.bound_kind is BoundKind.RATIONAL:
            return Polynomial(self.X)(x) / (48 * (17 + x))
        return Polynomial(self.X)(x)

    def X_prime(self, x):
        """Exact derivative of ``X`` (quotient rule for the rational case)."""
        p = Polynomial(self.X)
        if self.bound_kind is BoundKind.RATIONAL:
            d = 48 * (17 + x)
            return (p.deriv()(x) * d - p(x) * 48) / (d * d)
        return p.deriv()(x)


_F4_NUM = Polynomial([1, 1]) * Polynomial([125, 4, -114, 20, 1])

BOUND_SPECS = {
    GeometricClass.SS: BoundSpec(GeometricClass.SS, BoundKind.CONSTANT, (0.25,), None, 1.0),
    GeometricClass.F2: BoundSpec(GeometricClass.F2, BoundKind.CONSTANT, (0.25,), None, 1.0),
    GeometricClass.F1: BoundSpec(
        GeometricClass.F1, BoundKind.QUARTIC, (357, 24, -392, -96, -48), (0.0, 0.1), 1 / 2304
    ),
    GeometricClass.F3: BoundSpec(
        GeometricClass.F3, BoundKind.QUARTIC, (469, 328, -264, -224, -176), (0.2, 0.5), 1 / 2304
    ),
    GeometricClass.F4: BoundSpec(
        GeometricClass.F4, BoundKind.RATIONAL, tuple(float(v) for v in _F4_NUM.coef), (0.3369, 0.9), 1.0
    ),
}


def bound_spec(tag) -> BoundSpec:
    return BOUND_SPECS[GeometricClass.parse(tag)]


@lru_cache(maxsize=None)
def eta_root(tag) -> float:
    """Critical point of the bound curve, by bisection on ``X'`` to 1e-12."""
    spec = bound_spec(tag)
    if spec.eta_bracket is None:
        raise InputError(f"class {spec.tag.value} has a constant bound and no eta")
    lo, hi = spec.eta_bracket
    flo, fhi = spec.X_prime(lo), spec.X_prime(hi)
    if np.sign(flo) == np.sign(fhi):
        raise BracketError(f"X' has no sign change on [{lo}, {hi}] for {spec.tag.value}")
    return float(bisect(spec.X_prime, lo, hi, xtol=1e-12, rtol=4 * np.finfo(float).eps, maxiter=200))


def theoretical_bound(tag) -> float:
    spec = bound_spec(tag)
    if spec.bound_kind is BoundKind.CONSTANT:
        return 0.25
    return float(spec.scale * spec.X_value(eta_root(spec.tag)))
