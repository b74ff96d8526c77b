"""The five function classes and the construction of their members from ``p``.

Four classes are defined by ``Re w(z) f'(z) > 0`` for a fixed weight
polynomial ``w``; the fifth (starlike with respect to symmetric points) by
``Re 2 z f'(z) / (f(z) - f(-z)) > 0``. In both cases the expression equals
some Carathéodory function ``p``, which pins down the Taylor coefficients
of ``f``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .caratheodory import CaratheodoryCoeffs, SchurParams
from .errors import InputError, NormalizationError
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    series_integrate,
    series_mul,
    series_reciprocal,
)


class GeometricClass(str, enum.Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    SS = "ss"

    @classmethod
    def parse(cls, value) -> "GeometricClass":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise InputError(f"unknown class {value!r}; expected one of {[c.value for c in cls]}") from None

    @property
    def weight(self) -> tuple[int, ...] | None:
        """Weight polynomial coefficients, lowest degree first (None for SS)."""
        return _WEIGHTS[self]

    @property
    def label(self) -> str:
        return "S*_s" if self is GeometricClass.SS else f"F{self.value[1]}"


_WEIGHTS = {
    GeometricClass.F1: (1, -1),
    GeometricClass.F2: (1, 0, -1),
    GeometricClass.F3: (1, -1, 1),
    GeometricClass.F4: (1, -2, 1),
    GeometricClass.SS: None,
}


@dataclass(frozen=True, eq=False)
class ClassFunction:
    tag: GeometricClass
    f: TruncatedSeries

    def __post_init__(self):
        if self.f.order < 1 or self.f[0] != 0 or self.f[1] != 1:
            raise NormalizationError("class functions are normalized: a0 = 0, a1 = 1")

    def a(self, n: int) -> complex:
        return complex(self.f[n]) if n <= self.f.order else 0j

    @property
    def a234(self) -> tuple[complex, complex, complex]:
        return self.a(2), self.a(3), self.a(4)


def build_from_p(tag, p: TruncatedSeries, order: int = DEFAULT_ORDER) -> ClassFunction:
    """Construct the member ``f`` (to degree ``order``) associated with ``p``.

    ``p`` must carry at least ``order - 1`` coefficients past the constant.
    """
    tag = GeometricClass.parse(tag)
    if order < 1:
        raise InputError(f"order must be at least 1, got {order}")
    if abs(p[0] - 1) > 1e-12:
        raise NormalizationError(f"p must satisfy p(0) = 1, got {p[0]}")
    if p.order < order - 1:
        raise InputError(f"p has order {p.order}; building f to order {order} needs {order - 1}")
    c = np.array(p.coeffs[:order], dtype=complex)
    c[0] = 1
    if tag is GeometricClass.SS:
        a = _ss_recurrence(c, order)
    else:
        pp = TruncatedSeries(c)
        w = TruncatedSeries.from_coeffs(tag.weight, order - 1)
        a = np.array(series_integrate(series_mul(pp, series_reciprocal(w))).coeffs)
        a[0], a[1] = 0, 1
    return ClassFunction(tag, TruncatedSeries(a))


def _ss_recurrence(c: np.ndarray, order: int) -> np.ndarray:
    # z f' = p * (z + a3 z^3 + a5 z^5 + ...):  n a_n = sum_{k odd <= n} c_{n-k} a_k
    a = np.zeros(order + 1, dtype=complex)
    a[1] = 1
    for n in range(2, order + 1):
        s = sum(c[n - k] * a[k] for k in range(1, n, 2))
        a[n] = s / (n - 1) if n % 2 else s / n
    return a


class A234(NamedTuple):
    a2: complex
    a3: complex
    a4: complex
    printed_variant: tuple | None = None


def a234_arrays(tag, c1, c2, c3, printed: bool = False):
    """Closed-form ``(a2, a3, a4)``; works elementwise on numpy arrays."""
    tag = GeometricClass.parse(tag)
    if tag is GeometricClass.SS:
        sign = -1 if printed else 1
        return c1 / 2, c2 / 2, (c1 * c2 + sign * 2 * c3) / 8
    if tag is GeometricClass.F1:
        return (1 + c1) / 2, (1 + c1 + c2) / 3, (1 + c1 + c2 + c3) / 4
    if tag is GeometricClass.F2:
        return c1 / 2, (1 + c2) / 3, (c1 + c3) / 4
    if tag is GeometricClass.F3:
        return (1 + c1) / 2, (c1 + c2) / 3, (c2 + c3 - 1) / 4
    return (c1 + 2) / 2, (2 * c1 + c2 + 3) / 3, (3 * c1 + 2 * c2 + c3 + 4) / 4


def closed_form_a234(tag, c: CaratheodoryCoeffs) -> A234:
    """``(a2, a3, a4)`` in terms of ``(c1, c2, c3)``.

    For SS the returned triple follows the defining relation,
    ``a4 = (c1 c2 + 2 c3) / 8``; the sign-flipped form ``(c1 c2 - 2 c3) / 8``
    found in the literature rides along as ``printed_variant``.
    """
    tag = GeometricClass.parse(tag)
    c1, c2, c3 = (complex(x) for x in c)
    a2, a3, a4 = a234_arrays(tag, c1, c2, c3)
    printed = a234_arrays(tag, c1, c2, c3, printed=True) if tag is GeometricClass.SS else None
    return A234(a2, a3, a4, printed)


def extremal_witness(tag) -> SchurParams:
    """Schur parameters of the function attaining the sharp bound for ``tag``."""
    from .bounds import eta_root
    from .functionals import case_coefficients

    tag = GeometricClass.parse(tag)
    if tag in (GeometricClass.SS, GeometricClass.F2):
        return SchurParams(0.0, 1, 1)
    eta = eta_root(tag)
    if tag is GeometricClass.F1:
        return SchurParams(eta, 1, 0)
    if tag is GeometricClass.F3:
        return SchurParams(eta, -1, 0)
    # interior maximizer of |A + B z + C z^2| + 1 - |z|^2 on the branch where it is real
    cc = case_coefficients(tag, eta)
    return SchurParams(eta, cc.B / (2 * (1 + abs(cc.C))), 1)
