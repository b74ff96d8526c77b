"""Truncated complex power series.

A :class:`TruncatedSeries` of order ``N`` stores the coefficients of
``z**0 .. z**N``; everything above degree ``N`` is discarded by every
operation. Values are immutable, so series can be shared freely between
threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NormalizationError, OrderMismatchError, SingularSeriesError, InputError

DEFAULT_ORDER = 8
_TINY = 1e-12


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise InputError("a series needs at least the constant coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[complex], order: int | None = None) -> "TruncatedSeries":
        """Build a series, zero-padding or truncating ``coeffs`` to ``order``."""
        c = list(coeffs)
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise InputError(f"order must be non-negative, got {order}")
        c = (c + [0] * (order + 1))[: order + 1]
        return cls(np.asarray(c, dtype=complex))

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series ``z``."""
        return cls.from_coeffs([0, 1], order)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __add__(self, other):
        return series_linear(self, _coerce(other, self.order), 1, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return series_linear(self, _coerce(other, self.order), 1, -1)

    def __rsub__(self, other):
        return series_linear(_coerce(other, self.order), self, 1, -1)

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, series_reciprocal(other))
        return TruncatedSeries(self.coeffs / complex(other))

    def allclose(self, other: "TruncatedSeries", tol: float = 1e-12) -> bool:
        _check_orders(self, other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self.coeffs)
        return f"TruncatedSeries([{terms}])"


def _coerce(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries.constant(x, order)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"series orders differ: {a.order} != {b.order}")


def series_linear(a: TruncatedSeries, b: TruncatedSeries, alpha: complex, beta: complex) -> TruncatedSeries:
    """Coefficient-wise ``alpha*a + beta*b``."""
    _check_orders(a, b)
    return TruncatedSeries(alpha * a.coeffs + beta * b.coeffs)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order."""
    _check_orders(a, b)
    n = a.order + 1
    return TruncatedSeries(np.convolve(a.coeffs, b.coeffs)[:n])


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if abs(a0) <= _TINY:
        raise SingularSeriesError("reciprocal of a series with vanishing constant term")
    c = a.coeffs
    b = np.zeros_like(c)
    b[0] = 1 / a0
    for n in range(1, c.size):
        b[n] = -np.dot(c[1 : n + 1], b[n - 1 :: -1][:n]) / a0
    return TruncatedSeries(b)


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """Principal logarithm of a series with constant term 1.

    Uses ``n*b_n = n*a_n - sum_{k<n} k*b_k*a_{n-k}``, i.e. ``b' = a'/a``
    with ``b_0 = log 1 = 0``.
    """
    c = a.coeffs
    if abs(c[0] - 1) > _TINY:
        raise NormalizationError(f"log needs constant term 1, got {c[0]}")
    b = np.zeros_like(c)
    for n in range(1, c.size):
        k = np.arange(1, n)
        b[n] = c[n] - np.dot(k * b[1:n], c[n - 1 : 0 : -1]) / n
    return TruncatedSeries(b)


def series_integrate(a: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at 0; the order grows by one."""
    n = np.arange(1, a.coeffs.size + 1)
    return TruncatedSeries(np.concatenate(([0j], a.coeffs / n)))


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Term-wise derivative; the order drops by one (order 0 maps to the zero constant)."""
    if a.order == 0:
        return TruncatedSeries([0j])
    return TruncatedSeries(a.coeffs[1:] * np.arange(1, a.coeffs.size))


def reflect(a: TruncatedSeries) -> TruncatedSeries:
    """``a(-z)``."""
    signs = (-1.0) ** np.arange(a.coeffs.size)
    return TruncatedSeries(a.coeffs * signs)


def rotate(a: TruncatedSeries, theta: float) -> TruncatedSeries:
    """``exp(-i*theta) * a(exp(i*theta) * z)`` for a series with ``a_0 = 0``."""
    if abs(a.coeffs[0]) > _TINY:
        raise NormalizationError("rotation needs a series with zero constant term")
    n = np.arange(a.coeffs.size)
    return TruncatedSeries(a.coeffs * np.exp(1j * theta * (n - 1)))


def evaluate(a: TruncatedSeries, z0: complex) -> complex:
    """Horner evaluation of the truncated polynomial at ``|z0| <= 1``."""
    if abs(z0) > 1 + _TINY:
        raise InputError(f"evaluation point outside the closed unit disk: {z0}")
    acc = 0j
    for c in a.coeffs[::-1]:
        acc = acc * z0 + c
    return complex(acc)


def series_transform(a: TruncatedSeries, kind: str, *, theta: float = 0.0, z0: complex = 0.0):
    """Dispatch to :func:`reflect`, :func:`rotate` or :func:`evaluate` by name."""
    if kind == "reflect":
        return reflect(a)
    if kind == "rotate":
        return rotate(a, theta)
    if kind == "evaluate":
        return evaluate(a, z0)
    raise InputError(f"unknown transform {kind!r}")


def geometric(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``1/(1-z)`` truncated."""
    return TruncatedSeries(np.ones(order + 1, dtype=complex))


def polynomial(coeffs: Iterable[complex], order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs(coeffs, order)


__all__ = [
    "DEFAULT_ORDER",
    "TruncatedSeries",
    "series_linear",
    "series_mul",
    "series_reciprocal",
    "series_log",
    "series_integrate",
    "series_derivative",
    "series_transform",
    "reflect",
    "rotate",
    "evaluate",
    "geometric",
    "polynomial",
]
