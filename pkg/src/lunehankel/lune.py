"""The lune target region and its two subordination classes.

The target is the univalent map ``q(z) = z + sqrt(1 + z**2)`` (branch with
``q(0) = 1``), whose image of the unit disk is the lune
``{w : |w**2 - 1| <= 2|w|}``.  A normalized function ``f`` is lune-starlike
when ``z*f'/f`` is subordinate to ``q`` and lune-convex when
``1 + z*f''/f'`` is.  This module provides the series-level forward maps
from a Schwarz function to ``f``, the closed-form coefficient maps in the
positive-real-part coordinates, sampled membership checking, and the
extremal functions attaining the sharp Hankel bounds of each class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .caratheodory import CaratheodoryCoeffs
from .series import DEFAULT_ORDER, TruncatedSeries

_STRUCT_TOL = 1e-12

#: Membership is sampled, not proved: radii are capped here so that the
#: default truncation tail stays below the margin tolerance.
MAX_MEMBERSHIP_RADIUS = 0.9


class LuneClass(Enum):
    """The two subordination classes handled by this package."""

    STARLIKE = "starlike"
    CONVEX = "convex"


@dataclass(frozen=True)
class TaylorPrefix:
    """Coefficients a2..a6 of a normalized function (a0=0, a1=1 implicit);
    a5 and a6 are present only when the source had sufficient order."""

    a2: complex
    a3: complex
    a4: complex
    a5: complex | None = None
    a6: complex | None = None

    @classmethod
    def from_series(cls, f: TruncatedSeries) -> TaylorPrefix:
        c = f.coeffs
        if abs(c[0]) > _STRUCT_TOL or abs(c[1] - 1.0) > _STRUCT_TOL:
            raise ValueError("prefix extraction requires f(0) = 0 and f'(0) = 1")
        if f.order < 4:
            raise ValueError("need order >= 4 to extract a2..a4")
        return cls(a2=complex(c[2]), a3=complex(c[3]), a4=complex(c[4]),
                   a5=complex(c[5]) if f.order >= 5 else None,
                   a6=complex(c[6]) if f.order >= 6 else None)


@dataclass(frozen=True)
class MembershipReport:
    """Result of sampling the lune inequality |v**2 - 1| <= 2|v| over circles.

    ``worst_margin`` is the minimum of ``2|v| - |v**2 - 1|`` over all
    samples; positive means strictly inside the lune."""

    passed: bool
    worst_margin: float
    location: complex
    lune_class: LuneClass
    radii: tuple
    samples_per_circle: int
    tol: float


def q_series(order: int) -> TruncatedSeries:
    """Series of the lune map q(z) = z + sqrt(1 + z**2) with q(0) = 1."""
    if order < 1:
        raise ValueError("order must be >= 1")
    c = np.zeros(order + 1, dtype=complex)
    c[0] = 1.0
    if order >= 2:
        c[2] = 1.0
    return TruncatedSeries(c).sqrt() + TruncatedSeries.variable(order)


def starlike_coeffs_from_c(c: CaratheodoryCoeffs) -> TaylorPrefix:
    """Closed-form (a2, a3, a4) of a lune-starlike function in terms of the
    coefficients of its positive-real-part transform:

        a2 = c1/2,  a3 = c1**2/16 + c2/4,  a4 = c1*c2/24 + c3/6 - c1**3/96.
    """
    c1, c2, c3 = c.c1, c.c2, c.c3
    return TaylorPrefix(a2=c1 / 2.0,
                        a3=c1 * c1 / 16.0 + c2 / 4.0,
                        a4=c1 * c2 / 24.0 + c3 / 6.0 - c1 ** 3 / 96.0)


def convex_coeffs_from_c(c: CaratheodoryCoeffs) -> TaylorPrefix:
    """Closed-form (a2, a3, a4) of a lune-convex function:

        a2 = c1/4,  a3 = c1**2/48 + c2/12,  a4 = c1*c2/96 + c3/24 - c1**3/384.
    """
    c1, c2, c3 = c.c1, c.c2, c.c3
    return TaylorPrefix(a2=c1 / 4.0,
                        a3=c1 * c1 / 48.0 + c2 / 12.0,
                        a4=c1 * c2 / 96.0 + c3 / 24.0 - c1 ** 3 / 384.0)


def coeffs_from_c(c: CaratheodoryCoeffs, lune_class: LuneClass) -> TaylorPrefix:
    if lune_class is LuneClass.STARLIKE:
        return starlike_coeffs_from_c(c)
    return convex_coeffs_from_c(c)


def f_from_schwarz(w: TruncatedSeries, lune_class: LuneClass,
                   order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Solve the subordination equation for f given a Schwarz function w.

    With Q = q(w), the starlike case solves z*f'/f = Q through the
    recurrence (n-1)*a_n = sum_{k=1}^{n-1} Q_k a_{n-k}; the convex case
    solves z*F'/F = Q - 1 for F = f' the same way and integrates termwise
    with f(0) = 0, f'(0) = 1.
    """
    if abs(w.constant_term) > _STRUCT_TOL:
        raise ValueError("a Schwarz function must vanish at 0")
    n = min(order, w.order)
    q = q_series(n).compose(w.truncated(n)).coeffs
    if lune_class is LuneClass.STARLIKE:
        a = np.zeros(n + 1, dtype=complex)
        a[1] = 1.0
        for m in range(2, n + 1):
            a[m] = np.dot(q[1:m], a[m - 1 : 0 : -1]) / (m - 1)
        return TruncatedSeries(a)
    fp = np.zeros(n, dtype=complex)  # coefficients of F = f'
    fp[0] = 1.0
    for m in range(1, n):
        fp[m] = np.dot(q[1 : m + 1], fp[m - 1 :: -1][:m]) / m
    a = np.zeros(n + 1, dtype=complex)
    a[1:] = fp / np.arange(1, n + 1)
    return TruncatedSeries(a)


def _lune_transform(f: TruncatedSeries, lune_class: LuneClass) -> TruncatedSeries:
    """The quantity tested for lune membership: z*f'/f or 1 + z*f''/f'."""
    c = f.coeffs
    if abs(c[0]) > _STRUCT_TOL:
        raise ValueError("membership requires f(0) = 0")
    if abs(c[1] - 1.0) > _STRUCT_TOL:
        raise ValueError("membership requires f'(0) = 1")
    n = f.order
    if lune_class is LuneClass.STARLIKE:
        zfp = TruncatedSeries(c[1:] * np.arange(1, n + 1))  # (z f')/z
        return zfp / f.divided_by_z()
    fp = f.derivative()
    zfpp = TruncatedSeries(fp.coeffs * np.arange(n))  # z * F' for F = f'
    return zfpp / fp + 1.0


def membership_check(f: TruncatedSeries, lune_class: LuneClass,
                     radii=(0.5, 0.8, 0.9),
                     samples_per_circle: int = 720,
                     tol: float = 1e-3) -> MembershipReport:
    """Sample |v**2 - 1| <= 2|v| + tol for the class transform v of f.

    Radii are capped at 0.9: beyond that the truncation tail of the
    default order-128 series could eat into the reported margin.
    """
    radii = tuple(float(r) for r in radii)
    for r in radii:
        if not 0.0 < r <= MAX_MEMBERSHIP_RADIUS:
            raise ValueError(
                f"membership radii must lie in (0, {MAX_MEMBERSHIP_RADIUS}]")
    v = _lune_transform(f, lune_class)
    angles = np.exp(2j * np.pi * np.arange(samples_per_circle) / samples_per_circle)
    worst = np.inf
    where = 0j
    for r in radii:
        zs = r * angles
        vals = v.eval_many(zs)
        margin = 2.0 * np.abs(vals) - np.abs(vals * vals - 1.0)
        k = int(np.argmin(margin))
        if margin[k] < worst:
            worst = float(margin[k])
            where = complex(zs[k])
    return MembershipReport(passed=bool(worst >= -tol), worst_margin=worst,
                            location=where, lune_class=lune_class, radii=radii,
                            samples_per_circle=samples_per_circle, tol=tol)


def _lacunary_generator(order: int) -> TruncatedSeries:
    """Antiderivative of (x**2 + sqrt(1 + x**4) - 1)/x, the integrand shared
    by both extremal constructions."""
    z = TruncatedSeries.variable(order)
    z4 = np.zeros(order + 1, dtype=complex)
    z4[0] = 1.0
    if order >= 4:
        z4[4] = 1.0
    inner = z * z + TruncatedSeries(z4).sqrt() - 1.0
    return inner.integrate_quotient()


def extremal_g(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The starlike extremal z*exp(int_0^z (x**2 + sqrt(1+x**4) - 1)/x dx)
    = z + z**3/2 + z**5/4 + ...; attains Hankel modulus 1/16."""
    if order < 5:
        raise ValueError("order must be >= 5")
    return TruncatedSeries.variable(order) * _lacunary_generator(order).exp()


def extremal_h(order: int = DEFAULT_ORDER) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The convex extremal pair (h0, h).

    h0 scales the starlike generator by sqrt(69/68) inside the
    exponential; h = int_0^z h0(x)/x dx has a3 = sqrt(69)/(12*sqrt(17))
    and attains Hankel modulus 23/3264.
    """
    if order < 5:
        raise ValueError("order must be >= 5")
    scale = math.sqrt(69.0 / 68.0)
    h0 = TruncatedSeries.variable(order) * (scale * _lacunary_generator(order)).exp()
    return h0, h0.integrate_quotient()


def koebe(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The Koebe function z/(1-z)**2 = sum n*z**n; univalent but outside
    both lune classes, kept as a negative control for the membership
    checks."""
    return TruncatedSeries(np.arange(order + 1, dtype=complex))
