"""Logarithmic coefficients and the second Hankel determinant H_{2,1}.

For a normalized function f the logarithmic coefficients gamma_n are half
the Taylor coefficients of log(f(z)/z); the determinant of interest is

    H_{2,1} = gamma1*gamma3 - gamma2**2
            = (a2**4 - 12*a3**2 + 12*a2*a4) / 48.

The same functional is computed here in four coordinate systems — from a
series, from a Taylor prefix, from the positive-real-part coefficients
(c1, c2, c3), and from the parameter triple (tau1, tau2, tau3) — so each
route can serve as an independent oracle for the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .caratheodory import (CaratheodoryCoeffs, CaratheodoryPoint,
                           coeffs_from_params, reconstruct_p, schwarz_from_p)
from .lune import LuneClass, TaylorPrefix, coeffs_from_c, f_from_schwarz
from .series import TruncatedSeries

_STRUCT_TOL = 1e-12
_CROSS_CHECK_TOL = 1e-9


class CoordinateSystem(Enum):
    TAYLOR = "taylor"
    CARATHEODORY = "caratheodory-c"
    TAU = "tau-params"


@dataclass(frozen=True)
class LogCoeffs:
    """Logarithmic coefficients gamma1..gamma5; gamma4/gamma5 are None when
    the source did not supply a5/a6."""

    gamma1: complex
    gamma2: complex
    gamma3: complex
    gamma4: complex | None = None
    gamma5: complex | None = None

    def indexed_sequence(self) -> tuple:
        """Coefficients indexed by subscript (entry 0 is a placeholder),
        truncated before the first unavailable gamma; ready for
        :func:`hankel_generic`."""
        seq = [0j, self.gamma1, self.gamma2, self.gamma3]
        for g in (self.gamma4, self.gamma5):
            if g is None:
                break
            seq.append(g)
        return tuple(seq)


@dataclass(frozen=True)
class HankelValue:
    """A computed H_{2,1} value, tagged with the coordinate system that
    produced it; values from different systems for the same function agree
    to 1e-9."""

    value: complex
    coordinate_system: CoordinateSystem
    class_tag: LuneClass | None = None

    @property
    def modulus(self) -> float:
        return abs(self.value)


def log_coeffs_series(f: TruncatedSeries) -> LogCoeffs:
    """Extract gamma1..gamma5 from a series: half the coefficients of
    log(f/z).  Requires f(0) = 0, f'(0) = 1 and order >= 6."""
    if f.order < 6:
        raise ValueError("need order >= 6 to extract gamma1..gamma5")
    c = f.coeffs
    if abs(c[0]) > _STRUCT_TOL or abs(c[1] - 1.0) > _STRUCT_TOL:
        raise ValueError("logarithmic coefficients need f(0) = 0, f'(0) = 1")
    ell = f.divided_by_z().log().coeffs
    return LogCoeffs(*(complex(ell[n]) / 2.0 for n in range(1, 6)))


def log_coeffs_closed(a: TaylorPrefix) -> LogCoeffs:
    """gamma1..gamma5 from the closed polynomial system in a2..a6; gamma4
    and gamma5 are computed only when a5 and a6 are available."""
    a2, a3, a4 = a.a2, a.a3, a.a4
    g1 = a2 / 2.0
    g2 = (a3 - a2 * a2 / 2.0) / 2.0
    g3 = (a4 - a2 * a3 + a2 ** 3 / 3.0) / 2.0
    g4 = None
    g5 = None
    if a.a5 is not None:
        g4 = (a.a5 - a2 * a4 + a2 * a2 * a3 - a3 * a3 / 2.0 - a2 ** 4 / 4.0) / 2.0
        if a.a6 is not None:
            g5 = (a.a6 - a2 * a.a5 - a3 * a4 + a2 * a3 * a3 + a2 * a2 * a4
                  - a2 ** 3 * a3 + a2 ** 5 / 5.0) / 2.0
    return LogCoeffs(g1, g2, g3, g4, g5)


def h21_log(gamma: LogCoeffs, prefix: TaylorPrefix | None = None) -> HankelValue:
    """H_{2,1} = gamma1*gamma3 - gamma2**2.

    When a Taylor prefix is supplied, the equivalent form
    (a2**4 - 12*a3**2 + 12*a2*a4)/48 is evaluated as a cross-check and a
    mismatch beyond 1e-9 raises.
    """
    value = gamma.gamma1 * gamma.gamma3 - gamma.gamma2 ** 2
    if prefix is not None:
        alt = h21_from_taylor(prefix)
        if abs(value - alt) > _CROSS_CHECK_TOL:
            raise ValueError(
                f"gamma-form {value} and Taylor-form {alt} disagree; the "
                "prefix does not belong to the same function")
    return HankelValue(complex(value), CoordinateSystem.TAYLOR)


def h21_from_taylor(a: TaylorPrefix) -> complex:
    """The Taylor form (a2**4 - 12*a3**2 + 12*a2*a4)/48."""
    return complex((a.a2 ** 4 - 12.0 * a.a3 ** 2 + 12.0 * a.a2 * a.a4) / 48.0)


def h21_from_c(c: CaratheodoryCoeffs, lune_class: LuneClass) -> HankelValue:
    """H_{2,1} as a quartic in (c1, c2, c3):

        starlike: (-3*c1**4 - 8*c1**2*c2 - 48*c2**2 + 64*c1*c3) / 3072
        convex:   (-7*c1**4 - 8*c1**2*c2 - 64*c2**2 + 96*c1*c3) / 36864
    """
    c1, c2, c3 = c.c1, c.c2, c.c3
    if lune_class is LuneClass.STARLIKE:
        v = (-3.0 * c1 ** 4 - 8.0 * c1 * c1 * c2 - 48.0 * c2 * c2
             + 64.0 * c1 * c3) / 3072.0
    else:
        v = (-7.0 * c1 ** 4 - 8.0 * c1 * c1 * c2 - 64.0 * c2 * c2
             + 96.0 * c1 * c3) / 36864.0
    return HankelValue(complex(v), CoordinateSystem.CARATHEODORY, lune_class)


def h21_tau_split(tau1, tau2, lune_class: LuneClass):
    """Split H_{2,1} in tau-coordinates as base + coeff*tau3.

    The tau3 coefficient is real and non-negative for tau1 in [0, 1] and
    |tau2| <= 1, which is what lets the extremal search eliminate tau3
    analytically.  Accepts numpy arrays for tau2 and broadcasts.
    """
    u = 1.0 - tau1 * tau1
    m2 = np.abs(tau2) ** 2
    if lune_class is LuneClass.STARLIKE:
        base = (-3.0 * tau1 ** 4 + 4.0 * u * tau1 * tau1 * tau2
                - 4.0 * u * (3.0 + tau1 * tau1) * tau2 * tau2) / 192.0
        coeff = 16.0 * tau1 * u * (1.0 - m2) / 192.0
    else:
        base = (-3.0 * tau1 ** 4 + 12.0 * u * tau1 * tau1 * tau2
                - 8.0 * u * (2.0 + tau1 * tau1) * tau2 * tau2) / 2304.0
        coeff = 24.0 * tau1 * u * (1.0 - m2) / 2304.0
    return base, coeff


def h21_from_tau(t: CaratheodoryPoint, lune_class: LuneClass) -> HankelValue:
    """H_{2,1} as a polynomial in (tau1, tau2, tau3); agrees with
    :func:`h21_from_c` composed with the parameter-to-coefficient map."""
    base, coeff = h21_tau_split(t.tau1, t.tau2, lune_class)
    return HankelValue(complex(base + coeff * t.tau3), CoordinateSystem.TAU,
                       lune_class)


def h21_all_routes(t: CaratheodoryPoint, lune_class: LuneClass) -> dict:
    """Evaluate H_{2,1} for the boundary point t along every route: the
    series pipeline, the Taylor closed form, the c-coordinates and the
    tau-coordinates.  Used by the cross-validation suites."""
    c = coeffs_from_params(t)
    f = f_from_schwarz(schwarz_from_p(reconstruct_p(t, order=16)), lune_class,
                       order=16)
    gamma = log_coeffs_series(f)
    return {
        "series": h21_log(gamma).value,
        "taylor": h21_from_taylor(coeffs_from_c(c, lune_class)),
        "caratheodory": h21_from_c(c, lune_class).value,
        "tau": h21_from_tau(t, lune_class).value,
    }


def hankel_generic(seq, q: int, n: int) -> complex:
    """Determinant of the q x q Hankel matrix with entries seq[n+i+j].

    ``seq`` is indexed by coefficient subscript, so seq[k] must be the
    k-th coefficient of whatever sequence is being tested.  Expansion is
    by cofactors; only small q is ever exercised.
    """
    if q < 1 or n < 0:
        raise ValueError("need q >= 1 and n >= 0")
    if len(seq) <= n + 2 * (q - 1):
        raise ValueError(
            f"sequence of length {len(seq)} cannot fill a {q}x{q} Hankel "
            f"matrix starting at index {n}")
    m = [[complex(seq[n + i + j]) for j in range(q)] for i in range(q)]
    return _det(m)


def _det(m) -> complex:
    if len(m) == 1:
        return m[0][0]
    total = 0j
    for j, pivot in enumerate(m[0]):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * pivot * _det(minor)
    return total


def rotate(f: TruncatedSeries, theta: float) -> TruncatedSeries:
    """The rotation f_theta(z) = exp(-i*theta) * f(exp(i*theta) * z), which
    maps a_n to exp(i*(n-1)*theta) * a_n and multiplies H_{2,1} by
    exp(4i*theta)."""
    c = f.coeffs
    if abs(c[0]) > _STRUCT_TOL or abs(c[1] - 1.0) > _STRUCT_TOL:
        raise ValueError("rotation is defined for normalized f")
    phases = np.exp(1j * theta * (np.arange(f.order + 1) - 1))
    return TruncatedSeries(c * phases)
