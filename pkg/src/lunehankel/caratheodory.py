"""Coefficient machinery for normalized functions of positive real part.

The first three Taylor coefficients of an analytic function ``p`` with
``p(0) = 1`` and positive real part on the unit disk are parameterized,
after rotating so that ``c1 >= 0``, by a triple ``(tau1, tau2, tau3)``
with ``tau1`` in ``[0, 1]`` and ``tau2, tau3`` in the closed unit disk:

    c1 = 2*tau1
    c2 = 2*tau1**2 + 2*(1 - tau1**2)*tau2
    c3 = 2*tau1**3 + 4*(1 - tau1**2)*tau1*tau2
         - 2*(1 - tau1**2)*tau1*tau2**2
         + 2*(1 - tau1**2)*(1 - |tau2|**2)*tau3

When the innermost free parameter lies on the unit circle the generating
function is unique and rational, and :func:`reconstruct_p` expands it as
a :class:`~lunehankel.series.TruncatedSeries`.  Interior triples have no
canonical representative and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .series import DEFAULT_ORDER, TruncatedSeries

#: Parameters whose modulus is within this tolerance of 1 are snapped to
#: the unit circle at construction, so that downstream branch choices
#: never depend on round-off.
BOUNDARY_TOL = 1e-12

_COEFF_TOL = 1e-9


class UnsupportedConfigurationError(ValueError):
    """Raised for parameter triples with no canonical generating function."""


@dataclass(frozen=True)
class CaratheodoryPoint:
    """Parameter triple (tau1, tau2, tau3); tau1 real in [0,1], others in the
    closed unit disk."""

    tau1: float
    tau2: complex
    tau3: complex

    def __post_init__(self):
        t1 = float(self.tau1)
        if abs(t1 - 1.0) <= BOUNDARY_TOL:
            t1 = 1.0
        elif abs(t1) <= BOUNDARY_TOL:
            t1 = 0.0
        if not 0.0 <= t1 <= 1.0:
            raise ValueError(f"tau1 must lie in [0, 1], got {self.tau1}")
        object.__setattr__(self, "tau1", t1)
        for name in ("tau2", "tau3"):
            t = complex(getattr(self, name))
            m = abs(t)
            if m > 1.0 + BOUNDARY_TOL:
                raise ValueError(f"|{name}| must be <= 1, got {m}")
            if abs(m - 1.0) <= BOUNDARY_TOL and m > 0.0:
                t = t / m
            object.__setattr__(self, name, t)

    @property
    def boundary_stratum(self) -> str | None:
        """Which parameter sits on its boundary circle: 'tau1', 'tau2',
        'tau3' (checked in that order), or None for interior triples."""
        if self.tau1 == 1.0:
            return "tau1"
        if abs(abs(self.tau2) - 1.0) <= BOUNDARY_TOL:
            return "tau2"
        if abs(abs(self.tau3) - 1.0) <= BOUNDARY_TOL:
            return "tau3"
        return None


@dataclass(frozen=True)
class CaratheodoryCoeffs:
    """Coefficients (c1, c2, c3) of a positive-real-part function, with the
    rotation normalization c1 real in [0, 2].  All moduli are at most 2."""

    c1: float
    c2: complex
    c3: complex

    def __post_init__(self):
        c1 = float(self.c1)
        if not -_COEFF_TOL <= c1 <= 2.0 + _COEFF_TOL:
            raise ValueError(f"c1 must lie in [0, 2], got {c1}")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", complex(self.c2))
        object.__setattr__(self, "c3", complex(self.c3))
        for name in ("c2", "c3"):
            if abs(getattr(self, name)) > 2.0 + _COEFF_TOL:
                raise ValueError(f"|{name}| must be <= 2")


@dataclass(frozen=True)
class PositivityReport:
    """Result of sampling Re p over circles in the disk."""

    passed: bool
    min_real_part: float
    location: complex
    radii: tuple
    samples_per_circle: int
    tol: float


def coeffs_from_params(t: CaratheodoryPoint) -> CaratheodoryCoeffs:
    """Map a parameter triple to the coefficients (c1, c2, c3)."""
    t1, t2, t3 = t.tau1, t.tau2, t.tau3
    u = 1.0 - t1 * t1
    c2 = 2.0 * t1 * t1 + 2.0 * u * t2
    c3 = (2.0 * t1 ** 3 + 4.0 * u * t1 * t2 - 2.0 * u * t1 * t2 * t2
          + 2.0 * u * (1.0 - abs(t2) ** 2) * t3)
    return CaratheodoryCoeffs(2.0 * t1, c2, c3)


def reconstruct_p(t: CaratheodoryPoint, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expand the unique positive-real-part function realizing a boundary
    parameter triple.

    Exactly one configuration must hold: tau1 = 1; or tau1 < 1 and
    |tau2| = 1; or tau1 < 1, |tau2| < 1 and |tau3| = 1.  The rational
    closed form for that stratum is expanded by series division.
    """
    stratum = t.boundary_stratum
    if stratum is None:
        raise UnsupportedConfigurationError(
            "no canonical positive-real-part function exists for an interior "
            "(tau1, tau2, tau3); move one parameter to its boundary")
    t1, t2, t3 = t.tau1, t.tau2, t.tau3
    if stratum == "tau1":
        num = [1.0, t1]
        den = [1.0, -t1]
    elif stratum == "tau2":
        num = [1.0, t1 * t2 + t1, t2]
        den = [1.0, t1 * t2 - t1, -t2]
    else:
        t2c = t2.conjugate()
        num = [1.0, t2c * t3 + t1 * t2 + t1, t1 * t3 + t1 * t2c * t3 + t2, t3]
        den = [1.0, t2c * t3 + t1 * t2 - t1, t1 * t3 - t1 * t2c * t3 - t2, -t3]
    return TruncatedSeries(num, order) / TruncatedSeries(den, order)


def schwarz_from_p(p: TruncatedSeries) -> TruncatedSeries:
    """The transfer function w = (p - 1)/(p + 1); maps p(0)=1 to w(0)=0."""
    if abs(p.constant_term - 1.0) > BOUNDARY_TOL:
        raise ValueError("schwarz_from_p requires p(0) = 1")
    return (p - 1.0) / (p + 1.0)


def is_caratheodory(p: TruncatedSeries,
                    radii=(0.5, 0.8, 0.9),
                    samples_per_circle: int = 720,
                    tol: float = 1e-3) -> PositivityReport:
    """Sample Re p on circles and report whether it stays above -tol.

    Sampling cannot certify positivity on the open disk; the report
    records the radii and sample counts actually covered.
    """
    radii = tuple(float(r) for r in radii)
    for r in radii:
        if not 0.0 < r < 1.0:
            raise ValueError("sampling radii must lie in (0, 1)")
    worst = np.inf
    where = 0j
    angles = np.exp(2j * np.pi * np.arange(samples_per_circle) / samples_per_circle)
    for r in radii:
        zs = r * angles
        re = p.eval_many(zs).real
        k = int(np.argmin(re))
        if re[k] < worst:
            worst = float(re[k])
            where = complex(zs[k])
    return PositivityReport(passed=bool(worst > -tol), min_real_part=worst,
                            location=where, radii=radii,
                            samples_per_circle=samples_per_circle, tol=tol)
