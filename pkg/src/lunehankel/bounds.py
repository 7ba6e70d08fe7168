"""Closed-form disk maximization and the global extremal search.

The scalar workhorse is

    Y(A, B, C) = max{ |A + B*z + C*z**2| + 1 - |z|**2 : |z| <= 1 }

for real A, B, C, which has a seven-branch piecewise closed form (two
branches when A*C >= 0, two when A*C < 0, and a three-branch residual
R(A, B, C)).  :func:`y_closed` implements every branch and reports which
one fired; :func:`y_oracle` checks it by brute force on a polar grid.

For each lune class, |H_{2,1}| restricted to tau1 in (0, 1) factors as
prefactor(tau1) * Y(A(tau1), B(tau1), C(tau1)); maximizing the resulting
quartic bound curve over [0, 1] yields the sharp constants 1/16 and
23/3264.  :func:`global_search` certifies them by grid search with local
refinement over the full (tau1, tau2) domain, eliminating tau3
analytically.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .caratheodory import CaratheodoryPoint
from .hankel import h21_tau_split
from .lune import LuneClass

#: The theorem-level sharp bounds certified by the search.
SHARP_BOUNDS = {LuneClass.STARLIKE: 1.0 / 16.0, LuneClass.CONVEX: 23.0 / 3264.0}

#: Environment variable consulted by the parallel grid sections.
THREADS_ENV_VAR = "LUNEHANKEL_THREADS"

BRANCH_NAMES = ("case-i-first", "case-i-second", "case-ii-first",
                "case-ii-second", "R-first", "R-second", "R-third")


@dataclass(frozen=True)
class YArgs:
    """Real arguments of the disk maximizer Y."""

    A: float
    B: float
    C: float

    def __post_init__(self):
        for name in ("A", "B", "C"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class YClosed:
    """Value of Y together with the closed-form branch that produced it."""

    value: float
    branch: str


def y_closed(args: YArgs) -> YClosed:
    """Evaluate Y(A, B, C) by its piecewise closed form.

    Branches, in the order tested (ties resolve to the first listed
    branch; the formulas agree on every seam):

      A*C >= 0:
        case-i-first    |B| >= 2(1 - |C|):   |A| + |B| + |C|
        case-i-second   otherwise:           1 + |A| + B**2 / (4(1 - |C|))
      A*C < 0, with T = -4*A*C*(C**-2 - 1):
        case-ii-first   T <= B**2 and |B| < 2(1 - |C|):
                                             1 - |A| + B**2 / (4(1 - |C|))
        case-ii-second  B**2 < min{4(1 + |C|)**2, T}:
                                             1 + |A| + B**2 / (4(1 + |C|))
        otherwise the residual R:
          R-first       |C|(|B| + 4|A|) <= |A*B|:  |A| + |B| - |C|
          R-second      |A*B| <= |C|(|B| - 4|A|): -|A| + |B| + |C|
          R-third       otherwise:  (|C| + |A|) * sqrt(1 - B**2/(4*A*C))
    """
    A, B, C = args.A, args.B, args.C
    aA, aB, aC = abs(A), abs(B), abs(C)
    if A * C >= 0.0:
        if aB >= 2.0 * (1.0 - aC):
            return YClosed(aA + aB + aC, "case-i-first")
        return YClosed(1.0 + aA + B * B / (4.0 * (1.0 - aC)), "case-i-second")
    t = -4.0 * A * C * (C ** -2 - 1.0)
    if t <= B * B and aB < 2.0 * (1.0 - aC):
        return YClosed(1.0 - aA + B * B / (4.0 * (1.0 - aC)), "case-ii-first")
    if B * B < min(4.0 * (1.0 + aC) ** 2, t):
        return YClosed(1.0 + aA + B * B / (4.0 * (1.0 + aC)), "case-ii-second")
    if aC * (aB + 4.0 * aA) <= aA * aB:
        return YClosed(aA + aB - aC, "R-first")
    if aA * aB <= aC * (aB - 4.0 * aA):
        return YClosed(-aA + aB + aC, "R-second")
    return YClosed((aC + aA) * math.sqrt(1.0 - B * B / (4.0 * A * C)), "R-third")


@lru_cache(maxsize=8)
def _polar_grid(radial_steps: int, angular_steps: int):
    r = np.linspace(0.0, 1.0, radial_steps)
    th = np.linspace(0.0, 2.0 * np.pi, angular_steps, endpoint=False)
    z = np.outer(r, np.exp(1j * th))
    return r, th, z, 1.0 - r[:, None] ** 2


def _objective(A: float, B: float, C: float, z: np.ndarray) -> np.ndarray:
    return np.abs(A + z * (B + C * z)) + 1.0 - np.abs(z) ** 2


def y_oracle(args: YArgs, radial_steps: int = 100,
             angular_steps: int = 100) -> float:
    """Brute-force maximum of |A + B*z + C*z**2| + 1 - |z|**2 over the
    closed disk.

    A uniform polar grid is scanned, then one local refinement pass
    (shrinking the cell by the step count, far more than 10x) is run
    around every near-top local maximum of the grid, not just the single
    argmax: distinct basins can differ by less than the coarse-grid
    resolution.  The boundary circle, where the angular curvature is
    largest, additionally gets a dense one-dimensional sweep with a
    parabolic polish.  Accuracy is ~1e-5 at the default step counts.
    """
    if radial_steps < 64 or angular_steps < 64:
        raise ValueError("oracle grids need at least 64 steps per axis")
    A, B, C = args.A, args.B, args.C
    r, th, z, bump = _polar_grid(radial_steps, angular_steps)
    F = np.abs(A + z * (B + C * z)) + bump
    best = float(F.max())

    # candidates: grid-local maxima within 0.05 of the top (0.05 safely
    # exceeds the coarse grid's own resolution error)
    local = (F >= np.roll(F, 1, axis=1)) & (F >= np.roll(F, -1, axis=1))
    local[1:] &= F[1:] >= F[:-1]
    local[:-1] &= F[:-1] >= F[1:]
    local &= F >= best - 0.05
    cand = np.argwhere(local)
    if len(cand) > 16:
        cand = cand[np.argsort(F[local])[::-1][:16]]
    dr = r[1] - r[0]
    dt = th[1] - th[0]
    for i, j in cand:
        rr = np.linspace(max(0.0, r[i] - dr), min(1.0, r[i] + dr), radial_steps)
        tt = np.linspace(th[j] - dt, th[j] + dt, angular_steps)
        zz = np.outer(rr, np.exp(1j * tt))
        best = max(best, float(_objective(A, B, C, zz).max()))

    # dense boundary sweep with parabolic interpolation at the peak
    nb = 8 * angular_steps
    tb = np.linspace(0.0, 2.0 * np.pi, nb, endpoint=False)
    zb = np.exp(1j * tb)
    fb = np.abs(A + zb * (B + C * zb))
    k = int(np.argmax(fb))
    best = max(best, float(fb[k]))
    f0, f1, f2 = fb[k - 1], fb[k], fb[(k + 1) % nb]
    curv = f0 - 2.0 * f1 + f2
    if curv < 0.0:
        tstar = tb[k] + 0.5 * (2.0 * np.pi / nb) * (f0 - f2) / curv
        zs = np.exp(1j * tstar)
        best = max(best, float(abs(A + zs * (B + C * zs))))
    return best


def prefactor(tau1: float, lune_class: LuneClass) -> float:
    """The factor multiplying Y in the interior-tau1 factorization of
    |H_{2,1}|: tau1*(1 - tau1**2)/12 (starlike) or /96 (convex)."""
    scale = 12.0 if lune_class is LuneClass.STARLIKE else 96.0
    return tau1 * (1.0 - tau1 * tau1) / scale


def abc_for_class(tau1: float, lune_class: LuneClass) -> YArgs:
    """The (A, B, C) arguments of Y for interior tau1.

        starlike: A = -3*tau1**3/(16*(1-tau1**2)), B = tau1/4,
                  C = -(3 + tau1**2)/(4*tau1)
        convex:   A = -tau1**3/(8*(1-tau1**2)),  B = tau1/2,
                  C = -(2 + tau1**2)/(3*tau1)

    Both formulas are singular at tau1 = 0 and 1; the endpoints are
    handled directly by the search, mirroring the case split of the
    underlying maximization.  A*C > 0 and |B| >= 2(1 - |C|) hold
    throughout (0, 1), so the class-generated arguments always land in
    the first closed-form branch.
    """
    if not 0.0 < tau1 < 1.0:
        raise ValueError("the factorized form needs 0 < tau1 < 1")
    u = 1.0 - tau1 * tau1
    if lune_class is LuneClass.STARLIKE:
        return YArgs(A=-3.0 * tau1 ** 3 / (16.0 * u), B=tau1 / 4.0,
                     C=-(3.0 + tau1 * tau1) / (4.0 * tau1))
    return YArgs(A=-tau1 ** 3 / (8.0 * u), B=tau1 / 2.0,
                 C=-(2.0 + tau1 * tau1) / (3.0 * tau1))


def bound_curve(tau1: float, lune_class: LuneClass) -> float:
    """The quartic bound curve in tau1; equals prefactor * Y(A, B, C) on
    (0, 1) and matches the direct endpoint values at 0 and 1.

        starlike: (12 - 4*tau1**2 - 5*tau1**4) / 192   (max 1/16 at 0)
        convex:   (16 + 4*tau1**2 - 17*tau1**4) / 2304 (max 23/3264 at
                                                        sqrt(2/17))
    """
    if not 0.0 <= tau1 <= 1.0:
        raise ValueError("tau1 must lie in [0, 1]")
    t2 = tau1 * tau1
    if lune_class is LuneClass.STARLIKE:
        return (12.0 - 4.0 * t2 - 5.0 * t2 * t2) / 192.0
    return (16.0 + 4.0 * t2 - 17.0 * t2 * t2) / 2304.0


@dataclass
class SearchReport:
    """Outcome of a global extremal search over the parameter domain."""

    lune_class: LuneClass
    sup_found: float
    argmax: CaratheodoryPoint
    theoretical_bound: float
    gap: float
    grid_stats: dict = field(default_factory=dict)
    branch_trace: str = ""

    def to_dict(self) -> dict:
        return {
            "class": self.lune_class.value,
            "sup_found": self.sup_found,
            "argmax": {
                "tau1": self.argmax.tau1,
                "tau2": [self.argmax.tau2.real, self.argmax.tau2.imag],
                "tau3": [self.argmax.tau3.real, self.argmax.tau3.imag],
            },
            "theoretical_bound": self.theoretical_bound,
            "gap": self.gap,
            "grid_stats": self.grid_stats,
            "branch_trace": self.branch_trace,
        }


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _scan_tau1_block(tau1_values, r, th, lune_class):
    """Best (value, tau1, |tau2|, arg tau2) over a block of tau1 rows.

    The objective is |base| + coeff, the exact maximum of |H_{2,1}| over
    unimodular tau3; reduction is by maximum, so evaluation order cannot
    change the result.
    """
    z = np.outer(r, np.exp(1j * th))
    best = (-1.0, 0.0, 0.0, 0.0)
    for t1 in tau1_values:
        base, coeff = h21_tau_split(t1, z, lune_class)
        obj = np.abs(base) + coeff
        i, j = np.unravel_index(np.argmax(obj), obj.shape)
        v = float(obj[i, j])
        if v > best[0]:
            best = (v, float(t1), float(r[i]), float(th[j]))
    return best


def global_search(lune_class: LuneClass,
                  tau1_steps: int = 96,
                  tau2_radial: int = 24,
                  tau2_angular: int = 96,
                  refine_depth: int = 2,
                  tau1_range: tuple[float, float] = (0.0, 1.0)) -> SearchReport:
    """Maximize |H_{2,1}| over tau1 in [0,1] and tau2 in the closed disk.

    tau3 is eliminated analytically: H is affine in tau3 with a
    non-negative real coefficient, so the inner maximum over |tau3| <= 1
    is |base| + coeff, attained at a unimodular tau3 aligned with the
    base term.  The initial grid includes the endpoints of every range;
    each refinement round re-grids a one-cell neighborhood of the
    current argmax at the same step counts, so the found supremum is
    non-decreasing in refine_depth.
    """
    lo, hi = tau1_range
    if not 0.0 <= lo <= hi <= 1.0:
        raise ValueError("tau1_range must be within [0, 1]")
    bound = SHARP_BOUNDS[lune_class]

    t1s = np.linspace(lo, hi, tau1_steps) if hi > lo else np.array([lo])
    rs = np.linspace(0.0, 1.0, tau2_radial)
    ths = np.linspace(0.0, 2.0 * np.pi, tau2_angular, endpoint=False)
    evaluations = 0
    best = (-1.0, 0.0, 0.0, 0.0)

    def scan(t1_values, r_values, th_values):
        nonlocal evaluations, best
        evaluations += len(t1_values) * len(r_values) * len(th_values)
        workers = _thread_count()
        if workers > 1 and len(t1_values) >= 2 * workers:
            blocks = np.array_split(t1_values, workers)
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(
                    lambda blk: _scan_tau1_block(blk, r_values, th_values,
                                                 lune_class), blocks))
            # strict > in block order reproduces the serial first-max choice
            for res in results:
                if res[0] > best[0]:
                    best = res
        else:
            res = _scan_tau1_block(t1_values, r_values, th_values, lune_class)
            if res[0] > best[0]:
                best = res

    scan(t1s, rs, ths)
    dt1 = (t1s[1] - t1s[0]) if len(t1s) > 1 else 0.0
    dr = rs[1] - rs[0]
    dth = ths[1] - ths[0]
    for _ in range(refine_depth):
        _, t1c, rc, thc = best
        t1_lo = max(lo, t1c - dt1)
        t1_hi = min(hi, t1c + dt1)
        t1s_ref = (np.linspace(t1_lo, t1_hi, tau1_steps)
                   if t1_hi > t1_lo else np.array([t1c]))
        rs_ref = np.linspace(max(0.0, rc - dr), min(1.0, rc + dr), tau2_radial)
        ths_ref = np.linspace(thc - dth, thc + dth, tau2_angular)
        scan(t1s_ref, rs_ref, ths_ref)
        dt1 = (t1s_ref[1] - t1s_ref[0]) if len(t1s_ref) > 1 else 0.0
        dr = rs_ref[1] - rs_ref[0]
        dth = ths_ref[1] - ths_ref[0]

    sup_found, t1, r2, th2 = best
    tau2 = r2 * complex(math.cos(th2), math.sin(th2))
    base, _ = h21_tau_split(t1, tau2, lune_class)
    base = complex(base)
    tau3 = base / abs(base) if abs(base) > 0 else 1.0 + 0j
    argmax = CaratheodoryPoint(tau1=t1, tau2=tau2, tau3=tau3)

    gap = bound - sup_found
    if sup_found > bound + 1e-9:
        raise RuntimeError(
            f"search found {sup_found}, exceeding the certified bound "
            f"{bound} for {lune_class.value}")

    if t1 <= 1e-9:
        branch = "tau1-endpoint-0"
    elif t1 >= 1.0 - 1e-9:
        branch = "tau1-endpoint-1"
    else:
        branch = y_closed(abc_for_class(t1, lune_class)).branch
    stats = {"tau1_steps": tau1_steps, "tau2_radial": tau2_radial,
             "tau2_angular": tau2_angular, "refine_depth": refine_depth,
             "evaluations": evaluations, "threads": _thread_count()}
    return SearchReport(lune_class=lune_class, sup_found=sup_found,
                        argmax=argmax, theoretical_bound=bound, gap=gap,
                        grid_stats=stats, branch_trace=branch)
