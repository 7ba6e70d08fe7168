"""Sharp second Hankel determinant bounds for the lune classes, certified
numerically: series arithmetic, coefficient parameterizations, the
closed-form disk maximizer with its brute-force oracle, and the global
extremal searches establishing the constants 1/16 and 23/3264."""

from .bounds import (SHARP_BOUNDS, SearchReport, YArgs, YClosed,
                     abc_for_class, bound_curve, global_search, prefactor,
                     y_closed, y_oracle)
from .caratheodory import (CaratheodoryCoeffs, CaratheodoryPoint,
                           PositivityReport, UnsupportedConfigurationError,
                           coeffs_from_params, is_caratheodory, reconstruct_p,
                           schwarz_from_p)
from .hankel import (CoordinateSystem, HankelValue, LogCoeffs, h21_all_routes,
                     h21_from_c, h21_from_tau, h21_from_taylor, h21_log,
                     h21_tau_split, hankel_generic, log_coeffs_closed,
                     log_coeffs_series, rotate)
from .lune import (LuneClass, MembershipReport, TaylorPrefix,
                   convex_coeffs_from_c, extremal_g, extremal_h,
                   f_from_schwarz, koebe, membership_check, q_series,
                   starlike_coeffs_from_c)
from .series import DEFAULT_ORDER, TruncatedSeries
from .verify import (CheckRecord, VerificationReport, VerifyConfig,
                     run_verification)

__all__ = [
    "CaratheodoryCoeffs", "CaratheodoryPoint", "CheckRecord",
    "CoordinateSystem", "DEFAULT_ORDER", "HankelValue", "LogCoeffs",
    "LuneClass", "MembershipReport", "PositivityReport", "SHARP_BOUNDS",
    "SearchReport", "TaylorPrefix", "TruncatedSeries",
    "UnsupportedConfigurationError", "VerificationReport", "VerifyConfig",
    "YArgs", "YClosed", "abc_for_class", "bound_curve", "coeffs_from_params",
    "convex_coeffs_from_c", "extremal_g", "extremal_h", "f_from_schwarz",
    "global_search", "h21_all_routes", "h21_from_c", "h21_from_tau",
    "h21_from_taylor", "h21_log", "h21_tau_split", "hankel_generic",
    "is_caratheodory", "koebe", "log_coeffs_closed", "log_coeffs_series",
    "membership_check", "prefactor", "q_series", "reconstruct_p", "rotate",
    "run_verification", "schwarz_from_p", "starlike_coeffs_from_c",
    "y_closed", "y_oracle",
]
