"""Perelomov su(1,1) coherent states in closed radial form, their series
construction, time evolution, and normalized density profiles.

Closed form (k the Bargmann index, Lambda the case scale factor):

    R_k(x, xi) = [ 2 Lambda^(k+1/2) (1-|xi|^2)^(2k) / Gamma(2k) ]^(1/2)
                 (sqrt(Lambda) x)^(2k)
                 exp[ (i Lambda x^2 / 2) (xi+1)/(xi-1) ] / (1 - xi)^(2k)

with xi in the open unit disk.  The independent construction sums the
displacement series sum_n sqrt(Gamma(n+2k)/(n! Gamma(2k))) xi^n F_n(x)
over the eigenfunctions; agreement of the two is the principal
correctness check of this module.

The closed form carries no explicit n; the quantum number enters through
the spectral branch E_n feeding the scale factor, so each n labels the
coherent state built on that branch.  Time evolution maps xi to
xi e^(-i tau) (hbar = 1) with an overall phase prefactor that is
e^(-i k tau) under the 'corrected' convention (default) or the constant
e^(-i k) 'as-printed'; the two yield identical normalized densities.

Densities are always renormalized numerically on their grid: the complex
Bargmann index makes the closed-form prefactor non-unitary, so no analytic
normalization is claimed.
"""

from __future__ import annotations

import cmath
import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .complexfn import log_gamma, principal_log
from .errors import DomainError, NormalizationError
from .eigenfunctions import eigenfunction_x
from .gridops import POSITIVE, GridFunction
from .model import AlphaLike, CurvatureCase, bargmann_index, scale_factor
from .spectrum import energy_pair

__all__ = [
    "CoherentParams",
    "PhaseConvention",
    "ProfileData",
    "build_profile",
    "coherent_closed_form",
    "coherent_evolved",
    "coherent_series",
    "density_profile",
    "suggested_series_terms",
]

_LN2 = math.log(2.0)

# Series truncation: cut when the term bound drops below this relative level.
_TAIL_TARGET = 1e-10
_MAX_TERMS = 600
_MIN_TERMS = 16


class PhaseConvention(enum.Enum):
    CORRECTED = "corrected"    # prefactor e^(-i k tau)
    AS_PRINTED = "as-printed"  # constant prefactor e^(-i k)

    @classmethod
    def from_name(cls, name: str) -> "PhaseConvention":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise DomainError(
                f"unknown phase convention {name!r}; expected "
                f"{[c.value for c in cls]}"
            ) from None


@dataclass(frozen=True)
class CoherentParams:
    """Displacement parameter, algebra inputs, and evolution settings."""

    xi: complex
    alpha: Fraction
    lambda_scale: complex
    n_label: int = 0
    tau: float = 0.0
    phase_convention: PhaseConvention = PhaseConvention.CORRECTED

    def __post_init__(self):
        if abs(self.xi) >= 1.0:
            raise DomainError(f"|xi| must be < 1 (Perelomov disk), got |xi| = {abs(self.xi)}")
        if self.lambda_scale == 0:
            raise DomainError("lambda_scale must be nonzero")

    @classmethod
    def for_case(
        cls,
        case: CurvatureCase,
        alpha: AlphaLike,
        n: int,
        xi: complex,
        R: float = 1.0,
        m: float = 1.0,
        branch: Optional[str] = None,
        tau: float = 0.0,
        phase_convention: PhaseConvention = PhaseConvention.CORRECTED,
    ) -> "CoherentParams":
        """Build params with Lambda = scale(E_n^2) on the chosen spectral branch.

        The gaussian case has a single branch and ``branch`` must be omitted;
        the rational and sinc cases require an explicit 'plus' or 'minus'.
        """
        pair = energy_pair(case, n, alpha, R, m)
        if case is CurvatureCase.GAUSSIAN:
            if branch not in (None, "plus"):
                raise DomainError("the gaussian case has a single spectral branch")
            e2 = pair.e2_plus
        else:
            if branch not in ("plus", "minus"):
                raise DomainError(
                    f"case {case.value} needs an explicit branch ('plus' or 'minus')"
                )
            e2 = pair.e2_plus if branch == "plus" else pair.e2_minus
        lam = scale_factor(case, e2, R, m)
        return cls(
            xi=complex(xi),
            alpha=Fraction(alpha),
            lambda_scale=lam,
            n_label=n,
            tau=tau,
            phase_convention=phase_convention,
        )


def coherent_closed_form(x, params: CoherentParams):
    """Closed-form radial coherent state at the params' xi (tau ignored).

    Evaluated with principal powers throughout; the prefactor square root
    is taken in log space, which coincides with the literal principal root
    for the parameter ranges exercised and reduces exactly to the n = 0
    eigenfunction at xi = 0.  x >= 0, scalar or ndarray; value 0 at x = 0.
    """
    return _closed_form(x, params.alpha, params.lambda_scale, params.xi)


def _closed_form(x, alpha: AlphaLike, lam: complex, xi: complex):
    if abs(xi) >= 1.0:
        raise DomainError("|xi| must be < 1")
    k = bargmann_index(alpha)
    two_k = 2.0 * k
    scalar = np.ndim(x) == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x_arr < 0):
        raise DomainError("coherent states are evaluated for x >= 0")
    log_pref = 0.5 * (
        _LN2
        + (k + 0.5) * principal_log(lam)
        + two_k * math.log1p(-abs(xi) ** 2)
        - log_gamma(two_k)
    )
    pref = cmath.exp(log_pref) * cmath.exp(-two_k * principal_log(1.0 - xi))
    out = np.zeros_like(x_arr, dtype=complex)
    nz = x_arr > 0
    log_base = 0.5 * principal_log(lam) + np.log(x_arr[nz])
    mobius = (xi + 1.0) / (xi - 1.0)
    out[nz] = pref * np.exp(two_k * log_base) * np.exp(0.5j * lam * x_arr[nz] ** 2 * mobius)
    if scalar:
        return complex(out[0])
    return out


def suggested_series_terms(params: CoherentParams, x_max: float) -> int:
    """Term count from the tail bound |term_n| ~ exp(beta sqrt(n) + n ln|xi|).

    beta = 2 x_max |Im sqrt(i Lambda)| is the sub-exponential growth rate of
    the Laguerre factor on the grid; the count is where the bound falls
    below 1e-10, clamped to [16, 600].
    """
    mod_xi = abs(params.xi)
    if mod_xi == 0.0:
        return _MIN_TERMS
    beta = 2.0 * x_max * abs(cmath.sqrt(1j * params.lambda_scale).imag)
    log_xi = math.log(mod_xi)
    log_tol = math.log(_TAIL_TARGET)
    disc = beta * beta + 4.0 * log_xi * log_tol
    t = (-beta - math.sqrt(disc)) / (2.0 * log_xi)
    return int(min(_MAX_TERMS, max(_MIN_TERMS, math.ceil(t * t) + 10)))


def coherent_series(x, params: CoherentParams, n_terms: Optional[int] = None):
    """Truncated Perelomov displacement series over the eigenfunctions.

    Coefficients sqrt(Gamma(n+2k)/(n! Gamma(2k))) xi^n are computed in log
    space (analytic log-gamma) so their branch stays continuous in n.  With
    ``n_terms`` None the tail bound picks the count for the given grid.
    """
    if abs(params.xi) >= 1.0:
        raise DomainError("|xi| must be < 1")
    scalar = np.ndim(x) == 0
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    if n_terms is None:
        n_terms = suggested_series_terms(params, float(np.max(x_arr)))
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    k = bargmann_index(params.alpha)
    two_k = 2.0 * k
    lg_2k = log_gamma(two_k)
    total = np.zeros_like(x_arr, dtype=complex)
    xi_pow = 1.0 + 0.0j
    for n in range(n_terms):
        coeff = cmath.exp(0.5 * (log_gamma(n + two_k) - math.lgamma(n + 1) - lg_2k)) * xi_pow
        total = total + coeff * eigenfunction_x(n, params.alpha, params.lambda_scale, x_arr)
        xi_pow *= params.xi
    total *= cmath.exp(k * math.log1p(-abs(params.xi) ** 2))
    if scalar:
        return complex(total[0])
    return total


def coherent_evolved(x, params: CoherentParams):
    """Time-evolved coherent state: xi -> xi e^(-i tau) plus a phase prefactor.

    At tau = 0 the 'corrected' convention reduces exactly to the static
    closed form.  The prefactor has constant modulus in x, so normalized
    densities agree between the two conventions.
    """
    k = bargmann_index(params.alpha)
    rotated = params.xi * cmath.exp(-1j * params.tau)
    if params.phase_convention is PhaseConvention.CORRECTED:
        phase = cmath.exp(-1j * k * params.tau)
    else:
        phase = cmath.exp(-1j * k)
    return phase * _closed_form(x, params.alpha, params.lambda_scale, rotated)


def _normalized_density(x_arr: np.ndarray, params: CoherentParams, evolved: bool):
    """Amplitudes, normalized density, and the raw trapezoidal integral."""
    if x_arr.size < 2 or x_arr[0] <= 0:
        raise DomainError("density grid must live on 0 < x_min <= x <= x_max")
    values = coherent_evolved(x_arr, params) if evolved else coherent_closed_form(x_arr, params)
    dens = np.abs(values) ** 2
    integral = float(np.trapezoid(dens, x_arr))
    if not math.isfinite(integral) or integral < 1e-300:
        raise NormalizationError(f"raw density integral {integral} cannot be normalized")
    return values, dens / integral, integral


def density_profile(x_grid, params: CoherentParams, evolved: bool = False) -> GridFunction:
    """Normalized |R|^2 on the grid; integrates to 1 by trapezoidal rule.

    Raises NormalizationError when the raw integral is non-finite or below
    1e-300 (nothing to normalize).
    """
    x_arr = np.asarray(x_grid, dtype=float)
    _, dens, _ = _normalized_density(x_arr, params, evolved)
    h = float(x_arr[1] - x_arr[0])
    return GridFunction(points=x_arr, values=dens, h=h, domain_kind=POSITIVE)


# figure-note instability: this (alpha, n) combination produces a density
# dominated by a sharp boundary peak; emitted with a warning, never silently
_UNSTABLE_ALPHA = Fraction(7, 2)


def _format_complex(z: complex) -> str:
    return f"{format(z.real, '.9g')}{'+' if z.imag >= 0 else '-'}{format(abs(z.imag), '.9g')}i"


@dataclass(frozen=True)
class ProfileData:
    """One emitted density profile: samples plus reproducibility metadata.

    ``meta`` holds natively typed values; the CSV writer renders them
    (floats at 9 significant digits, booleans lowercase, None empty).
    """

    x: np.ndarray
    values: np.ndarray       # complex amplitudes
    density: np.ndarray      # normalized |R|^2
    meta: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        def fmt(value):
            if isinstance(value, bool):
                return str(value).lower()
            if isinstance(value, float):
                return format(value, ".9g")
            if value is None:
                return ""
            return str(value)

        header = " ".join(f"{key}={fmt(value)}" for key, value in self.meta.items())
        lines = [f"# {header}", "x,re,im,density"]
        for xv, val, dv in zip(self.x, self.values, self.density):
            lines.append(
                ",".join(
                    format(v, ".9g") for v in (xv, val.real, val.imag, dv)
                )
            )
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        obj = dict(self.meta)
        obj["samples"] = [
            {"x": float(xv), "re": float(val.real), "im": float(val.imag), "density": float(dv)}
            for xv, val, dv in zip(self.x, self.values, self.density)
        ]
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"


def build_profile(
    case: CurvatureCase,
    alpha: AlphaLike,
    n: int,
    xi: complex,
    R: float = 1.0,
    m: float = 1.0,
    branch: Optional[str] = None,
    tau: float = 0.0,
    phase_convention: PhaseConvention = PhaseConvention.CORRECTED,
    x_min: float = 0.01,
    x_max: float = 2.0,
    points: int = 400,
    evolved: bool = False,
) -> ProfileData:
    """Evaluate one (n, tau) profile with full metadata for the CLI."""
    if points < 9:
        raise DomainError("need at least 9 grid points")
    params = CoherentParams.for_case(
        case, alpha, n, xi, R=R, m=m, branch=branch, tau=tau, phase_convention=phase_convention
    )
    x_arr = np.linspace(x_min, x_max, points)
    values, dens, integral = _normalized_density(x_arr, params, evolved)
    warning = None
    if Fraction(alpha) == _UNSTABLE_ALPHA and n == 0:
        warning = "density numerically unstable (boundary-dominated peak) for alpha=7/2, n=0"
    meta = {
        "case": case.value,
        "alpha": str(Fraction(alpha)),
        "n": n,
        "xi": _format_complex(complex(xi)),
        "tau": float(tau),
        "phase_convention": phase_convention.value,
        "branch": branch,
        "norm_integral": integral,
        "x_map_by_analogy": case is not CurvatureCase.GAUSSIAN,
        "warning": warning,
    }
    return ProfileData(x=x_arr, values=values, density=dens, meta=meta)
