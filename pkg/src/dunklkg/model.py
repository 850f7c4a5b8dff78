"""Physical parameters, curvature profiles, and derived su(1,1) constants.

Units: hbar = c = 1.  The deformation parameter alpha is structurally
restricted to half-odd integers (2j+1)/2 and is carried as an exact
Fraction so that validation never depends on float rounding.  Only the
even-parity sector is implemented; requesting the odd sector raises
UnsupportedParity.

The symbol mu that appears alongside alpha in the reduced radial equation
is treated as identical to alpha throughout.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .complexfn import principal_sqrt
from .errors import DegenerateError, DomainError, UnsupportedParity

__all__ = [
    "AlgebraData",
    "CurvatureCase",
    "Parity",
    "PhysParams",
    "bargmann_index",
    "casimir_eigenvalue",
    "parse_alpha",
    "parse_complex",
    "profile_a",
    "radial_coupling",
    "scale_factor",
    "sigma_index",
]

AlphaLike = Union[Fraction, int, float]

DEGENERATE_TOL = 1e-14


class Parity(enum.Enum):
    EVEN = 1
    ODD = 0


class CurvatureCase(enum.Enum):
    """The three even curvature profiles a(x) treated by the package."""

    GAUSSIAN = "gaussian"  # a(x) = exp(-R x^2)
    RATIONAL = "rational"  # a(x) = (1 - R x^2) / (1 + R x^2)
    SINC = "sinc"          # a(x) = sin(x sqrt(R)) / (x sqrt(R))

    @classmethod
    def from_name(cls, name: str) -> "CurvatureCase":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise DomainError(
                f"unknown curvature case {name!r}; expected one of "
                f"{[c.value for c in cls]}"
            ) from None


_ALPHA_RE = re.compile(r"^(\d+)/2$")


def parse_alpha(text: str) -> Fraction:
    """Parse a half-odd-integer alpha given as a 'p/2' rational literal.

    Decimal notation is rejected even when the value would be valid: the
    half-odd restriction is structural and the literal keeps it exact.
    """
    match = _ALPHA_RE.match(text.strip())
    if match is None:
        raise DomainError(f"cannot parse alpha from {text!r}; expected 'p/2' with odd p")
    value = Fraction(int(match.group(1)), 2)
    _validate_alpha(value)
    return value


def _validate_alpha(alpha: AlphaLike) -> Fraction:
    frac = Fraction(alpha) if not isinstance(alpha, Fraction) else alpha
    if frac <= 0 or frac.denominator != 2:
        raise DomainError(
            f"alpha must be a positive half-odd integer (2j+1)/2, got {frac}"
        )
    return frac


def parse_complex(text: str) -> complex:
    """Parse a complex literal written with an 'i' suffix, e.g. '0.5+0.2i'."""
    cleaned = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise DomainError(f"cannot parse complex literal {text!r}") from None


@dataclass(frozen=True)
class PhysParams:
    """The physical input triple (alpha, R, m) plus the parity flag."""

    alpha: Fraction
    R: float
    m: float
    parity: Parity = Parity.EVEN

    def __post_init__(self):
        if self.parity is not Parity.EVEN:
            raise UnsupportedParity("only the even-parity sector is implemented")
        object.__setattr__(self, "alpha", _validate_alpha(self.alpha))
        if not (self.R > 0.0):
            raise DomainError(f"curvature constant R must be positive, got {self.R}")
        if not (self.m > 0.0):
            raise DomainError(f"mass m must be positive, got {self.m}")


def bargmann_index(alpha: AlphaLike) -> complex:
    """Bargmann index k = 1/2 + sqrt(1 - 8 alpha)/4 (principal root).

    For alpha > 1/8 the root is positive imaginary, so Im(k) > 0.
    """
    a = float(alpha)
    return 0.5 + principal_sqrt(1.0 - 8.0 * a) / 4.0


def sigma_index(alpha: AlphaLike) -> complex:
    """sigma = sqrt(1/16 - alpha/2) = k - 1/2; kept exactly equal to k - 1/2."""
    return bargmann_index(alpha) - 0.5


def radial_coupling(alpha: AlphaLike) -> float:
    """The constant alpha/2 + 3/16 multiplying 1/r in the reduced operator."""
    return float(alpha) / 2.0 + 3.0 / 16.0


def casimir_eigenvalue(alpha: AlphaLike) -> complex:
    """Quadratic Casimir eigenvalue k(k-1) = -(alpha/2 + 3/16)."""
    return complex(-radial_coupling(alpha))


@dataclass(frozen=True)
class AlgebraData:
    """Derived su(1,1) constants for a given alpha."""

    k: complex
    sigma: complex
    casimir: complex
    c: float = field(metadata={"doc": "alpha/2 + 3/16"})

    @classmethod
    def from_alpha(cls, alpha: AlphaLike) -> "AlgebraData":
        k = bargmann_index(alpha)
        return cls(
            k=k,
            sigma=k - 0.5,
            casimir=casimir_eigenvalue(alpha),
            c=radial_coupling(alpha),
        )


def profile_a(case: CurvatureCase, x, R: float):
    """Evaluate the curvature profile a(x); a(0) = 1 for every case.

    Accepts scalar or ndarray x.  The removable singularity of the sinc
    profile at x = 0 takes its limit value 1.
    """
    x_arr = np.asarray(x, dtype=float)
    if case is CurvatureCase.GAUSSIAN:
        out = np.exp(-R * x_arr**2)
    elif case is CurvatureCase.RATIONAL:
        out = (1.0 - R * x_arr**2) / (1.0 + R * x_arr**2)
    elif case is CurvatureCase.SINC:
        t = x_arr * math.sqrt(R)
        # np.sinc(u) = sin(pi u)/(pi u), so sin(t)/t = sinc(t/pi).
        out = np.sinc(t / np.pi)
    else:  # pragma: no cover
        raise DomainError(f"unknown case {case}")
    if np.ndim(x) == 0:
        return float(out)
    return out


_SCALE_PREFACTOR = {
    CurvatureCase.GAUSSIAN: 2.0,   # Lambda = sqrt(2 R (E^2 - m^2))
    CurvatureCase.RATIONAL: 4.0,   # Theta  = sqrt(4 R (E^2 - m^2))
    CurvatureCase.SINC: 1.0 / 3.0, # Pi     = sqrt(R (E^2 - m^2) / 3)
}


def scale_factor(case: CurvatureCase, e_squared: complex, R: float, m: float) -> complex:
    """Case-specific scale (Lambda, Theta or Pi) from E^2, principal root.

    Depends on E^2 - m^2 only, so no root-of-E choice is involved.  Raises
    DegenerateError within 1e-14 of the flat configuration E^2 = m^2.
    """
    u = complex(e_squared) - m * m
    if abs(u) < DEGENERATE_TOL:
        raise DegenerateError("E^2 = m^2: scale factor degenerates to zero")
    return principal_sqrt(_SCALE_PREFACTOR[case] * R * u)
