"""Geometry of a conical surface threaded by a magnetic flux line.

The surface is described in polar coordinates by the line element

    ds^2 = dr^2 + alpha^2 r^2 dtheta^2,   alpha > 0,

so a deficit angle (0 < alpha < 1) gives a cone, alpha = 1 a flat plane and
an excess angle (alpha > 1) an anti-cone (saddle-like surface).  Units are
hbar = c = 1 throughout.

The apex curvature is distributional.  This module never evaluates the
delta-function pieces pointwise: they are returned as named coefficients
(of delta(r)/r, of the two-dimensional delta, ...) and downstream modules
decide how to regularize them.

The flux line enters only through the dimensionless parameter
phi = Phi / Phi_0; the particle charge is absorbed into phi, so it never
appears separately in the API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class SurfaceKind(Enum):
    CONE = "cone"
    PLANE = "plane"
    ANTI_CONE = "anti_cone"


@dataclass(frozen=True)
class SurfaceConfig:
    """Cone parameter and particle mass (hbar = c = 1)."""

    alpha: float
    mass: float = 1.0

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")

    @property
    def kind(self) -> SurfaceKind:
        return classify_surface(self.alpha)


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature data of the surface.

    gaussian_delta_coefficient:      coefficient of delta(r)/r in the
                                     Gaussian curvature, (1 - alpha)/alpha.
    mean_curvature_coefficient:      coefficient of 1/r in the mean
                                     curvature, sqrt(|1 - alpha^2|)/(2 alpha).
    distributional_scalar_coefficient: coefficient of the two-dimensional
                                     delta in the curvature tensor,
                                     2 pi (1 - alpha)/alpha.
    """

    gaussian_delta_coefficient: float
    mean_curvature_coefficient: float
    distributional_scalar_coefficient: float


@dataclass(frozen=True)
class GeometricPotential:
    """Coefficients of the surface-induced scalar potential.

    The potential produced by confining the particle to the surface is
    -(H^2 - K)/(2M); on the cone family it reduces to an attractive 1/r^2
    term plus a delta shell at the apex:

        V_s(r) = inverse_square_coefficient / r^2
                 + delta_shell_coefficient * delta(r)/r
    """

    inverse_square_coefficient: float
    delta_shell_coefficient: float


@dataclass(frozen=True)
class AbFluxConfig:
    """Flux-line data: phi = Phi/Phi_0.  The electric potential is zero.

    The vector potential magnitude at radius r is phi/(alpha r) and the
    magnetic field is the pure apex term with delta(r)/r coefficient
    -phi/alpha (charge absorbed into phi).
    """

    phi: float


def classify_surface(alpha: float) -> SurfaceKind:
    """Classify the surface from the cone parameter.

    The plane case is detected by exact equality alpha == 1; callers that
    want a tolerance band must round before calling, because the result
    drives branch selection and has to be deterministic.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if alpha == 1.0:
        return SurfaceKind.PLANE
    return SurfaceKind.CONE if alpha < 1.0 else SurfaceKind.ANTI_CONE


def mean_curvature(cfg: SurfaceConfig, r: float) -> float:
    """Mean curvature at radius r > 0: sqrt(|1 - alpha^2|) / (2 alpha r)."""
    if not r > 0:
        raise ValueError(f"r must be positive, got {r}")
    return math.sqrt(abs(1.0 - cfg.alpha**2)) / (2.0 * cfg.alpha * r)


def gaussian_curvature_coefficient(alpha: float) -> float:
    """Coefficient of delta(r)/r in the Gaussian curvature: (1 - alpha)/alpha."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return (1.0 - alpha) / alpha


def curvature_distribution_coefficient(alpha: float) -> float:
    """Coefficient of the 2D delta in the curvature tensor: 2 pi (1 - alpha)/alpha.

    Positive for a cone (angle deficit), negative for an anti-cone (excess).
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return 2.0 * math.pi * (1.0 - alpha) / alpha


def curvature_report(cfg: SurfaceConfig) -> CurvatureReport:
    return CurvatureReport(
        gaussian_delta_coefficient=gaussian_curvature_coefficient(cfg.alpha),
        mean_curvature_coefficient=math.sqrt(abs(1.0 - cfg.alpha**2)) / (2.0 * cfg.alpha),
        distributional_scalar_coefficient=curvature_distribution_coefficient(cfg.alpha),
    )


def geometric_potential(cfg: SurfaceConfig) -> GeometricPotential:
    """Surface-induced potential coefficients with 1/(2M) folded in.

    Cone:      inverse-square part -(1 - alpha^2) / (8 M alpha^2)  (attractive)
    Anti-cone: inverse-square part +(1 - alpha^2) / (8 M alpha^2)  (note
               1 - alpha^2 < 0 there, so this is attractive as well)
    Both:      delta-shell part (1 - alpha) / (2 M alpha)
    A plane has no curvature, so every coefficient vanishes.
    """
    alpha, mass = cfg.alpha, cfg.mass
    kind = classify_surface(alpha)
    if kind is SurfaceKind.PLANE:
        return GeometricPotential(0.0, 0.0)
    base = (1.0 - alpha**2) / (8.0 * mass * alpha**2)
    inverse_square = -base if kind is SurfaceKind.CONE else +base
    delta_shell = (1.0 - alpha) / (2.0 * mass * alpha)
    return GeometricPotential(inverse_square, delta_shell)


def ab_vector_potential_magnitude(flux: AbFluxConfig, alpha: float, r: float) -> float:
    """Magnitude of the (charge-folded) vector potential at radius r: phi/(alpha r)."""
    if not r > 0:
        raise ValueError(f"r must be positive, got {r}")
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return flux.phi / (alpha * r)


def ab_field_delta_coefficient(flux: AbFluxConfig, alpha: float) -> float:
    """Coefficient of delta(r)/r in the (charge-folded) magnetic field: -phi/alpha."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return -flux.phi / alpha
