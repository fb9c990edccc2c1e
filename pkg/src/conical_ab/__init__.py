"""Spectra and bound states of a charged particle on a conical surface
threaded by a magnetic flux line (hbar = c = 1)."""

from .errors import (
    ComplexEnergyError,
    ConfigError,
    ConicalAbError,
    MatchingPoleError,
    NoBoundStateError,
    NumericalError,
    UnsupportedChannelError,
)
from .geometry import (
    AbFluxConfig,
    CurvatureReport,
    GeometricPotential,
    SurfaceConfig,
    SurfaceKind,
    classify_surface,
    curvature_distribution_coefficient,
    curvature_report,
    gaussian_curvature_coefficient,
    geometric_potential,
    mean_curvature,
)
from .spectrum import (
    BoundState,
    Channel,
    GammaSign,
    GeneralizedPotential,
    RingSpectrumEntry,
    SaClass,
    SolveMode,
    Source,
    anticone_bound_energy,
    anticone_closed_form_energy,
    anticone_matching_residual,
    bound_wavefunction_sampler,
    boundary_log_derivative_target,
    cone_bound_energy,
    cone_closed_form_literal,
    cone_matching_residual,
    generalized_potential,
    make_channel,
    ring_characteristic_roots,
    ring_energy,
    ring_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "AbFluxConfig",
    "BoundState",
    "Channel",
    "ComplexEnergyError",
    "ConfigError",
    "ConicalAbError",
    "CurvatureReport",
    "GammaSign",
    "GeneralizedPotential",
    "GeometricPotential",
    "MatchingPoleError",
    "NoBoundStateError",
    "NumericalError",
    "RingSpectrumEntry",
    "SaClass",
    "SolveMode",
    "Source",
    "SurfaceConfig",
    "SurfaceKind",
    "UnsupportedChannelError",
    "anticone_bound_energy",
    "anticone_closed_form_energy",
    "anticone_matching_residual",
    "bound_wavefunction_sampler",
    "boundary_log_derivative_target",
    "classify_surface",
    "cone_bound_energy",
    "cone_closed_form_literal",
    "cone_matching_residual",
    "curvature_distribution_coefficient",
    "curvature_report",
    "gaussian_curvature_coefficient",
    "generalized_potential",
    "geometric_potential",
    "make_channel",
    "mean_curvature",
    "ring_characteristic_roots",
    "ring_energy",
    "ring_spectrum",
    "__version__",
]
