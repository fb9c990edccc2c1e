"""Angular channels, ring spectra and bound-state matching.

After separating the angular dependence, each integer angular number m
lives in a radial channel whose effective inverse-square strength is

    lambda_sq = [4 (m + phi)^2 - (1 - alpha^2)] / (4 alpha^2),

so the dynamics depends on m and phi only through m + phi.  The channel
class drives everything else:

* lambda_sq >= 1: the radial operator is essentially self-adjoint; no
  boundary freedom, no bound state from the apex.
* 0 <= lambda_sq < 1: a one-parameter family of self-adjoint extensions;
  the physical one is fixed by matching the logarithmic derivative at a
  small core radius ``a`` to (1 - alpha)/alpha.  On an anti-cone this
  produces a single bound state when the matching bracket is positive.
* lambda_sq < 0 (cone with (m+phi)^2 < (1-alpha^2)/4): imaginary Bessel
  order.  The same matching becomes log-periodic and yields a geometric
  tower of bound states E_{n+1}/E_n = exp(-2 pi / |lambda|), indexed here
  by an explicit ``branch``.

Bound-state energies are negative with kappa = sqrt(-2 M E); everything
is scale covariant in the core radius, so energies are reported alongside
the dimensionless combination M a^2 E.

The matching residuals default to the small-argument Bessel forms, which
encode the extension boundary data exactly in the a -> 0 identification;
``form="exact"`` evaluates the same log-derivative with the exact Bessel
functions for convergence studies (the two differ at finite kappa*a).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .errors import (
    ComplexEnergyError,
    MatchingPoleError,
    NoBoundStateError,
    UnsupportedChannelError,
)
from . import specfun
from .specfun import OrderKind, OrderSpec

#: kappa * a above which the small-argument matching forms are flagged as
#: extrapolated (diagnostic only; roots are still returned).
SMALL_ARGUMENT_GUARD = 0.1

#: Bisection bracket floor: numeric roots are searched on E in
#: (-BRACKET_ENERGY_SCALE/(M a^2), 0).
BRACKET_ENERGY_SCALE = 1.0e3

_RELATIVE_ENERGY_TOL = 1.0e-12


class SaClass(Enum):
    ESSENTIALLY_SELF_ADJOINT = "essentially_self_adjoint"
    NEEDS_EXTENSION = "needs_extension"
    IMAGINARY_ORDER = "imaginary_order"


class GammaSign(Enum):
    """Sign with which the phase gamma_nu enters the cone cot argument."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def value_sign(self) -> float:
        return +1.0 if self is GammaSign.PLUS else -1.0


class SolveMode(Enum):
    CLOSED_FORM = "closed_form"
    NUMERIC_ROOT = "numeric_root"


class Source(Enum):
    CLOSED_FORM = "closed_form"
    NUMERIC_ROOT = "numeric_root"
    ORACLE_GRID = "oracle_grid"


@dataclass(frozen=True)
class Channel:
    m: int
    phi: float
    alpha: float
    lambda_sq: float
    order: OrderSpec
    sa_class: SaClass

    @property
    def m_plus_phi(self) -> float:
        return self.m + self.phi


@dataclass(frozen=True)
class GeneralizedPotential:
    """1/r^2 strength (lambda_sq) and delta-shell strength (1-alpha)/alpha."""

    inverse_square_coefficient: float
    delta_shell_coefficient: float


@dataclass(frozen=True)
class RingSpectrumEntry:
    m: int
    energy: float


@dataclass(frozen=True)
class BoundState:
    energy: float
    kappa: float
    channel: Channel
    branch: int
    source: Source
    mass: float
    core_radius: float
    residual: Optional[float] = None
    gamma_sign: Optional[GammaSign] = None

    @property
    def kappa_a(self) -> float:
        return self.kappa * self.core_radius

    @property
    def ma2_energy(self) -> float:
        return self.mass * self.core_radius**2 * self.energy


def make_channel(m: int, phi: float, alpha: float) -> Channel:
    """Build the angular channel for quantum number m, flux phi, cone alpha."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    mp = m + phi
    lambda_sq = (4.0 * mp * mp - (1.0 - alpha * alpha)) / (4.0 * alpha * alpha)
    magnitude = math.sqrt(abs(lambda_sq))
    if lambda_sq >= 1.0:
        sa = SaClass.ESSENTIALLY_SELF_ADJOINT
        kind = OrderKind.REAL
    elif lambda_sq >= 0.0:
        sa = SaClass.NEEDS_EXTENSION
        kind = OrderKind.REAL
    else:
        sa = SaClass.IMAGINARY_ORDER
        kind = OrderKind.IMAGINARY
    return Channel(
        m=m,
        phi=phi,
        alpha=alpha,
        lambda_sq=lambda_sq,
        order=OrderSpec(kind, magnitude),
        sa_class=sa,
    )


def generalized_potential(ch: Channel) -> GeneralizedPotential:
    return GeneralizedPotential(
        inverse_square_coefficient=ch.lambda_sq,
        delta_shell_coefficient=(1.0 - ch.alpha) / ch.alpha,
    )


def boundary_log_derivative_target(alpha: float) -> float:
    """Target value (1 - alpha)/alpha of r f'/f at the shrinking core."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return (1.0 - alpha) / alpha


def ring_energy(m: int, phi: float, alpha: float, mass: float, radius: float) -> float:
    """Energy of the m-th state on a circular ring of radius R:

        E_m = [4 (m + phi)^2 - (1 - alpha^2)] / (8 M alpha^2 R^2)

    At alpha = 1 this is exactly (m + phi)^2 / (2 M R^2), the flat
    flux-ring spectrum with its twofold degeneracy lifted by phi.
    """
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if not mass > 0:
        raise ValueError(f"mass must be positive, got {mass}")
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    mp = m + phi
    return (4.0 * mp * mp - (1.0 - alpha * alpha)) / (8.0 * mass * alpha * alpha * radius * radius)


def ring_spectrum(
    m_values: range | list, phi: float, alpha: float, mass: float, radius: float
) -> list[RingSpectrumEntry]:
    return [RingSpectrumEntry(m, ring_energy(m, phi, alpha, mass, radius)) for m in m_values]


def ring_characteristic_roots(phi: float, script_e: float):
    """Roots m = -phi +/- sqrt(phi^2 + script_e) of the ring characteristic
    equation; quantized states are the integer roots.  Returns None when
    the discriminant is negative (no real roots)."""
    disc = phi * phi + script_e
    if disc < 0.0:
        return None
    root = math.sqrt(disc)
    return (-phi + root, -phi - root)


def _require_extension_channel(ch: Channel) -> float:
    if ch.sa_class is not SaClass.NEEDS_EXTENSION:
        raise UnsupportedChannelError(
            f"channel (m={ch.m}, phi={ch.phi}, alpha={ch.alpha}) has lambda_sq="
            f"{ch.lambda_sq}; matching needs 0 <= lambda_sq < 1"
        )
    lam = ch.order.magnitude
    if not 0.0 < lam < 1.0:
        raise UnsupportedChannelError(
            f"order magnitude {lam} outside (0, 1); the log-case lambda = 0 is unsupported"
        )
    return lam


def _require_imaginary_channel(ch: Channel) -> float:
    if ch.sa_class is not SaClass.IMAGINARY_ORDER:
        raise UnsupportedChannelError(
            f"channel (m={ch.m}, phi={ch.phi}, alpha={ch.alpha}) has lambda_sq="
            f"{ch.lambda_sq} >= 0; imaginary-order matching requires lambda_sq < 0"
        )
    return ch.order.magnitude


def _kappa_a(energy: float, mass: float, a: float) -> float:
    if not energy < 0.0:
        raise ValueError(f"bound-state matching requires E < 0, got {energy}")
    return a * math.sqrt(-2.0 * mass * energy)


def _ln_gamma_ratio(lam: float) -> float:
    # ln[Gamma(1-lam)/Gamma(1+lam)]
    return specfun.ln_gamma(1.0 - lam) - specfun.ln_gamma(1.0 + lam)


def _real_order_log_derivative_asymptotic(lam: float, x: float) -> float:
    # x K'(x)/K(x) with K replaced by its two-term small-argument form:
    # -lam (1+q)/(1-q),  q = (x/2)^{2 lam} Gamma(1-lam)/Gamma(1+lam).
    q = math.exp(2.0 * lam * math.log(0.5 * x) + _ln_gamma_ratio(lam))
    if q == 1.0:
        raise MatchingPoleError(
            f"small-argument form has a spurious zero at x={x}; log-derivative undefined"
        )
    return -lam * (1.0 + q) / (1.0 - q)


def anticone_matching_residual(
    energy: float, ch: Channel, mass: float, a: float, form: str = "asymptotic"
) -> float:
    """Residual of the anti-cone bound-state condition at energy E < 0.

    residual(E) = [a f'(a)/f(a) for f(r) = K_lam(kappa r)] - (1-alpha)/alpha.

    With form="asymptotic" (default) the log-derivative uses the two-term
    small-argument K, which is the exact encoding of the extension
    boundary data; form="exact" uses the true K_lam for comparison.
    As E -> 0- the residual tends to -lam - (1-alpha)/alpha.
    """
    lam = _require_extension_channel(ch)
    x = _kappa_a(energy, mass, a)
    target = boundary_log_derivative_target(ch.alpha)
    if form == "asymptotic":
        logder = _real_order_log_derivative_asymptotic(lam, x)
    elif form == "exact":
        logder = x * specfun.bessel_k_deriv(lam, x) / specfun.bessel_k(lam, x)
    else:
        raise ValueError(f"unknown residual form {form!r}")
    return logder - target


def anticone_closed_form_energy(ch: Channel, mass: float, a: float) -> float:
    """Closed-form bound-state energy on the anti-cone:

        E = -(2/(M a^2)) [ ((1-alpha+alpha lam)/(1-alpha-alpha lam))
                            * Gamma(1+lam)/Gamma(1-lam) ]^(1/lam)

    Raises NoBoundStateError when the reality condition |1-alpha| >= 1
    fails, or when the bracket inside the power is not positive (the
    channel then has no matching root either).
    """
    lam = _require_extension_channel(ch)
    alpha = ch.alpha
    if not alpha > 1.0:
        raise UnsupportedChannelError(f"anti-cone solver requires alpha > 1, got {alpha}")
    if abs(1.0 - alpha) < 1.0:
        raise NoBoundStateError(
            f"reality condition |1 - alpha| >= 1 violated (alpha={alpha}); "
            "the closed-form energy is not guaranteed real"
        )
    t = boundary_log_derivative_target(alpha)
    ratio = (t + lam) / (t - lam)
    bracket = ratio * math.exp(-_ln_gamma_ratio(lam))
    if bracket <= 0.0:
        raise NoBoundStateError(
            f"matching bracket {bracket} not positive for channel m={ch.m}, "
            f"phi={ch.phi}, alpha={alpha}; no bound state"
        )
    return -(2.0 / (mass * a * a)) * bracket ** (1.0 / lam)


def _bisect_log(f: Callable[[float], float], wlo: float, whi: float, tol: float) -> float:
    flo = f(wlo)
    fhi = f(whi)
    if flo == 0.0:
        return wlo
    if fhi == 0.0:
        return whi
    if flo * fhi > 0.0:
        raise NoBoundStateError("no sign change in the matching bracket")
    while whi - wlo > tol:
        mid = 0.5 * (wlo + whi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            whi = mid
        else:
            wlo, flo = mid, fm
    return 0.5 * (wlo + whi)


def _anticone_root_x(ch: Channel, mass: float, a: float, form: str) -> float:
    """Dimensionless root x* = kappa a of the anti-cone residual."""
    lam = ch.order.magnitude

    def res_of_w(w: float) -> float:
        x = math.exp(w)
        return anticone_matching_residual(-x * x / (2.0 * mass * a * a), ch, mass, a, form=form)

    if form == "asymptotic":
        # unique root below the spurious zero of the two-term form
        x_pole = 2.0 * math.exp(-_ln_gamma_ratio(lam) / (2.0 * lam))
        whi = math.log(x_pole) - 1.0e-9
    else:
        # expand until the exact log-derivative has fallen below the target
        x_cap = math.sqrt(2.0 * BRACKET_ENERGY_SCALE)
        x_hi = 0.05
        target = boundary_log_derivative_target(ch.alpha)
        while (
            x_hi < x_cap
            and x_hi * specfun.bessel_k_deriv(lam, x_hi) / specfun.bessel_k(lam, x_hi) > target
        ):
            x_hi *= 2.0
        whi = math.log(min(x_hi, x_cap))
    wlo = math.log(1.0e-18)
    w = _bisect_log(res_of_w, wlo, whi, 0.5 * _RELATIVE_ENERGY_TOL)
    return math.exp(w)


def anticone_bound_energy(
    ch: Channel,
    mass: float,
    a: float,
    mode: SolveMode = SolveMode.NUMERIC_ROOT,
    form: str = "asymptotic",
) -> BoundState:
    """Anti-cone bound state by closed form or by bisecting the residual.

    NUMERIC_ROOT bisects the residual in log-energy inside
    E in (-BRACKET_ENERGY_SCALE/(M a^2), 0) to 1e-12 relative; the root is
    unique.  CLOSED_FORM evaluates the closed expression (same physics for
    form="asymptotic"; disagreements between the two modes are a bug, not
    physics, and tests pin them to ~1e-12).
    """
    lam = _require_extension_channel(ch)
    if not ch.alpha > 1.0:
        raise UnsupportedChannelError(f"anti-cone solver requires alpha > 1, got {ch.alpha}")
    if not (mass > 0 and a > 0):
        raise ValueError("mass and core radius must be positive")
    if mode is SolveMode.CLOSED_FORM:
        energy = anticone_closed_form_energy(ch, mass, a)
        source = Source.CLOSED_FORM
    else:
        t = boundary_log_derivative_target(ch.alpha)
        if lam + t >= 0.0:
            extra = ""
            if abs(1.0 - ch.alpha) < 1.0:
                extra = (
                    f" (sufficient reality condition |1 - alpha| >= 1 fails: "
                    f"|1 - {ch.alpha}| = {abs(1.0 - ch.alpha)})"
                )
            raise NoBoundStateError(
                f"residual has no sign change: order magnitude {lam} >= "
                f"-(1-alpha)/alpha = {-t}; no bound state{extra}"
            )
        x = _anticone_root_x(ch, mass, a, form)
        energy = -x * x / (2.0 * mass * a * a)
        source = Source.NUMERIC_ROOT
    residual = anticone_matching_residual(energy, ch, mass, a, form=form)
    return BoundState(
        energy=energy,
        kappa=math.sqrt(-2.0 * mass * energy),
        channel=ch,
        branch=0,
        source=source,
        mass=mass,
        core_radius=a,
        residual=residual,
    )


def cone_matching_residual(
    energy: float,
    ch: Channel,
    mass: float,
    a: float,
    gamma_sign: GammaSign = GammaSign.MINUS,
    form: str = "asymptotic",
) -> float:
    """Residual of the cone (imaginary-order) bound-state condition:

        residual(E) = nu * cot[ nu ln(kappa a / 2) +/- gamma_nu ]
                      - (1 - alpha)/alpha,

    periodic in ln(-E) with period 2 pi / nu.  gamma_sign selects the sign
    of the phase gamma_nu = arg Gamma(1 + i nu); MINUS is consistent with
    the small-argument form of K_{i nu} (see specfun.SMALL_ARG_PHASE_SIGN)
    and is the default, PLUS is kept because both conventions circulate.
    Raises MatchingPoleError at cot poles; callers bracket between poles.
    """
    nu = _require_imaginary_channel(ch)
    x = _kappa_a(energy, mass, a)
    target = boundary_log_derivative_target(ch.alpha)
    if form == "asymptotic":
        arg = nu * math.log(0.5 * x) + gamma_sign.value_sign * specfun.coulomb_phase(nu)
        s = math.sin(arg)
        if abs(s) < 1.0e-12:
            raise MatchingPoleError(f"cot argument {arg} within 1e-12 of a pole")
        logder = nu * math.cos(arg) / s
    elif form == "exact":
        k_val = specfun.bessel_k_imag(nu, x)
        if k_val == 0.0:
            raise MatchingPoleError(f"K_(i nu) vanishes at x={x}")
        logder = x * specfun.bessel_k_imag_deriv(nu, x) / k_val
    else:
        raise ValueError(f"unknown residual form {form!r}")
    return logder - target


def _cone_branch_window(
    ch: Channel, gamma_sign: GammaSign, branch: int, guard: float = SMALL_ARGUMENT_GUARD
):
    """Pole-to-pole window (in the cot argument) containing the branch root.

    Roots sit at arg = arccot(t/nu) mod pi; branch 0 is the root with the
    largest kappa a not exceeding ``guard``, branch n lies n periods below
    (energies shrink by exp(-2 pi / nu) per branch).
    """
    nu = ch.order.magnitude
    t = boundary_log_derivative_target(ch.alpha)
    sign = gamma_sign.value_sign
    gam = specfun.coulomb_phase(nu)
    theta = math.atan2(1.0, t / nu)  # arccot into (0, pi)
    k_max = math.floor((nu * math.log(0.5 * guard) + sign * gam - theta) / math.pi)
    k = k_max - branch
    root_x = 2.0 * math.exp((theta + k * math.pi - sign * gam) / nu)
    w_lo = (k * math.pi - sign * gam) / nu + math.log(2.0)
    w_hi = ((k + 1) * math.pi - sign * gam) / nu + math.log(2.0)
    return root_x, w_lo, w_hi


def cone_bound_energy(
    ch: Channel,
    mass: float,
    a: float,
    branch: int = 0,
    mode: SolveMode = SolveMode.NUMERIC_ROOT,
    gamma_sign: GammaSign = GammaSign.MINUS,
) -> BoundState:
    """Bound state of the cone tower at the given branch.

    NUMERIC_ROOT bisects the residual between the two cot poles enclosing
    the branch root (one root per period, monotone in between).  Branch 0
    is the deepest root whose kappa a stays inside the small-argument
    window; consecutive branches shrink by exactly exp(-2 pi / nu).

    CLOSED_FORM evaluates the printed closed-form inversion via
    cone_closed_form_literal and raises ComplexEnergyError whenever the
    value is not a negative real number (in the bound regime the radicand
    (m+phi)^2 - (1-alpha^2)/4 is negative, so this is the norm; the value
    is surfaced for audit, never silently repaired).
    """
    nu = _require_imaginary_channel(ch)
    if branch < 0:
        raise ValueError(f"branch must be >= 0, got {branch}")
    if not (mass > 0 and a > 0):
        raise ValueError("mass and core radius must be positive")
    if mode is SolveMode.CLOSED_FORM:
        value = cone_closed_form_literal(ch, mass, a)
        if abs(value.imag) > 1.0e-12 * abs(value) or value.real >= 0.0:
            raise ComplexEnergyError(
                value,
                f"closed-form cone energy is not a negative real: {value!r} "
                f"(channel m={ch.m}, phi={ch.phi}, alpha={ch.alpha})",
            )
        energy = value.real
        source = Source.CLOSED_FORM
        residual = None
    else:
        _, w_lo, w_hi = _cone_branch_window(ch, gamma_sign, branch)
        margin = 1.0e-9 * (w_hi - w_lo)

        def res_of_lnx(lnx: float) -> float:
            x = math.exp(lnx)
            return cone_matching_residual(
                -x * x / (2.0 * mass * a * a), ch, mass, a, gamma_sign=gamma_sign
            )

        lnx = _bisect_log(res_of_lnx, w_lo + margin, w_hi - margin, 0.5 * _RELATIVE_ENERGY_TOL)
        x = math.exp(lnx)
        energy = -x * x / (2.0 * mass * a * a)
        source = Source.NUMERIC_ROOT
        residual = cone_matching_residual(energy, ch, mass, a, gamma_sign=gamma_sign)
    return BoundState(
        energy=energy,
        kappa=math.sqrt(-2.0 * mass * energy),
        channel=ch,
        branch=branch,
        source=source,
        mass=mass,
        core_radius=a,
        residual=residual,
        gamma_sign=gamma_sign,
    )


def cone_closed_form_literal(ch: Channel, mass: float, a: float) -> complex:
    """Closed-form cone energy exactly as conventionally printed:

        E = -(2/(M a^2)) exp[ (2 / (alpha s)) *
                              arccot( (1-alpha)/(alpha s) - gamma_nu ) ],
        s = sqrt( (m+phi)^2 - (1-alpha^2)/4 ).

    In the bound regime the radicand is negative, s is imaginary, and the
    expression is complex; it is evaluated verbatim with principal
    branches and returned as-is so audits can quantify the discrepancy
    against the numeric tower roots.
    """
    nu = _require_imaginary_channel(ch)
    mp = ch.m + ch.phi
    alpha = ch.alpha
    s = cmath.sqrt(complex(mp * mp - (1.0 - alpha * alpha) / 4.0))
    gam = specfun.coulomb_phase(nu)
    inner = (1.0 - alpha) / (alpha * s) - gam
    acot = cmath.atan(1.0 / inner)
    return -(2.0 / (mass * a * a)) * cmath.exp((2.0 / (alpha * s)) * acot)


def bound_wavefunction_sampler(bs: BoundState) -> Callable[[float], float]:
    """Unnormalized radial wavefunction of a bound state.

    Real order: r -> K_lam(kappa r); imaginary order: r -> K_{i nu}(kappa r).
    Square integrable on (0, inf) against the measure r dr; decays like
    e^{-kappa r} at large radius and behaves like r^{-lam} (real order,
    lam < 1) or a bounded log-oscillation (imaginary order) near the apex.
    """
    kind = bs.channel.order.kind
    magnitude = bs.channel.order.magnitude
    kappa = bs.kappa

    def sample(r: float) -> float:
        if not r > 0:
            raise ValueError(f"radius must be positive, got {r}")
        x = kappa * r
        if kind is OrderKind.REAL:
            return specfun.bessel_k(magnitude, x)
        return specfun.bessel_k_imag(magnitude, x)

    return sample
