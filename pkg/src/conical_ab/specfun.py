"""Special-function kernels used by the matching equations.

Only the narrow slices of special-function territory that the physics
needs are implemented:

* log-gamma on the positive real axis and Gamma(1 + i*lam) on the line
  needed for the phase gamma_lam = arg Gamma(1 + i*lam),
* modified Bessel I of real order nu > -1 (power series),
* modified Bessel K of real order in (0, 1): the I_{-nu} - I_{nu}
  combination for x <= 2, a continued fraction for x > 2 where that
  combination cancels catastrophically,
* modified Bessel K of purely imaginary order via the cosine-cosh
  integral, with its small-argument oscillatory form.

Integer orders and orders >= 1 for K are deliberately out of scope: the
extension analysis only ever needs order magnitudes inside (0, 1), and
excluding the endpoints avoids the sin(pi*nu) poles.

All kernels are pure functions evaluated with fixed, deterministic node
rules; nothing here keeps state.

Sign convention: the small-argument form of K_{i nu} is written with the
phase *subtracted* inside the sine,

    K_{i nu}(x) ~ -sqrt(pi/(nu sinh(pi nu))) * sin(nu ln(x/2) - gamma_nu),

with gamma_nu = arg Gamma(1 + i nu).  SMALL_ARG_PHASE_SIGN records that
choice; the cone matching supports both signs explicitly because the two
conventions appear in the literature.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import NumericalError

#: Sign with which gamma_nu enters the sine of the small-argument K_{i nu}.
SMALL_ARG_PHASE_SIGN = -1.0

# Lanczos approximation, g = 7, 9 coefficients (double precision).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


class OrderKind(Enum):
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class OrderSpec:
    """Bessel order: a nonnegative magnitude tagged real or imaginary."""

    kind: OrderKind
    magnitude: float

    def __post_init__(self):
        if self.magnitude < 0:
            raise ValueError(f"order magnitude must be >= 0, got {self.magnitude}")


def _lanczos_sum(z):
    acc = _LANCZOS_C[0]
    for k in range(1, 9):
        acc += _LANCZOS_C[k] / (z - 1.0 + k)
    return acc


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0.

    Lanczos approximation evaluated in log space (no overflow for large x);
    arguments below 1.5 are shifted up with Gamma(x) = Gamma(x+2)/(x(x+1)).
    Relative accuracy is a few 1e-15.
    """
    if not x > 0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    if x < 1.5:
        return ln_gamma(x + 2.0) - math.log(x * (x + 1.0))
    t = x + _LANCZOS_G - 0.5
    return 0.5 * math.log(2.0 * math.pi) + (x - 0.5) * math.log(t) - t + math.log(_lanczos_sum(x))


def gamma_one_plus_i(lambda_mag: float) -> complex:
    """Gamma(1 + i*lam) via the complex Lanczos approximation."""
    z = complex(1.0, lambda_mag)
    t = z + _LANCZOS_G - 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z - 0.5) * cmath.exp(-t) * _lanczos_sum(z)


def coulomb_phase(lambda_mag: float) -> float:
    """Phase gamma_lam = arg Gamma(1 + i*lam), principal value in (-pi, pi].

    Satisfies |Gamma(1 + i*lam)|^2 = pi*lam / sinh(pi*lam); negative for
    small lam (slope -EulerGamma).  gamma_0 = 0.
    """
    if lambda_mag == 0.0:
        return 0.0
    if not lambda_mag > 0:
        raise ValueError(f"lambda magnitude must be positive, got {lambda_mag}")
    return cmath.phase(gamma_one_plus_i(lambda_mag))


def bessel_i_signed(order: float, x: float) -> float:
    """Modified Bessel I_order(x) for order > -1 by its power series.

    Terms are generated by the stable ratio recurrence and the sum stops
    once a term drops below 1e-16 of the partial sum.  Arguments above 700
    are refused (the series is exact but the result overflows the double
    range before then becomes relevant for this artifact).
    """
    if not x > 0:
        raise ValueError(f"bessel_i requires x > 0, got {x}")
    if x > 700.0:
        raise OverflowError(f"bessel_i argument {x} beyond supported range (x <= 700)")
    if order <= -1.0:
        raise ValueError(f"bessel_i_signed requires order > -1, got {order}")
    term = math.exp(order * math.log(0.5 * x) - ln_gamma(order + 1.0))
    total = term
    quarter_x2 = 0.25 * x * x
    k = 0
    while True:
        k += 1
        term *= quarter_x2 / (k * (order + k))
        total += term
        if abs(term) < 1e-16 * abs(total):
            return total
        if k > 10000:  # unreachable for x <= 700
            raise NumericalError("bessel_i series failed to converge")


def bessel_i(order: float, x: float) -> float:
    """Modified Bessel I of nonnegative real order (see bessel_i_signed)."""
    if order < 0:
        raise ValueError(f"bessel_i requires order >= 0, got {order}")
    return bessel_i_signed(order, x)


def _check_k_order(order: float) -> None:
    if not 0.0 < order < 1.0:
        raise ValueError(f"bessel_k order must lie strictly in (0, 1), got {order}")


def _bessel_k_small(order: float, x: float) -> float:
    # pi/(2 sin(pi nu)) * (I_{-nu} - I_{nu}); fine for x <= 2 where the
    # cancellation costs at most ~2 digits.
    return (
        math.pi
        / (2.0 * math.sin(math.pi * order))
        * (bessel_i_signed(-order, x) - bessel_i_signed(order, x))
    )


def _bessel_k_cf(order: float, x: float, eps: float = 4e-16, maxit: int = 10000) -> float:
    # Steed/Temme continued fraction for K, reliable for x >= 2.
    # Works with the reduced order mu in [-1/2, 1/2]; K_{mu+1} follows from
    # the recurrence and equals K_order when order > 1/2.
    mu = order if order <= 0.5 else order - 1.0
    a1 = 0.25 - mu * mu
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1, q2 = 0.0, 1.0
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, maxit):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < eps:
            break
    else:
        raise NumericalError("bessel_k continued fraction failed to converge")
    h = a1 * h
    k_mu = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    if order <= 0.5:
        return k_mu
    return k_mu * (mu + x + 0.5 - h) / x  # K_{mu+1}


def bessel_k(order: float, x: float) -> float:
    """Modified Bessel K of real order in (0, 1), any x > 0.

    For x <= 2 this evaluates pi/(2 sin(pi nu)) [I_{-nu}(x) - I_{nu}(x)]
    directly from the I series.  For x > 2 that difference loses all
    precision (both terms grow like e^x while K decays like e^-x), so a
    continued-fraction evaluation is used instead.  The two branches agree
    to ~1e-13 at the switch point.
    """
    _check_k_order(order)
    if not x > 0:
        raise ValueError(f"bessel_k requires x > 0, got {x}")
    if x <= 2.0:
        return _bessel_k_small(order, x)
    return _bessel_k_cf(order, x)


def bessel_k_deriv(order: float, x: float) -> float:
    """d/dx K_nu(x) for nu in (0, 1): -K_{1-nu}(x) - (nu/x) K_nu(x)."""
    _check_k_order(order)
    if not x > 0:
        raise ValueError(f"bessel_k_deriv requires x > 0, got {x}")
    return -bessel_k(1.0 - order, x) - (order / x) * bessel_k(order, x)


def bessel_k_asymptotic_small_x(order: float, x: float) -> float:
    """Leading small-argument form of K_nu, nu in (0, 1):

        pi/(2 sin(pi nu)) [ x^-nu / (2^-nu Gamma(1-nu))
                            - x^nu / (2^nu Gamma(1+nu)) ]

    Exact as x -> 0; the caller owns the validity decision at finite x.
    """
    _check_k_order(order)
    if not x > 0:
        raise ValueError(f"argument must be positive, got {x}")
    lhalf = math.log(0.5 * x)
    lead = math.exp(-order * lhalf - ln_gamma(1.0 - order))
    sub = math.exp(order * lhalf - ln_gamma(1.0 + order))
    return math.pi / (2.0 * math.sin(math.pi * order)) * (lead - sub)


def _cosh_cutoff(x: float) -> float:
    # e^{-x cosh T} < ~3e-20 at the cutoff.
    return math.acosh(1.0 + 45.0 / x)


def _imag_order_quadrature(order_mag: float, x: float, weight_cosh: bool) -> float:
    # Integral_0^T e^{-x cosh t} * cos(nu t) * (cosh t if weighted) dt via
    # composite 32-point Gauss-Legendre panels; panel count doubles until
    # two successive refinements agree.  Deterministic.
    T = _cosh_cutoff(x)
    nodes, weights = leggauss(32)
    prev = None
    panels = 8
    while panels <= 4096:
        edges = np.linspace(0.0, T, panels + 1)
        mids = 0.5 * (edges[:-1] + edges[1:])
        half = 0.5 * (edges[1] - edges[0])
        tt = (mids[:, None] + half * nodes[None, :]).ravel()
        vals = np.exp(-x * np.cosh(tt)) * np.cos(order_mag * tt)
        if weight_cosh:
            vals = vals * np.cosh(tt)
        total = half * float(np.dot(vals, np.tile(weights, panels)))
        if prev is not None and abs(total - prev) <= 1e-13 * max(1.0, abs(total)):
            return total
        prev = total
        panels *= 2
    raise NumericalError(
        f"imaginary-order quadrature did not settle (order={order_mag}, x={x})"
    )


def bessel_k_imag(order_mag: float, x: float) -> float:
    """Modified Bessel K of purely imaginary order, K_{i nu}(x), real by
    construction:

        K_{i nu}(x) = integral_0^inf e^{-x cosh t} cos(nu t) dt.

    Evaluated by deterministic composite Gauss-Legendre panels with the
    tail cut where e^{-x cosh t} drops below ~1e-20.
    """
    if not order_mag > 0:
        raise ValueError(f"order magnitude must be positive, got {order_mag}")
    if not x > 0:
        raise ValueError(f"bessel_k_imag requires x > 0, got {x}")
    return _imag_order_quadrature(order_mag, x, weight_cosh=False)


def bessel_k_imag_deriv(order_mag: float, x: float) -> float:
    """d/dx K_{i nu}(x) = -integral_0^inf e^{-x cosh t} cosh t cos(nu t) dt."""
    if not order_mag > 0:
        raise ValueError(f"order magnitude must be positive, got {order_mag}")
    if not x > 0:
        raise ValueError(f"bessel_k_imag_deriv requires x > 0, got {x}")
    return -_imag_order_quadrature(order_mag, x, weight_cosh=True)


def bessel_k_imag_small_x(order_mag: float, x: float) -> float:
    """Small-argument oscillatory form of K_{i nu}:

        -sqrt(pi / (nu sinh(pi nu))) * sin(nu ln(x/2) - gamma_nu)

    with gamma_nu = arg Gamma(1 + i nu) (see SMALL_ARG_PHASE_SIGN).  The
    amplitude bounds the exact function; zeros are spaced by pi/nu in
    ln x.  Meant for x well below min(1, 1/nu).
    """
    if not order_mag > 0:
        raise ValueError(f"order magnitude must be positive, got {order_mag}")
    if not x > 0:
        raise ValueError(f"argument must be positive, got {x}")
    amp = math.sqrt(math.pi / (order_mag * math.sinh(math.pi * order_mag)))
    phase = order_mag * math.log(0.5 * x) + SMALL_ARG_PHASE_SIGN * coulomb_phase(order_mag)
    return -amp * math.sin(phase)
