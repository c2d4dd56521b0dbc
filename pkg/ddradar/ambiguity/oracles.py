# Copyright (c) 2024 Microsoft Corporation.
# Licensed under the MIT License

"""Reference values for the self-ambiguity of filtered chirps and pulsones."""

import cmath
import logging
import math

import numpy as np
from scipy import integrate

from ddradar.config.errors import ConfigurationError
from ddradar.dd_core import DDGrid, DDPatch, twisted_convolve
from ddradar.errors import QuadratureError
from ddradar.waveforms import (
    ChirpParams,
    GaussianFilterParams,
    gaussian_filter_taps,
    matched_filter_of,
)

log = logging.getLogger(__name__)

QUAD_EPSABS = 1e-10
QUAD_LIMIT = 200
QUAD_WIDTHS = 6.0
QUAD_TOLERANCE = 1e-7


def _chirp_envelope(params: ChirpParams, filter: GaussianFilterParams) -> tuple[complex, complex]:  # noqa: A002
    """Get (C, κ) with w₁ ⋆ (W₂·c)(s) = C·e^{-κs²}, scaled to unit energy."""
    eta = filter.alpha * filter.bandwidth**2
    b = filter.beta * params.duration**2
    gamma = math.pi**2 / b - 1j * math.pi * params.slope
    kappa = eta * gamma / (eta + gamma)
    raw = (
        (2 * eta / math.pi) ** 0.25
        * (2 * b / math.pi) ** 0.25
        * math.sqrt(math.pi / b)
        * cmath.sqrt(math.pi / (eta + gamma))
    )
    energy = abs(raw) ** 2 * math.sqrt(math.pi / (2 * kappa.real))
    return raw / math.sqrt(energy), kappa


def chirp_self_ambiguity_oracle(
    params: ChirpParams,
    filter: GaussianFilterParams,  # noqa: A002
    tau: float,
    nu: float,
    energy: float = 1.0,
) -> complex:
    """Self-ambiguity of a filtered chirp of the given energy, by 1-D quadrature.

    A(τ, ν) = e^{-j2πν·t_c} ∫ ũ(s)·ũ*(s - τ)·e^{-j2πν(s - τ)} ds with ũ the
    closed-form filtered chirp about the segment center t_c.
    """
    c, kappa = _chirp_envelope(params, filter.with_duration(params.duration))

    def integrand(s: float) -> complex:
        return (
            c
            * cmath.exp(-kappa * s * s)
            * (c * cmath.exp(-kappa * (s - tau) ** 2)).conjugate()
            * cmath.exp(-2j * math.pi * nu * (s - tau))
        )

    half = QUAD_WIDTHS / math.sqrt(2 * kappa.real)
    lo, hi = tau / 2 - half, tau / 2 + half
    re, re_err = integrate.quad(
        lambda s: integrand(s).real, lo, hi, epsabs=QUAD_EPSABS, limit=QUAD_LIMIT
    )
    im, im_err = integrate.quad(
        lambda s: integrand(s).imag, lo, hi, epsabs=QUAD_EPSABS, limit=QUAD_LIMIT
    )
    abserr = math.hypot(re_err, im_err)
    if abserr > QUAD_TOLERANCE:
        raise QuadratureError(tau, nu, abserr, QUAD_TOLERANCE)
    return energy * complex(re, im) * cmath.exp(-2j * math.pi * nu * params.center)


def chirp_delay_integral(
    params: ChirpParams,
    filter: GaussianFilterParams,  # noqa: A002
    tau: float,
    nu: float,
    energy: float = 1.0,
    literal: bool = False,
) -> complex:
    """Self-ambiguity of a filtered chirp as one integral over the chirp's delay.

    Filtering convolves ambiguity functions along delay, so with η = αB² and
    b = βT² (T the segment duration)

        A(τ, ν) ∝ e^{-π²ν²/(2η)}·e^{jπντ}
                  ∫ e^{-b(as - ν)²/2}·e^{-π²s²/(2b)}·e^{-η(τ - s)²/2} ds,

    where the chirp phase has cancelled. `literal=True` squares the widths 2η
    and 2b and drops the factor b on (as - ν)². It also keeps a leftover
    e^{-j2πas²} phase and does not match the time-domain surface. The result
    is scaled to `energy` at the origin, about the segment center.
    """
    seg = filter.with_duration(params.duration)
    eta = seg.alpha * seg.bandwidth**2
    b = seg.beta * params.duration**2
    a = params.slope
    if literal:
        weight, width_b, width_eta, twist = 1.0, (2 * b) ** 2, (2 * eta) ** 2, 2 * math.pi * a
    else:
        weight, width_b, width_eta, twist = b, 2 * b, 2 * eta, 0.0
    p = 0.5 * weight * a * a + math.pi**2 / width_b + 0.5 * eta

    def value(tau: float, nu: float) -> complex:
        def exponent(s: float) -> complex:
            return (
                -0.5 * weight * (a * s - nu) ** 2
                - math.pi**2 * s * s / width_b
                - 0.5 * eta * (tau - s) ** 2
                - 1j * twist * s * s
            )

        width = 1.0 / math.sqrt(2 * p)
        s0 = (weight * a * nu + eta * tau) * width * width
        peak = exponent(s0).real

        def integrand(x: float) -> complex:
            return cmath.exp(exponent(s0 + width * x) - peak)

        bounds = (-QUAD_WIDTHS, QUAD_WIDTHS)
        re, re_err = integrate.quad(
            lambda x: integrand(x).real, *bounds, epsabs=QUAD_EPSABS, limit=QUAD_LIMIT
        )
        im, im_err = integrate.quad(
            lambda x: integrand(x).imag, *bounds, epsabs=QUAD_EPSABS, limit=QUAD_LIMIT
        )
        abserr = math.hypot(re_err, im_err)
        if abserr > QUAD_TOLERANCE:
            raise QuadratureError(tau, nu, abserr, QUAD_TOLERANCE)
        return (
            cmath.exp(peak - math.pi**2 * nu * nu / width_eta + 1j * math.pi * nu * tau)
            * width
            * complex(re, im)
        )

    origin = value(0.0, 0.0)
    return energy * value(tau, nu) / origin * cmath.exp(-2j * math.pi * nu * params.center)


def chirp_patch_self_ambiguity(
    params: ChirpParams,
    filter: GaussianFilterParams,  # noqa: A002
    grid: DDGrid,
    reach: int,
    truncation: int = 5,
) -> DDPatch:
    """Evaluate w ∗σ A_cc ∗σ w_mf on delay bins |k| <= reach.

    A_cc = e^{jπντ}·δ(ν - aτ) is the self-ambiguity of the infinite chirp,
    which needs an on-grid slope a = m·P·B/(Q·T). The result is scaled to
    one at the origin, for a chirp centered at t = 0.
    """
    m = params.slope * grid.dtau / grid.dnu
    if not math.isclose(m, round(m), abs_tol=1e-9):
        msg = f"slope {params.slope!r} Hz² is not a multiple of P·B/(Q·T)"
        raise ConfigurationError(msg)
    m = round(m)
    w = gaussian_filter_taps(filter.with_duration(params.duration), grid, truncation)
    w_mf = matched_filter_of(w)
    span = reach + 2 * (w.k_stop - 1)
    k = np.arange(-span, span + 1)
    l = m * k  # noqa: E741
    values = np.exp(1j * np.pi * (l * grid.dnu) * (k * grid.dtau)) / grid.dnu
    line = DDPatch.from_taps(grid, k, l, values)
    out = twisted_convolve(twisted_convolve(w, line), w_mf)
    origin = out.value_at(0, 0)
    log.debug("chirp patch %s, origin %s", out.values.shape, origin)
    return out.scaled(1.0 / origin)


def pulsone_self_ambiguity_oracle(
    filter: GaussianFilterParams,  # noqa: A002
    grid: DDGrid,
    n: int,
    m: int,
    tau: float,
    nu: float,
    truncation: int = 5,
) -> complex:
    """Lattice term (n, m) of a unit-energy pulsone's self-ambiguity at (τ, ν).

    A_{n,m} = w ∗σ (e^{j2π·m·ν_p·τ}·w_mf(τ - n·τ_p, ν - m·ν_p)), by direct
    discrete twisted convolution of the filter patches.
    """
    w = gaussian_filter_taps(filter, grid, truncation)
    w_mf = matched_filter_of(w)
    k = w_mf.delay_bins() + n * grid.delay_bins
    phase = np.exp(2j * np.pi * m * k / grid.delay_bins)[:, None]
    shifted = DDPatch(
        grid,
        w_mf.values * phase,
        w_mf.k_start + n * grid.delay_bins,
        w_mf.l_start + m * grid.doppler_bins,
    )
    term = twisted_convolve(w, shifted)
    energy = float(np.vdot(w.values, w.values).real) * grid.cell_area
    return term.value_at(round(tau / grid.dtau), round(nu / grid.dnu)) / energy
