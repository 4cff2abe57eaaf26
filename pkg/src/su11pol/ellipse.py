"""Transverse field samples and the nonparametric polarization quadratic.

The tip of the transverse field vector (E1, E2) traces a centered conic as
the propagation phase tau advances; the quadratic built here is the equation
of that curve, and every sampled point must satisfy it to rounding error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import FieldParams, TWO_PI
from .stokes import StokesLike

SAMPLES_CSV_HEADER = "tau,E1,E2"

# scale-relative threshold deciding when the conic collapses to a line
DEGENERACY_RTOL = 1e-12


@dataclass(frozen=True)
class FieldSample:
    """Transverse field components at one propagation phase tau."""

    tau: float
    e1: float
    e2: float


@dataclass(frozen=True)
class EllipseQuadratic:
    """Coefficients of the curve e1_sq*E1^2 + e2_sq*E2^2 + cross*E1*E2 = rhs.

    a1, b1, a2, b2 are the cosine and sine amplitudes of the two field
    components that the coefficients were built from.
    """

    e1_sq: float
    e2_sq: float
    cross: float
    rhs: float
    a1: float
    b1: float
    a2: float
    b2: float
    degenerate: bool

    def discriminant(self) -> float:
        """cross^2 - 4*e1_sq*e2_sq; nonpositive, zero only for a line."""
        return self.cross * self.cross - 4.0 * self.e1_sq * self.e2_sq

    def to_json_payload(self) -> dict:
        return {
            "e1_sq": self.e1_sq,
            "e2_sq": self.e2_sq,
            "cross": self.cross,
            "rhs": self.rhs,
            "a1": self.a1,
            "b1": self.b1,
            "a2": self.a2,
            "b2": self.b2,
            "degenerate": self.degenerate,
        }


def ab_coefficients(params: FieldParams) -> tuple[float, float, float, float]:
    """Cosine/sine amplitudes A_i = 2*amp_i*cos(phi_i), B_i = 2*amp_i*sin(phi_i)."""
    a1 = params.atilde1 * math.cos(params.phi1)
    b1 = params.atilde1 * math.sin(params.phi1)
    a2 = params.atilde2 * math.cos(params.phi2)
    b2 = params.atilde2 * math.sin(params.phi2)
    return a1, b1, a2, b2


def sample_field(params: FieldParams, tau: float) -> FieldSample:
    """Field components E_i = A_i*cos(tau) + B_i*sin(tau).

    Equivalently E_i = 2*amp_i*cos(tau - phi_i); the two forms agree to
    rounding error and the first one is used.
    """
    a1, b1, a2, b2 = ab_coefficients(params)
    c, s = math.cos(tau), math.sin(tau)
    return FieldSample(tau=tau, e1=a1 * c + b1 * s, e2=a2 * c + b2 * s)


def sample_curve(
    params: FieldParams, count: int = 256
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sample one full period on a uniform tau grid of `count` points."""
    if count < 1:
        raise ValueError("count must be positive")
    tau = np.linspace(0.0, TWO_PI, count, endpoint=False)
    a1, b1, a2, b2 = ab_coefficients(params)
    c, s = np.cos(tau), np.sin(tau)
    return tau, a1 * c + b1 * s, a2 * c + b2 * s


def build_quadratic(params: FieldParams) -> EllipseQuadratic:
    """Quadratic whose solution set is the sampled field trajectory.

    e1_sq = A2^2 + B2^2, e2_sq = A1^2 + B1^2, cross = -2*(A1*A2 + B1*B2),
    rhs = (A1*B2 - A2*B1)^2. The curve degenerates to a line exactly when
    A1*B2 = A2*B1; degeneracy is a flag, not an error.
    """
    a1, b1, a2, b2 = ab_coefficients(params)
    pivot = a1 * b2 - a2 * b1
    # <= so that single-mode input (zero area scale) flags as degenerate
    degenerate = abs(pivot) <= DEGENERACY_RTOL * (params.atilde1 * params.atilde2)
    return EllipseQuadratic(
        e1_sq=a2 * a2 + b2 * b2,
        e2_sq=a1 * a1 + b1 * b1,
        cross=-2.0 * (a1 * a2 + b1 * b2),
        rhs=pivot * pivot,
        a1=a1,
        b1=b1,
        a2=a2,
        b2=b2,
        degenerate=degenerate,
    )


def residual(quadratic: EllipseQuadratic, sample: FieldSample) -> float:
    """Signed defect of the curve equation at one sample, normalized by max(1, rhs)."""
    value = (
        quadratic.e1_sq * sample.e1 * sample.e1
        + quadratic.e2_sq * sample.e2 * sample.e2
        + quadratic.cross * sample.e1 * sample.e2
        - quadratic.rhs
    )
    return value / max(1.0, quadratic.rhs)


def max_residual(quadratic: EllipseQuadratic, params: FieldParams, count: int = 256) -> float:
    """Largest |residual| over a uniform tau grid."""
    tau, e1, e2 = sample_curve(params, count)
    values = (
        quadratic.e1_sq * e1 * e1
        + quadratic.e2_sq * e2 * e2
        + quadratic.cross * e1 * e2
        - quadratic.rhs
    )
    return float(np.abs(values).max() / max(1.0, quadratic.rhs))


@dataclass(frozen=True)
class EllipseStokesForm:
    """The same curve written with Stokes-like coefficients.

    Coefficients are (k3 - k0, k3 + k0, -2*k2) with right hand side 2*k1^2.
    They are parallel to the directly built quadratic up to one positive
    scale per side; see proportionality_report.
    """

    e1_sq: float
    e2_sq: float
    cross: float
    rhs: float

    def to_json_payload(self) -> dict:
        return {
            "e1_sq": self.e1_sq,
            "e2_sq": self.e2_sq,
            "cross": self.cross,
            "rhs": self.rhs,
        }


def quadratic_in_stokes(s: StokesLike) -> EllipseStokesForm:
    """Rewrite the polarization curve using Stokes-like parameters."""
    return EllipseStokesForm(
        e1_sq=s.k3 - s.k0,
        e2_sq=s.k3 + s.k0,
        cross=-2.0 * s.k2,
        rhs=2.0 * s.k1 * s.k1,
    )


@dataclass(frozen=True)
class ScaleReport:
    """Measured proportionality between the two quadratic forms.

    lhs_scale multiplies the Stokes-form coefficient vector onto the direct
    one; rhs_scale does the same for the right hand sides. parallel_deviation
    is the normalized cross product of the two coefficient vectors, zero when
    they are exactly parallel. Scales are None when the matching side
    vanishes (degenerate input).
    """

    lhs_scale: float | None
    rhs_scale: float | None
    parallel_deviation: float

    def to_json_payload(self) -> dict:
        return {
            "lhs_scale": self.lhs_scale,
            "rhs_scale": self.rhs_scale,
            "parallel_deviation": self.parallel_deviation,
        }


def proportionality_report(
    quadratic: EllipseQuadratic, form: EllipseStokesForm
) -> ScaleReport:
    """Measure how the two coefficient vectors are proportional.

    The scale is reported instead of asserted so that any constant-factor
    disagreement between the two derivations is surfaced as data.
    """
    direct = np.array([quadratic.e1_sq, quadratic.e2_sq, quadratic.cross])
    stokes = np.array([form.e1_sq, form.e2_sq, form.cross])
    norm_direct = float(np.abs(direct).max())
    norm_stokes = float(np.abs(stokes).max())
    if norm_direct == 0.0 or norm_stokes == 0.0:
        lhs_scale = None
        parallel = 0.0
    else:
        lhs_scale = float(np.dot(direct, stokes) / np.dot(stokes, stokes))
        cross = np.array(
            [
                direct[0] * stokes[1] - direct[1] * stokes[0],
                direct[0] * stokes[2] - direct[2] * stokes[0],
                direct[1] * stokes[2] - direct[2] * stokes[1],
            ]
        )
        parallel = float(np.abs(cross).max() / (norm_direct * norm_stokes))
    rhs_scale = quadratic.rhs / form.rhs if form.rhs > 0.0 else None
    return ScaleReport(
        lhs_scale=lhs_scale, rhs_scale=rhs_scale, parallel_deviation=parallel
    )
