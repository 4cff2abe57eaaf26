"""Hyperbolic coordinates, the polarization surface, and region classification.

Finite polarization states sit on the upper sheet of the two-sheet
hyperboloid k3^2 - k1^2 - k2^2 = k0^2, parameterized by two hyperbolic
angles. States with equal amplitudes push one of the angles to infinity;
those limits are reported through explicit flags and never as floating-point
infinities inside a parameter set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import FieldParams, canonical_phase
from .stokes import StokesLike, stokes_like

MESH_CSV_HEADER = "chi2,psi2,K1,K2,K3"

# relative threshold on atilde1^2 - atilde2^2 deciding the equal-amplitude limit
EQUAL_AMP_RTOL = 1e-14
# |tanh argument| this close to 1 is the boundary of the hyperbolic domain
ATANH_BOUNDARY_TOL = 1e-14
# sin(delta21) below this is treated as exactly zero (sin of a float pi is ~1e-16)
SIN_ZERO_TOL = 1e-12

DEFAULT_CLASS_TOL = 1e-9


def _atilde_or_raise(params: FieldParams) -> tuple[float, float]:
    at1, at2 = params.atilde1, params.atilde2
    if at1 == 0.0 and at2 == 0.0:
        raise ValueError("both amplitudes are zero; there is no field to describe")
    return at1, at2


def psi_from_params(params: FieldParams) -> float:
    """Hyperbolic rotation angle psi with tanh(2*psi) = -2*at1*at2*cos(delta)/(at1^2+at2^2).

    The argument magnitude is bounded by 1; it reaches the boundary exactly
    when the amplitudes are equal and |cos(delta21)| = 1, and then the signed
    infinity is returned as the limit flag.

    Raises:
        ValueError: when both amplitudes are zero.
    """
    at1, at2 = _atilde_or_raise(params)
    argument = -2.0 * at1 * at2 * math.cos(params.delta21) / (at1 * at1 + at2 * at2)
    if abs(argument) >= 1.0 - ATANH_BOUNDARY_TOL:
        return math.copysign(math.inf, argument)
    return 0.5 * math.atanh(argument)


def chi_from_params(params: FieldParams) -> float:
    """Hyperbolic angle chi with sinh(2*chi) = -2*at1*at2*sin(delta)/(at1^2-at2^2).

    Equal amplitudes with sin(delta21) != 0 push chi to infinity (the
    circular limit); the signed infinity flags that. With sin(delta21) = 0
    the numerator vanishes identically along the limit, so chi = 0.

    Raises:
        ValueError: when both amplitudes are zero.
    """
    at1, at2 = _atilde_or_raise(params)
    sin_delta = math.sin(params.delta21)
    if abs(sin_delta) <= SIN_ZERO_TOL:
        return 0.0
    numerator = -2.0 * at1 * at2 * sin_delta
    denominator = at1 * at1 - at2 * at2
    if abs(denominator) < EQUAL_AMP_RTOL * (at1 * at1 + at2 * at2):
        return math.copysign(math.inf, numerator)
    return 0.5 * math.asinh(numerator / denominator)


@dataclass(frozen=True)
class HyperboloidCoords:
    """Location of a polarization state on the hyperboloid.

    chi and psi are meaningful only where the matching finite flag is True.
    branch_sign records the sign of k0, which selects how k1 attaches to
    sinh(2*chi) on the way back to Stokes-like parameters.
    """

    chi: float
    psi: float
    k0_abs: float
    branch_sign: int
    chi_finite: bool
    psi_finite: bool


def hyperboloid_coords(params: FieldParams) -> HyperboloidCoords:
    """Compute (chi, psi) together with the branch bookkeeping for one field."""
    chi = chi_from_params(params)
    psi = psi_from_params(params)
    s = stokes_like(params)
    return HyperboloidCoords(
        chi=chi,
        psi=psi,
        k0_abs=abs(s.k0),
        branch_sign=1 if s.k0 >= 0.0 else -1,
        chi_finite=math.isfinite(chi),
        psi_finite=math.isfinite(psi),
    )


def coords_to_stokes(coords: HyperboloidCoords) -> StokesLike:
    """Map hyperbolic coordinates back to Stokes-like parameters.

    With s = branch_sign the resolved parameterization is
    k0 = s*|k0|, k1 = -s*|k0|*sinh(2*chi), k2 = -|k0|*cosh(2*chi)*sinh(2*psi),
    k3 = +|k0|*cosh(2*chi)*cosh(2*psi). The sign of the k2 slot is fixed, not
    a branch: it follows from k2 = -k3*tanh(2*psi) and the positive k3 sheet.
    The result satisfies k3^2 - k0^2 = k1^2 + k2^2 identically.

    Raises:
        ValueError: when either coordinate is flagged infinite.
    """
    if not (coords.chi_finite and coords.psi_finite):
        raise ValueError("point at infinity has no finite Stokes-like image")
    if coords.branch_sign not in (-1, 1):
        raise ValueError("branch_sign must be -1 or +1")
    s = float(coords.branch_sign)
    chi2 = 2.0 * coords.chi
    psi2 = 2.0 * coords.psi
    k0 = s * coords.k0_abs
    k1 = -s * coords.k0_abs * math.sinh(chi2)
    k2 = -coords.k0_abs * math.cosh(chi2) * math.sinh(psi2)
    k3 = coords.k0_abs * math.cosh(chi2) * math.cosh(psi2)
    return StokesLike(
        k0=k0, k1=k1, k2=k2, k3=k3, delta21=canonical_phase(math.atan2(k1, k2))
    )


@dataclass(frozen=True)
class PrincipalAxes:
    """Squared principal semi-axes of the polarization ellipse.

    ab_signed carries the handedness: its magnitude equals a*b and its sign
    is that of sin(delta21), positive for the right-handed region.
    """

    a_sq: float
    b_sq: float
    a_sq_minus_b_sq: float
    ab_signed: float


def principal_axes(params: FieldParams) -> PrincipalAxes:
    """Principal axes from the rotation angle psi.

    a^2 = at1^2*cosh(psi)^2 + at2^2*sinh(psi)^2 + 2*at1*at2*sinh(psi)*cosh(psi)*cos(delta)
    b^2 = at1^2*sinh(psi)^2 + at2^2*cosh(psi)^2 + 2*at1*at2*sinh(psi)*cosh(psi)*cos(delta)

    Their difference telescopes to at1^2 - at2^2 for any psi, and with the
    computed psi the product obeys |a*b| = at1*at2*|sin(delta21)|.

    Raises:
        ValueError: when psi is infinite (equal amplitudes on the linear axis).
    """
    at1, at2 = _atilde_or_raise(params)
    psi = psi_from_params(params)
    if not math.isfinite(psi):
        raise ValueError("psi is infinite; principal axes are not defined in this limit")
    ch, sh = math.cosh(psi), math.sinh(psi)
    cos_delta = math.cos(params.delta21)
    mixed = 2.0 * at1 * at2 * sh * ch * cos_delta
    a_sq = at1 * at1 * ch * ch + at2 * at2 * sh * sh + mixed
    b_sq = at1 * at1 * sh * sh + at2 * at2 * ch * ch + mixed
    return PrincipalAxes(
        a_sq=a_sq,
        b_sq=b_sq,
        a_sq_minus_b_sq=a_sq - b_sq,
        ab_signed=at1 * at2 * math.sin(params.delta21),
    )


@dataclass(frozen=True)
class SurfaceMesh:
    """Vertices of the polarization surface over a (2*chi, 2*psi) grid.

    Rows are emitted row major with chi2 as the outer loop, so serialized
    output is reproducible byte for byte.
    """

    k0_abs: float
    chi2_values: np.ndarray
    psi2_values: np.ndarray
    signs: tuple[int, int]
    chi2: np.ndarray
    psi2: np.ndarray
    k1: np.ndarray
    k2: np.ndarray
    k3: np.ndarray

    @property
    def vertex_count(self) -> int:
        return self.k1.size

    def sheet_residual(self) -> float:
        """Max relative defect of k3^2 - k1^2 - k2^2 = k0^2 over all vertices."""
        defect = self.k3**2 - self.k1**2 - self.k2**2 - self.k0_abs**2
        return float(np.abs(defect).max() / max(1.0, self.k0_abs**2))

    def min_vertex_distance(self) -> float:
        """Distance from the origin to the nearest vertex.

        Equals k0_abs exactly when the grid contains the apex (0, 0), which
        any odd step count over a symmetric range does.
        """
        return float(np.sqrt(self.k1**2 + self.k2**2 + self.k3**2).min())

    def to_csv(self) -> str:
        lines = [MESH_CSV_HEADER]
        for values in zip(self.chi2, self.psi2, self.k1, self.k2, self.k3):
            lines.append(",".join(repr(float(v)) for v in values))
        return "\n".join(lines) + "\n"

    def to_json_payload(self) -> dict:
        return {
            "meta": {
                "k0_abs": self.k0_abs,
                "chi2_range": [float(self.chi2_values[0]), float(self.chi2_values[-1])],
                "psi2_range": [float(self.psi2_values[0]), float(self.psi2_values[-1])],
                "steps": [int(self.chi2_values.size), int(self.psi2_values.size)],
                "signs": list(self.signs),
            },
            "vertices": [
                [float(v) for v in row]
                for row in zip(self.chi2, self.psi2, self.k1, self.k2, self.k3)
            ],
        }


def surface_mesh(
    k0_abs: float,
    chi2_range: tuple[float, float] = (-0.4, 0.4),
    psi2_range: tuple[float, float] = (-0.4, 0.4),
    steps: tuple[int, int] = (41, 41),
    signs: tuple[int, int] = (1, 1),
) -> SurfaceMesh:
    """Sample (s1*k0*sinh(c), s2*k0*cosh(c)*sinh(p), k0*cosh(c)*cosh(p)).

    c and p run over the 2*chi and 2*psi grids. The third component is
    always positive, so every vertex lies on the single upper sheet with
    k3 >= k0_abs.

    Raises:
        ValueError: on nonpositive k0_abs, steps < 2, reversed ranges, or
            signs outside {-1, +1}.
    """
    if not k0_abs > 0.0:
        raise ValueError("k0_abs must be positive")
    steps_chi, steps_psi = int(steps[0]), int(steps[1])
    if steps_chi < 2 or steps_psi < 2:
        raise ValueError("steps must be at least 2 along each axis")
    if not (chi2_range[0] <= chi2_range[1] and psi2_range[0] <= psi2_range[1]):
        raise ValueError("ranges must be ordered (low, high)")
    if signs[0] not in (-1, 1) or signs[1] not in (-1, 1):
        raise ValueError("signs must be -1 or +1")

    chi2_values = np.linspace(chi2_range[0], chi2_range[1], steps_chi)
    psi2_values = np.linspace(psi2_range[0], psi2_range[1], steps_psi)
    chi2_grid, psi2_grid = np.meshgrid(chi2_values, psi2_values, indexing="ij")
    chi2 = chi2_grid.ravel()
    psi2 = psi2_grid.ravel()
    cosh_chi2 = np.cosh(chi2)
    return SurfaceMesh(
        k0_abs=float(k0_abs),
        chi2_values=chi2_values,
        psi2_values=psi2_values,
        signs=(int(signs[0]), int(signs[1])),
        chi2=chi2,
        psi2=psi2,
        k1=signs[0] * k0_abs * np.sinh(chi2),
        k2=signs[1] * k0_abs * cosh_chi2 * np.sinh(psi2),
        k3=k0_abs * cosh_chi2 * np.cosh(psi2),
    )


@dataclass(frozen=True)
class PolarizationClass:
    """Region tag plus a human-readable justification."""

    tag: str
    detail: str


def classify(params: FieldParams, tol: float = DEFAULT_CLASS_TOL) -> PolarizationClass:
    """Assign exactly one polarization region to a field.

    Single-mode light is Degenerate (linear along an axis). Otherwise the
    phase difference decides: on the lines delta21 = 0 or pi the state is LP
    (k1 = 0); at delta21 = pi/2 or 3*pi/2 with equal amplitudes it is CP
    (k2 = 0 and k0 = 0); everywhere else sin(delta21) > 0 gives REP (k1 > 0)
    and sin(delta21) < 0 gives LEP (k1 < 0).

    Raises:
        ValueError: when both amplitudes are zero.
    """
    if params.amp1 == 0.0 and params.amp2 == 0.0:
        raise ValueError("both amplitudes are zero; nothing to classify")
    if params.amp2 == 0.0:
        return PolarizationClass(
            "Degenerate", "single-mode light: linear oscillation along axis 1"
        )
    if params.amp1 == 0.0:
        return PolarizationClass(
            "Degenerate", "single-mode light: linear oscillation along axis 2"
        )

    delta = params.delta21
    if min(delta, abs(delta - math.pi), abs(delta - 2.0 * math.pi)) <= tol:
        branch = "pi" if abs(delta - math.pi) <= tol else "0"
        return PolarizationClass(
            "LP", f"delta21 = {branch} (mod pi), so k1 = 0"
        )

    equal_amps = abs(params.amp1 - params.amp2) <= tol * (params.amp1 + params.amp2)
    if abs(delta - 0.5 * math.pi) <= tol and equal_amps:
        return PolarizationClass(
            "CP", "delta21 = pi/2 with equal amplitudes: right circular, k1 > 0, k2 = 0"
        )
    if abs(delta - 1.5 * math.pi) <= tol and equal_amps:
        return PolarizationClass(
            "CP", "delta21 = 3*pi/2 with equal amplitudes: left circular, k1 < 0, k2 = 0"
        )

    if math.sin(delta) > 0.0:
        return PolarizationClass("REP", "0 < delta21 < pi, so k1 > 0")
    return PolarizationClass("LEP", "pi < delta21 < 2*pi, so k1 < 0")
