"""Time-independent Stokes-like parameters on the hyperbolic signature.

The four parameters carry the intensity scale of the squared amplitudes and
satisfy k3^2 - k0^2 = k1^2 + k2^2 instead of the spherical sum rule, which is
what places polarization states on a hyperboloid rather than a sphere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .coherent import KExpectations
from .params import FieldParams, canonical_phase

CSV_HEADER = "k0,k1,k2,k3,delta21"


@dataclass(frozen=True)
class StokesLike:
    """Stokes-like parameters plus the phase difference they encode.

    k1 carries sin(delta21) and k2 carries cos(delta21); the assignment is
    fixed here once and for all so serialized output is reproducible.
    """

    k0: float
    k1: float
    k2: float
    k3: float
    delta21: float

    def __post_init__(self) -> None:
        if self.k3 < 0.0:
            raise ValueError("k3 is a sum of squared amplitudes and cannot be negative")

    def force_residual(self) -> float:
        """Defect of the hyperboloid identity k3^2 - k0^2 - k1^2 - k2^2."""
        return (
            self.k3 * self.k3
            - self.k0 * self.k0
            - self.k1 * self.k1
            - self.k2 * self.k2
        )

    def to_json_payload(self) -> dict:
        return {
            "k0": self.k0,
            "k1": self.k1,
            "k2": self.k2,
            "k3": self.k3,
            "delta21": self.delta21,
        }

    def csv_row(self) -> str:
        return f"{self.k0!r},{self.k1!r},{self.k2!r},{self.k3!r},{self.delta21!r}"


def stokes_like(params: FieldParams) -> StokesLike:
    """Stokes-like parameters straight from the field parameters.

    k0 = (amp1^2 - amp2^2)/2, k1 = amp1*amp2*sin(delta21),
    k2 = amp1*amp2*cos(delta21), k3 = (amp1^2 + amp2^2)/2.

    The transverse magnitude amp1*amp2 is used symbolically rather than via
    time-dependent expectations, so the result is manifestly independent of
    t and omega. For single-mode light (amp1*amp2 = 0) the phase difference
    is physically undefined; it is reported as supplied and k1 = k2 = 0.
    """
    delta = params.delta21
    product = params.amp1 * params.amp2
    return StokesLike(
        k0=0.5 * (params.amp1**2 - params.amp2**2),
        k1=product * math.sin(delta),
        k2=product * math.cos(delta),
        k3=0.5 * (params.amp1**2 + params.amp2**2),
        delta21=delta,
    )


def stokes_from_expectations(expectations: KExpectations, delta21: float) -> StokesLike:
    """Stokes-like parameters from generator expectation values.

    The transverse magnitude sqrt(k1^2 + k2^2) of the expectations is
    redistributed over (sin, cos) of the supplied phase difference.

    Raises:
        ValueError: when the expectations violate the hyperboloid identity by
            more than 1e-6 relative, which signals corrupted input.
    """
    lhs = expectations.k3**2 - expectations.k0**2
    rhs = expectations.k1**2 + expectations.k2**2
    if abs(lhs - rhs) > 1e-6 * max(1.0, expectations.k3**2):
        raise ValueError(
            f"expectations violate k3^2 - k0^2 = k1^2 + k2^2 "
            f"({lhs!r} vs {rhs!r}); refusing to build Stokes-like parameters"
        )
    delta = canonical_phase(delta21)
    magnitude = math.hypot(expectations.k1, expectations.k2)
    return StokesLike(
        k0=expectations.k0,
        k1=magnitude * math.sin(delta),
        k2=magnitude * math.cos(delta),
        k3=expectations.k3,
        delta21=delta,
    )


def verify_force_identity(s: StokesLike, tol: float = 1e-12) -> bool:
    """True iff the hyperboloid identity holds within tol, relative to k3^2."""
    return abs(s.force_residual()) <= tol * max(1.0, s.k3 * s.k3)
