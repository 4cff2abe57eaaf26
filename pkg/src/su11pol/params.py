"""Classical field parameters shared by all computation layers."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


def canonical_phase(angle: float) -> float:
    """Reduce an angle in radians to the canonical interval [0, 2*pi)."""
    reduced = math.fmod(angle, TWO_PI)
    if reduced < 0.0:
        reduced += TWO_PI
    if reduced >= TWO_PI:
        # a tiny negative angle lands exactly on 2*pi after the shift
        reduced = 0.0
    return reduced


@dataclass(frozen=True)
class FieldParams:
    """Monochromatic two-component field description.

    Attributes:
        amp1: Nonnegative amplitude of the first mode.
        amp2: Nonnegative amplitude of the second mode.
        phi1: Phase of the first mode, radians.
        phi2: Phase of the second mode, radians.
        omega: Angular frequency, must be positive.
        wavenumber: Spatial wave number; enters only through the
            propagation phase tau = omega*t - wavenumber*z.
    """

    amp1: float
    amp2: float
    phi1: float = 0.0
    phi2: float = 0.0
    omega: float = 1.0
    wavenumber: float = 1.0

    def __post_init__(self) -> None:
        for name in ("amp1", "amp2", "phi1", "phi2", "omega", "wavenumber"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.amp1 < 0.0 or self.amp2 < 0.0:
            raise ValueError("amplitudes must be nonnegative")
        if self.omega <= 0.0:
            raise ValueError("omega must be positive")

    @property
    def delta21(self) -> float:
        """Phase difference phi2 - phi1, canonicalized to [0, 2*pi)."""
        return canonical_phase(self.phi2 - self.phi1)

    @property
    def sigma21(self) -> float:
        """Phase sum phi1 + phi2; appears only in time-dependent expectations."""
        return self.phi1 + self.phi2

    @property
    def atilde1(self) -> float:
        """Peak transverse field amplitude of the first component, 2*amp1."""
        return 2.0 * self.amp1

    @property
    def atilde2(self) -> float:
        """Peak transverse field amplitude of the second component, 2*amp2."""
        return 2.0 * self.amp2

    def alphas(self, t: float = 0.0) -> tuple[complex, complex]:
        """Complex mode amplitudes alpha_i(t) = amp_i * exp(-i*(omega*t - phi_i))."""
        phase1 = cmath.exp(-1j * (self.omega * t - self.phi1))
        phase2 = cmath.exp(-1j * (self.omega * t - self.phi2))
        return self.amp1 * phase1, self.amp2 * phase2
