"""Truncated two-mode coherent states and their generator expectation values.

The closed-form classical limits of the generator expectations are compared
against the same quantities evaluated numerically in the truncated basis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .fock import FockBasis, SU11Generators, build_su11
from .params import FieldParams

# probability mass allowed beyond the cutoff before a crosscheck refuses to run
NORM_DEFICIT_LIMIT = 1e-10

DEFAULT_CROSSCHECK_N_MAX = 40


class TruncationError(RuntimeError):
    """The cutoff is too small for the requested amplitudes."""


@dataclass(frozen=True)
class CoherentState:
    """Truncated two-mode coherent state with its actual (sub-unit) norm."""

    basis: FockBasis
    vector: np.ndarray
    alpha1: complex
    alpha2: complex
    norm: float

    @property
    def norm_deficit(self) -> float:
        """Probability mass lost to the cutoff, 1 - norm^2."""
        return 1.0 - self.norm * self.norm


@dataclass(frozen=True)
class KExpectations:
    """Generator expectation values <k0>, <k1>, <k2>, <k3>."""

    k0: float
    k1: float
    k2: float
    k3: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.k0, self.k1, self.k2, self.k3)


def _mode_amplitudes(alpha: complex, n_max: int) -> np.ndarray:
    """Coefficients alpha^n / sqrt(n!) for n = 0..n_max, via log-gamma.

    The logarithmic route keeps the factorials finite for any cutoff.
    """
    coeffs = np.zeros(n_max + 1, dtype=np.complex128)
    if alpha == 0:
        coeffs[0] = 1.0
        return coeffs
    n = np.arange(n_max + 1)
    log_mag = n * math.log(abs(alpha)) - 0.5 * gammaln(n + 1.0)
    phase = n * np.angle(alpha)
    coeffs[:] = np.exp(log_mag) * np.exp(1j * phase)
    return coeffs


def build_coherent(basis: FockBasis, params: FieldParams, t: float = 0.0) -> CoherentState:
    """Build the truncated coherent state for alpha_i(t).

    Components are exp(-(|a1|^2+|a2|^2)/2) * a1^n1 a2^n2 / sqrt(n1! n2!).
    The vector is returned unnormalized so the caller can see the truncation
    loss through the stored norm.
    """
    alpha1, alpha2 = params.alphas(t)
    prefactor = math.exp(-0.5 * (abs(alpha1) ** 2 + abs(alpha2) ** 2))
    vector = prefactor * np.outer(
        _mode_amplitudes(alpha1, basis.n_max),
        _mode_amplitudes(alpha2, basis.n_max),
    ).ravel()
    return CoherentState(
        basis, vector, alpha1, alpha2, float(np.linalg.norm(vector))
    )


def expectations_numeric(state: CoherentState, gens: SU11Generators) -> KExpectations:
    """Expectation values <v|k_i|v> / <v|v> in the truncated state.

    Normalizing by the actual truncated norm isolates the operator identity
    under test from the truncation of the state itself.
    """
    if state.basis != gens.basis:
        raise ValueError("state and generators use different bases")
    denom = float(np.vdot(state.vector, state.vector).real)
    if denom == 0.0:
        raise ValueError("state vector has zero norm")
    values = []
    for op in gens.as_tuple():
        form = np.vdot(state.vector, op.apply(state.vector))
        if abs(form.imag) > 1e-10 * max(1.0, abs(form.real)):
            raise ValueError(
                f"quadratic form has imaginary part {form.imag:.3e}; "
                "operator is not Hermitian on this state"
            )
        values.append(float(form.real / denom))
    return KExpectations(*values)


def expectations_analytic(params: FieldParams, t: float = 0.0) -> KExpectations:
    """Closed-form classical limits of the generator expectations.

    k0 and k3 are time independent; k1 and k2 rotate with phase
    2*omega*t - sigma21 where sigma21 = phi1 + phi2.

    These are the constant-free classical forms the polarization pipeline
    consumes. The operator expectations differ by fixed vacuum offsets
    (see expectations_exact): k0 contains a2 a2^dag = a2^dag a2 + 1, so the
    operator value sits exactly 1/2 below the classical one, and k3 sits
    exactly 1/2 above.
    """
    product = params.amp1 * params.amp2
    angle = 2.0 * params.omega * t - params.sigma21
    return KExpectations(
        k0=0.5 * (params.amp1**2 - params.amp2**2),
        k1=product * math.cos(angle),
        k2=product * math.sin(angle),
        k3=0.5 * (params.amp1**2 + params.amp2**2),
    )


def expectations_exact(params: FieldParams, t: float = 0.0) -> KExpectations:
    """Exact coherent-state expectations of the generators, offsets included.

    Identical to expectations_analytic except for the ordering constants:
    <a2 a2^dag> = amp2^2 + 1 shifts k0 down and k3 up by one half. At zero
    amplitude this reproduces the vacuum values (-1/2, 0, 0, +1/2), which is
    what the truncated matrices yield, so this is the right comparison
    target for the numeric crosscheck.
    """
    classical = expectations_analytic(params, t)
    return KExpectations(
        k0=classical.k0 - 0.5,
        k1=classical.k1,
        k2=classical.k2,
        k3=classical.k3 + 0.5,
    )


@dataclass(frozen=True)
class CrosscheckReport:
    """Per-component disagreement between numeric and analytic expectations."""

    params: FieldParams
    t: float
    n_max: int
    deviations: dict[str, float]
    tolerance: float
    passed: bool
    norm_deficit: float

    def to_json_payload(self) -> dict:
        return {
            "params": {
                "amp1": self.params.amp1,
                "amp2": self.params.amp2,
                "phi1": self.params.phi1,
                "phi2": self.params.phi2,
                "omega": self.params.omega,
                "t": self.t,
                "n_max": self.n_max,
            },
            "deviations": dict(self.deviations),
            "tolerance": self.tolerance,
            "passed": self.passed,
            "norm_deficit": self.norm_deficit,
        }


def crosscheck(
    params: FieldParams,
    basis: FockBasis | None = None,
    tol: float = 1e-8,
    t: float = 0.0,
    *,
    gens: SU11Generators | None = None,
) -> CrosscheckReport:
    """Compare numeric expectations against the exact closed forms.

    The comparison target is expectations_exact, which keeps the vacuum
    offsets on k0 and k3; the constant-free classical forms would disagree
    by exactly one half on those components at any amplitude.

    Raises:
        TruncationError: when the cutoff loses more probability mass than
            NORM_DEFICIT_LIMIT, which would contaminate the comparison.
    """
    if gens is not None:
        basis = gens.basis
    elif basis is None:
        basis = FockBasis(DEFAULT_CROSSCHECK_N_MAX)
    state = build_coherent(basis, params, t)
    if state.norm_deficit > NORM_DEFICIT_LIMIT:
        raise TruncationError(
            f"norm deficit {state.norm_deficit:.3e} exceeds {NORM_DEFICIT_LIMIT:.1e} "
            f"at n_max={basis.n_max}; raise the cutoff or lower the amplitudes"
        )
    if gens is None:
        gens = build_su11(basis, sparse=True)
    numeric = expectations_numeric(state, gens)
    exact = expectations_exact(params, t)
    deviations = {
        name: float(abs(got - want))
        for name, got, want in zip(
            ("k0", "k1", "k2", "k3"), numeric.as_tuple(), exact.as_tuple()
        )
    }
    return CrosscheckReport(
        params=params,
        t=t,
        n_max=basis.n_max,
        deviations=deviations,
        tolerance=tol,
        passed=all(dev <= tol for dev in deviations.values()),
        norm_deficit=state.norm_deficit,
    )


def default_crosscheck_grid() -> list[tuple[FieldParams, float]]:
    """Deterministic sweep of 90 parameter points with amplitudes <= 1."""
    amps = (0.25, 0.6, 1.0)
    phases = (0.0, math.pi / 3.0, math.pi / 2.0, math.pi, 3.0 * math.pi / 2.0)
    times = (0.0, 0.4)
    grid = []
    for amp1 in amps:
        for amp2 in amps:
            for phi2 in phases:
                for t in times:
                    grid.append(
                        (FieldParams(amp1=amp1, amp2=amp2, phi1=0.3, phi2=phi2), t)
                    )
    return grid


def run_crosscheck_grid(
    n_max: int = DEFAULT_CROSSCHECK_N_MAX, tol: float = 1e-8
) -> list[CrosscheckReport]:
    """Run the default sweep against one shared sparse generator set."""
    gens = build_su11(FockBasis(n_max), sparse=True)
    return [crosscheck(p, tol=tol, t=t, gens=gens) for p, t in default_crosscheck_grid()]
