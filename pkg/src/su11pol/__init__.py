"""Hyperbolic (su(1,1)) description of light polarization.

Quantum side: truncated two-mode Fock operators built through the
Jordan-Schwinger map, with numerical verification of the generator algebra.
Classical side: coherent-state limits, Stokes-like parameters, the
polarization ellipse, and the Poincare hyperboloid with its LP/CP/REP/LEP
regions.
"""

from .coherent import (
    CoherentState,
    CrosscheckReport,
    KExpectations,
    TruncationError,
    build_coherent,
    crosscheck,
    default_crosscheck_grid,
    expectations_analytic,
    expectations_exact,
    expectations_numeric,
    run_crosscheck_grid,
)
from .ellipse import (
    SAMPLES_CSV_HEADER,
    EllipseQuadratic,
    EllipseStokesForm,
    FieldSample,
    ScaleReport,
    ab_coefficients,
    build_quadratic,
    max_residual,
    proportionality_report,
    quadratic_in_stokes,
    residual,
    sample_curve,
    sample_field,
)
from .fock import (
    AlgebraCheck,
    AlgebraReport,
    FockBasis,
    FockOperator,
    LadderOperators,
    SafeSubspace,
    SU11Generators,
    build_hamiltonian,
    build_ladder,
    build_su11,
    casimir,
    commutator,
    identity_operator,
    verify_algebra,
)
from .hyperboloid import (
    MESH_CSV_HEADER,
    HyperboloidCoords,
    PolarizationClass,
    PrincipalAxes,
    SurfaceMesh,
    chi_from_params,
    classify,
    coords_to_stokes,
    hyperboloid_coords,
    principal_axes,
    psi_from_params,
    surface_mesh,
)
from .params import FieldParams, canonical_phase
from .stokes import (
    CSV_HEADER,
    StokesLike,
    stokes_from_expectations,
    stokes_like,
    verify_force_identity,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "MESH_CSV_HEADER",
    "SAMPLES_CSV_HEADER",
    "AlgebraCheck",
    "AlgebraReport",
    "CoherentState",
    "CrosscheckReport",
    "EllipseQuadratic",
    "EllipseStokesForm",
    "FieldParams",
    "FieldSample",
    "FockBasis",
    "FockOperator",
    "HyperboloidCoords",
    "KExpectations",
    "LadderOperators",
    "PolarizationClass",
    "PrincipalAxes",
    "SafeSubspace",
    "ScaleReport",
    "StokesLike",
    "SU11Generators",
    "SurfaceMesh",
    "TruncationError",
    "ab_coefficients",
    "build_coherent",
    "build_hamiltonian",
    "build_ladder",
    "build_quadratic",
    "build_su11",
    "canonical_phase",
    "casimir",
    "chi_from_params",
    "classify",
    "commutator",
    "coords_to_stokes",
    "crosscheck",
    "default_crosscheck_grid",
    "expectations_analytic",
    "expectations_exact",
    "expectations_numeric",
    "hyperboloid_coords",
    "identity_operator",
    "max_residual",
    "principal_axes",
    "proportionality_report",
    "psi_from_params",
    "quadratic_in_stokes",
    "residual",
    "run_crosscheck_grid",
    "sample_curve",
    "sample_field",
    "stokes_from_expectations",
    "stokes_like",
    "surface_mesh",
    "verify_algebra",
    "verify_force_identity",
    "__version__",
]
