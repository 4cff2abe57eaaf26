"""Hyperbolic coordinates, the surface mesh, and region classification."""
import json
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from su11pol import (
    MESH_CSV_HEADER,
    FieldParams,
    HyperboloidCoords,
    chi_from_params,
    classify,
    coords_to_stokes,
    hyperboloid_coords,
    principal_axes,
    psi_from_params,
    stokes_like,
    surface_mesh,
)

amps = st.floats(min_value=0.05, max_value=2.0, allow_nan=False)
phases = st.floats(min_value=0.0, max_value=2.0 * math.pi, allow_nan=False)


def params_from_atilde(at1: float, at2: float, delta: float) -> FieldParams:
    return FieldParams(amp1=at1 / 2.0, amp2=at2 / 2.0, phi1=0.0, phi2=delta)


# ---------------------------------------------------------------- coordinates


def test_psi_hand_value():
    p = params_from_atilde(2.0, 1.0, 0.0)
    assert psi_from_params(p) == pytest.approx(0.5 * math.atanh(-0.8), rel=1e-14)


def test_chi_hand_value():
    p = params_from_atilde(2.0, 1.0, math.pi / 2.0)
    assert chi_from_params(p) == pytest.approx(0.5 * math.asinh(-4.0 / 3.0), rel=1e-14)


def test_psi_zero_at_quadrature():
    # cos(delta) ~ 1e-16 leaves a rounding-sized argument
    p = params_from_atilde(2.0, 1.0, math.pi / 2.0)
    assert abs(psi_from_params(p)) < 1e-15


def test_chi_zero_on_linear_lines():
    for delta in (0.0, math.pi):
        p = params_from_atilde(1.4, 0.6, delta)
        assert chi_from_params(p) == 0.0


def test_equal_amplitudes_push_psi_to_infinity():
    p = params_from_atilde(1.0, 1.0, 0.0)
    assert psi_from_params(p) == -math.inf
    p = params_from_atilde(1.0, 1.0, math.pi)
    assert psi_from_params(p) == math.inf


def test_circular_limit_pushes_chi_to_infinity():
    p = params_from_atilde(1.0, 1.0, math.pi / 2.0)
    assert chi_from_params(p) == -math.inf
    p = params_from_atilde(1.0, 1.0, 1.5 * math.pi)
    assert chi_from_params(p) == math.inf


def test_zero_field_has_no_coordinates():
    empty = FieldParams(amp1=0.0, amp2=0.0)
    with pytest.raises(ValueError):
        psi_from_params(empty)
    with pytest.raises(ValueError):
        chi_from_params(empty)
    with pytest.raises(ValueError):
        classify(empty)


def test_coords_bundle_flags_and_branch():
    coords = hyperboloid_coords(params_from_atilde(2.0, 1.0, 1.0))
    assert coords.chi_finite and coords.psi_finite
    assert coords.branch_sign == 1
    coords = hyperboloid_coords(params_from_atilde(1.0, 2.0, 1.0))
    assert coords.branch_sign == -1
    coords = hyperboloid_coords(params_from_atilde(1.0, 1.0, math.pi / 2.0))
    assert not coords.chi_finite


def test_round_trip_hand_point():
    p = params_from_atilde(2.0, 1.0, 1.0)
    direct = stokes_like(p)
    rebuilt = coords_to_stokes(hyperboloid_coords(p))
    assert rebuilt.k0 == pytest.approx(direct.k0, rel=1e-12)
    assert rebuilt.k1 == pytest.approx(direct.k1, rel=1e-12)
    assert rebuilt.k2 == pytest.approx(direct.k2, rel=1e-12)
    assert rebuilt.k3 == pytest.approx(direct.k3, rel=1e-12)
    assert rebuilt.delta21 == pytest.approx(p.delta21, rel=1e-12)


def test_round_trip_negative_branch():
    # amp2 > amp1 flips the k0 sign; the k1 slot must follow it
    p = params_from_atilde(0.8, 1.7, 2.5)
    direct = stokes_like(p)
    rebuilt = coords_to_stokes(hyperboloid_coords(p))
    assert direct.k0 < 0.0
    assert rebuilt.k0 == pytest.approx(direct.k0, rel=1e-12)
    assert rebuilt.k1 == pytest.approx(direct.k1, rel=1e-12)
    assert rebuilt.k2 == pytest.approx(direct.k2, rel=1e-12)


@given(
    at1=st.floats(min_value=0.3, max_value=2.0),
    gap=st.floats(min_value=1.15, max_value=2.5),
    delta=phases,
    flip=st.booleans(),
)
@settings(max_examples=150, deadline=None)
def test_round_trip_property(at1, gap, delta, flip):
    at2 = at1 * gap
    if flip:
        at1, at2 = at2, at1
    p = params_from_atilde(at1, at2, delta)
    direct = stokes_like(p)
    rebuilt = coords_to_stokes(hyperboloid_coords(p))
    for got, want in zip(
        (rebuilt.k0, rebuilt.k1, rebuilt.k2, rebuilt.k3),
        (direct.k0, direct.k1, direct.k2, direct.k3),
    ):
        assert abs(got - want) <= 1e-9 * max(1.0, abs(want))
    assert rebuilt.force_residual() == pytest.approx(0.0, abs=1e-9 * max(1.0, direct.k3**2))


def test_coords_to_stokes_rejects_limits():
    coords = hyperboloid_coords(params_from_atilde(1.0, 1.0, math.pi / 2.0))
    with pytest.raises(ValueError):
        coords_to_stokes(coords)
    bad = HyperboloidCoords(
        chi=0.1, psi=0.1, k0_abs=1.0, branch_sign=0, chi_finite=True, psi_finite=True
    )
    with pytest.raises(ValueError):
        coords_to_stokes(bad)


# ------------------------------------------------------------ principal axes


def test_principal_axes_hand_values():
    axes = principal_axes(params_from_atilde(2.0, 1.0, math.pi / 2.0))
    assert axes.a_sq == pytest.approx(4.0, rel=1e-12)
    assert axes.b_sq == pytest.approx(1.0, rel=1e-12)
    assert axes.a_sq_minus_b_sq == pytest.approx(3.0, rel=1e-12)
    assert axes.ab_signed == pytest.approx(2.0, rel=1e-12)


def test_principal_axes_undefined_in_linear_limit():
    with pytest.raises(ValueError):
        principal_axes(params_from_atilde(1.0, 1.0, 0.0))


@given(at1=amps, at2=amps, delta=phases)
@settings(max_examples=150, deadline=None)
def test_principal_axes_identities(at1, at2, delta):
    p = params_from_atilde(2.0 * at1, 2.0 * at2, delta)
    t1s, t2s = p.atilde1**2, p.atilde2**2
    # stay away from the infinite-psi boundary, where cosh(psi) amplifies
    # rounding beyond any fixed tolerance
    assume(2.0 * p.atilde1 * p.atilde2 * abs(math.cos(p.delta21)) < (1.0 - 1e-6) * (t1s + t2s))
    axes = principal_axes(p)
    t1, t2 = p.atilde1, p.atilde2
    assert axes.a_sq >= -1e-13
    assert axes.b_sq >= -1e-13
    assert axes.a_sq_minus_b_sq == pytest.approx(
        t1 * t1 - t2 * t2, rel=1e-10, abs=1e-10
    )
    # compare squares: near the linear limit b_sq is pure cancellation noise
    # and a square root would amplify it from 1e-14 up to 1e-7
    product_sq = max(axes.a_sq, 0.0) * max(axes.b_sq, 0.0)
    want_sq = (t1 * t2 * math.sin(p.delta21)) ** 2
    assert product_sq == pytest.approx(want_sq, rel=1e-6, abs=1e-9)


# ------------------------------------------------------------------- surface


def test_mesh_vertices_sit_on_one_sheet():
    mesh = surface_mesh(1.5)
    assert mesh.vertex_count == 41 * 41
    assert mesh.sheet_residual() <= 1e-12
    assert np.all(mesh.k3 >= mesh.k0_abs - 1e-15)


def test_mesh_apex_on_grid_for_odd_steps():
    for k0_abs in (0.3, 1.0, 1.5):
        mesh = surface_mesh(k0_abs)
        assert mesh.min_vertex_distance() == pytest.approx(k0_abs, abs=1e-13)


def test_mesh_follows_requested_signs():
    plus = surface_mesh(1.5, signs=(1, 1))
    row = plus.chi2 == plus.chi2_values[-1]
    assert np.allclose(plus.k1[row], 1.5 * math.sinh(0.4), rtol=1e-14)
    minus = surface_mesh(1.5, signs=(-1, -1))
    assert np.array_equal(minus.k1, -plus.k1)
    assert np.array_equal(minus.k2, -plus.k2)
    assert np.array_equal(minus.k3, plus.k3)


def test_mesh_rows_are_chi_major():
    mesh = surface_mesh(1.0, steps=(3, 5))
    assert mesh.vertex_count == 15
    # first block holds the lowest chi2 against all psi2 values
    assert np.array_equal(mesh.chi2[:5], np.repeat(mesh.chi2_values[0], 5))
    assert np.array_equal(mesh.psi2[:5], mesh.psi2_values)


def test_mesh_csv_layout_is_frozen():
    mesh = surface_mesh(1.5)
    lines = mesh.to_csv().splitlines()
    assert lines[0] == MESH_CSV_HEADER == "chi2,psi2,K1,K2,K3"
    assert lines[1] == "-0.4,-0.4,-0.6161284887042233,-0.6660794866407171,1.753076209728633"
    assert len(lines) == 1 + 41 * 41
    assert mesh.to_csv().endswith("\n")


def test_mesh_json_payload():
    mesh = surface_mesh(0.3, steps=(5, 7))
    payload = json.loads(json.dumps(mesh.to_json_payload()))
    assert payload["meta"]["k0_abs"] == 0.3
    assert payload["meta"]["steps"] == [5, 7]
    assert payload["meta"]["signs"] == [1, 1]
    assert payload["meta"]["chi2_range"] == [-0.4, 0.4]
    assert len(payload["vertices"]) == 35
    assert len(payload["vertices"][0]) == 5


def test_mesh_validation():
    with pytest.raises(ValueError):
        surface_mesh(0.0)
    with pytest.raises(ValueError):
        surface_mesh(-1.0)
    with pytest.raises(ValueError):
        surface_mesh(1.0, steps=(1, 5))
    with pytest.raises(ValueError):
        surface_mesh(1.0, chi2_range=(0.4, -0.4))
    with pytest.raises(ValueError):
        surface_mesh(1.0, signs=(2, 1))


# ------------------------------------------------------------ classification


def test_classify_degenerate_single_mode():
    assert classify(FieldParams(amp1=1.0, amp2=0.0)).tag == "Degenerate"
    assert classify(FieldParams(amp1=0.0, amp2=1.0)).tag == "Degenerate"


def test_classify_linear_on_phase_lines():
    assert classify(FieldParams(amp1=1.0, amp2=0.7, phi2=0.0)).tag == "LP"
    assert classify(FieldParams(amp1=1.0, amp2=0.7, phi2=math.pi)).tag == "LP"
    assert classify(FieldParams(amp1=1.0, amp2=0.7, phi2=2.0 * math.pi - 1e-12)).tag == "LP"
    assert classify(FieldParams(amp1=0.5, amp2=0.5, phi1=0.4, phi2=0.4 + math.pi)).tag == "LP"


def test_classify_circular_needs_equal_amplitudes():
    assert classify(FieldParams(amp1=0.8, amp2=0.8, phi2=math.pi / 2.0)).tag == "CP"
    assert classify(FieldParams(amp1=0.8, amp2=0.8, phi2=1.5 * math.pi)).tag == "CP"
    assert classify(FieldParams(amp1=0.8, amp2=0.4, phi2=math.pi / 2.0)).tag == "REP"
    assert classify(FieldParams(amp1=0.8, amp2=0.4, phi2=1.5 * math.pi)).tag == "LEP"


def test_classify_elliptic_regions_follow_k1_sign():
    rep = FieldParams(amp1=1.0, amp2=0.5, phi2=0.3)
    lep = FieldParams(amp1=1.0, amp2=0.5, phi2=5.0)
    assert classify(rep).tag == "REP"
    assert stokes_like(rep).k1 > 0.0
    assert classify(lep).tag == "LEP"
    assert stokes_like(lep).k1 < 0.0


def test_classify_tolerance_window():
    almost_equal = FieldParams(amp1=1.0, amp2=1.0 + 1e-10, phi2=math.pi / 2.0)
    assert classify(almost_equal).tag == "CP"
    assert classify(FieldParams(amp1=1.0, amp2=0.9, phi2=1e-10)).tag == "LP"


@given(amp1=amps, amp2=amps, phi1=phases, phi2=phases)
@settings(max_examples=200, deadline=None)
def test_classify_total_and_consistent(amp1, amp2, phi1, phi2):
    p = FieldParams(amp1=amp1, amp2=amp2, phi1=phi1, phi2=phi2)
    region = classify(p)
    assert region.tag in {"Degenerate", "LP", "CP", "REP", "LEP"}
    k1 = stokes_like(p).k1
    if region.tag == "REP":
        assert k1 > 0.0
    elif region.tag == "LEP":
        assert k1 < 0.0
    elif region.tag == "LP":
        assert abs(k1) <= 2e-9 * max(1.0, amp1 * amp2)
