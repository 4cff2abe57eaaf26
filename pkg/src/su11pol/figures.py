"""Figure rendering for the report bundle.

Imported only by the report subcommand; the headless Agg backend is forced
here so data-only invocations never depend on a display. PNG metadata is
stripped so reruns of the same configuration are byte identical.
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .ellipse import sample_curve
from .hyperboloid import SurfaceMesh
from .params import FieldParams

_SAVE_KWARGS = {"dpi": 150, "metadata": {"Software": None}}


def _surface_grids(mesh: SurfaceMesh) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    shape = (mesh.chi2_values.size, mesh.psi2_values.size)
    return mesh.k1.reshape(shape), mesh.k2.reshape(shape), mesh.k3.reshape(shape)


def render_hyperboloid_family(meshes: list[SurfaceMesh], path: Path) -> None:
    """Nested polarization sheets, one per |k0| scale."""
    fig = plt.figure(figsize=(7.0, 6.0))
    ax = fig.add_subplot(projection="3d")
    colors = ("tab:blue", "tab:orange", "tab:green")
    for mesh, color in zip(meshes, colors):
        k1, k2, k3 = _surface_grids(mesh)
        ax.plot_surface(k1, k2, k3, color=color, alpha=0.55, linewidth=0)
        ax.plot([0.0], [0.0], [mesh.k0_abs], marker="o", color=color, markersize=4)
        ax.text(0.0, 0.0, mesh.k0_abs, f"  |k0|={mesh.k0_abs:g}", fontsize=8)
    ax.set_xlabel("K1")
    ax.set_ylabel("K2")
    ax.set_zlabel("K3")
    ax.set_title("Polarization sheets by |k0|; each apex sits |k0| above the origin")
    ax.view_init(elev=18.0, azim=-60.0)
    fig.savefig(path, **_SAVE_KWARGS)
    plt.close(fig)


def render_polarization_regions(mesh: SurfaceMesh, path: Path) -> None:
    """One sheet colored by region, with the LP and CP curves drawn on it."""
    k1, k2, k3 = _surface_grids(mesh)
    fig = plt.figure(figsize=(7.0, 6.0))
    ax = fig.add_subplot(projection="3d")
    # right half (k1 > 0) is REP, left half is LEP
    facecolors = np.where(
        (k1[:-1, :-1] + k1[1:, 1:]) > 0.0, "lightsalmon", "lightsteelblue"
    )
    ax.plot_surface(k1, k2, k3, facecolors=facecolors, alpha=0.7, linewidth=0, shade=False)

    mid_chi = mesh.chi2_values.size // 2
    mid_psi = mesh.psi2_values.size // 2
    # chi2 = 0 gives k1 = 0: the LP curve; psi2 = 0 gives k2 = 0: the CP curve
    ax.plot(k1[mid_chi, :], k2[mid_chi, :], k3[mid_chi, :],
            color="black", linewidth=2.0, label="LP (k1 = 0)")
    ax.plot(k1[:, mid_psi], k2[:, mid_psi], k3[:, mid_psi],
            color="purple", linewidth=2.0, label="CP (k2 = 0)")
    ax.text(k1.max(), 0.0, k3.max(), "REP", color="darkred", fontsize=10)
    ax.text(k1.min(), 0.0, k3.max(), "LEP", color="darkblue", fontsize=10)
    ax.set_xlabel("K1")
    ax.set_ylabel("K2")
    ax.set_zlabel("K3")
    ax.set_title(f"Polarization regions on the |k0|={mesh.k0_abs:g} sheet")
    ax.legend(loc="upper left", fontsize=8)
    ax.view_init(elev=18.0, azim=-60.0)
    fig.savefig(path, **_SAVE_KWARGS)
    plt.close(fig)


def render_ellipse(params: FieldParams, path: Path) -> None:
    """The transverse field trajectory over one period."""
    _, e1, e2 = sample_curve(params, 512)
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    ax.plot(np.append(e1, e1[0]), np.append(e2, e2[0]), color="tab:blue")
    ax.axhline(0.0, color="gray", linewidth=0.5)
    ax.axvline(0.0, color="gray", linewidth=0.5)
    ax.set_xlabel("E1")
    ax.set_ylabel("E2")
    ax.set_title(
        f"Polarization curve: amp1={params.amp1:g}, amp2={params.amp2:g}, "
        f"delta21={params.delta21:.4f}"
    )
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KWARGS)
    plt.close(fig)
