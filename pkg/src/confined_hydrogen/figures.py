"""Render the exported curve data to image files.

The CSV emitted by the CLI is the primary artefact; these helpers draw
the same rows with matplotlib so a report directory gets a figure next to
each data file.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_energy_curves(rows: list[dict], path: str, dpi: int = 150) -> None:
    """Ground-state energy vs coupling for all five methods."""
    lam = [row["lambda"] for row in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    ax.plot(lam, [r["eps_moving_sinc"] for r in rows], "o", ms=3.5,
            mfc="none", color="C0", label="moving, sinc state")
    ax.plot(lam, [r["eps_moving_poly"] for r in rows], "-", color="C1",
            label="moving, polynomial state")
    ax.plot(lam, [r["eps_clamped_poly"] for r in rows], "--", color="C2",
            label="clamped, polynomial state")
    ax.plot(lam, [r["eps_clamped_sinc"] for r in rows], "s", ms=3.0,
            mfc="none", color="C3", label="clamped, sinc state")
    ax.plot(lam, [r["eps_clamped_series"] for r in rows], ".", color="k",
            label="clamped, series (exact)")
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_xlabel(r"coupling $\lambda$")
    ax.set_ylabel(r"ground-state energy $\epsilon$")
    ax.legend(frameon=False, fontsize=9)
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)


def render_scaled_energy_curves(rows: list[dict], path: str, dpi: int = 150) -> None:
    """eps / lambda^2 for the two trial families plus the free-atom line."""
    lam = [row["lambda"] for row in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    ax.plot(lam, [r["eps_over_lambda2_poly"] for r in rows], "--", color="C2",
            label="polynomial state")
    ax.plot(lam, [r["eps_over_lambda2_variational"] for r in rows], "-",
            color="C0", label="variational")
    ax.axhline(rows[0]["asymptote"], color="gray", lw=0.8,
               label="free-atom limit")
    ax.set_xlabel(r"coupling $\lambda$")
    ax.set_ylabel(r"$\epsilon / \lambda^2$")
    ax.legend(frameon=False, fontsize=9)
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
