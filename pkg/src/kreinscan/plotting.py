"""Static figures for the ``spectrum`` and ``region`` reports.

Uses :class:`matplotlib.figure.Figure` directly so nothing touches pyplot
state or needs a display.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import numpy as np
from matplotlib.figure import Figure

from kreinscan.dispersion import ComovingDispersion
from kreinscan.models import RegimeThresholds, SweepCell
from kreinscan.oracle import spectrum_slice


def plot_spectrum(cd: ComovingDispersion, mu_values: Sequence[float], ns: Sequence[int], path, title: str = "") -> Path:
    """One curve per ``n`` over mu_tilde in (-1/2, 1/2]; requested slices marked."""
    fig = Figure(figsize=(6.4, 4.8))
    ax = fig.subplots()
    grid = np.linspace(-0.5, 0.5, 201)
    if ns:
        curves = np.array([spectrum_slice(cd, mt, ns).values for mt in grid])
        for i, n in enumerate(ns):
            line = ax.plot(grid, curves[:, i], lw=0.8)[0]
            ax.annotate(str(n), (grid[-1], curves[-1, i]), fontsize=7, color=line.get_color())
        for mt in mu_values:
            ax.plot(np.full(len(ns), mt), spectrum_slice(cd, mt, ns).values, "k.", ms=4)
            ax.axvline(mt, color="0.7", lw=0.6, ls=":")
    ax.set_xlabel(r"$\tilde\mu$")
    ax.set_ylabel(r"Im $\lambda$")
    if title:
        ax.set_title(title)
    path = Path(path)
    fig.savefig(path, dpi=120)
    return path


def plot_region(cells: Sequence[SweepCell], thresholds: Sequence[RegimeThresholds], path, title: str = "") -> Path:
    """Threshold curves in the (dn, beta) plane with opposite-signature cells as dashed segments."""
    fig = Figure(figsize=(6.4, 4.8))
    ax = fig.subplots()
    dns = [t.dn for t in thresholds]
    ax.plot(dns, [float(t.beta0) for t in thresholds], "o-", ms=3, label=r"$\beta_0$")
    ax.plot(dns, [float(t.beta_quarter) for t in thresholds], "s-", ms=3, label=r"$\beta_{-1/4}$")
    for dn in sorted({c.dn for c in cells}):
        betas = sorted(float(c.beta) for c in cells if c.dn == dn and c.regime.value == "opposite")
        if betas:
            ax.plot([dn, dn], [betas[0], betas[-1]], "k--", lw=1.2)
    ax.set_xlabel(r"$\Delta n$")
    ax.set_ylabel(r"$\beta$")
    ax.legend()
    if title:
        ax.set_title(title)
    path = Path(path)
    fig.savefig(path, dpi=120)
    return path
