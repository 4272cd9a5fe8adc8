#!/usr/bin/env python3
"""Plot the sweep CSVs produced by the qvar CLI.

Usage:
    cargo run -p qvar --release -- sweep-fig1 --steps 200 --out fig1.csv
    cargo run -p qvar --release -- sweep-fig2 --theta-steps 100 --phi-steps 100 --out fig2.csv
    python3 scripts/plot_sweeps.py fig1.csv fig2.csv out/

This script is documentation, not a tested component; it needs matplotlib
and numpy.
"""
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np


def load(path):
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        rows = list(reader)
    return {k: np.array([float(r[k]) for r in rows]) for k in reader.fieldnames}


def plot_fig1(data, out):
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.plot(data["theta"], data["sv"], "r-", label="SV")
    ax.plot(data["theta"], data["lb_new"], "k-", label="LB")
    ax.plot(data["theta"], data["fb_chen"], "g-", label="FB")
    ax.plot(data["theta"], data["pb1_plus"], "g--", label="PB1")
    ax.plot(data["theta"], data["pb2_minus"], "b-", label="PB2")
    ax.set_xlabel(r"$\theta$")
    ax.set_ylabel("variance sum and lower bounds")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(out / "fig1.png", dpi=150)


def plot_fig2(data, out):
    theta = np.unique(data["theta"])
    phi = np.unique(data["phi"])
    shape = (len(theta), len(phi))

    def grid(col):
        return data[col].reshape(shape)

    panels = [
        ("diff_lb_fb", "LB - FB"),
        ("diff_lb_pb2", "LB - PB2"),
        ("diff_fb_pb2", "FB - PB2"),
    ]
    fig, axes = plt.subplots(1, 3, figsize=(13, 3.6))
    for ax, (col, title) in zip(axes, panels):
        im = ax.pcolormesh(phi, theta, grid(col), shading="auto", cmap="viridis")
        ax.set_xlabel(r"$\phi$")
        ax.set_ylabel(r"$\theta$")
        ax.set_title(title)
        fig.colorbar(im, ax=ax)
    fig.tight_layout()
    fig.savefig(out / "fig2_panels.png", dpi=150)

    # slice at the phi value closest to pi/4, the single-slice panel
    j = int(np.argmin(np.abs(phi - np.pi / 4)))
    fig, ax = plt.subplots(figsize=(5, 4))
    for col, style, label in [
        ("sv", "r-", "SV"),
        ("lb_new", "k-", "LB"),
        ("fb_chen", "g-", "FB"),
        ("pb1_plus", "g--", "PB1"),
        ("pb2_minus", "b-", "PB2"),
    ]:
        ax.plot(theta, grid(col)[:, j], style, label=label)
    ax.set_xlabel(r"$\theta$")
    ax.set_title(rf"$\phi \approx {phi[j]:.4f}$")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(out / "fig2_slice.png", dpi=150)


def main():
    if len(sys.argv) != 4:
        sys.exit(__doc__)
    out = Path(sys.argv[3])
    out.mkdir(parents=True, exist_ok=True)
    plot_fig1(load(sys.argv[1]), out)
    plot_fig2(load(sys.argv[2]), out)
    print(f"wrote plots to {out}/")


if __name__ == "__main__":
    main()
