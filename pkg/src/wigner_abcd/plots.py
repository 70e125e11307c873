"""Figure rendering for the CLI report paths.

Each function takes the same rows that go into the delimited output and
writes one PNG/PDF (any extension matplotlib understands) to the given
path.  matplotlib is imported lazily with the Agg backend so that library
users without a display never touch it.
"""

from __future__ import annotations

import math

_BRANCH_COLORS = {
    "circular": "tab:blue",
    "hyperbolic": "tab:red",
    "parabolic": "tab:green",
    "Circular": "tab:blue",
    "Hyperbolic": "tab:red",
    "ParabolicLower": "tab:green",
    "ParabolicUpper": "tab:olive",
    "Scalar": "tab:gray",
}


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, path):
    fig.savefig(path, dpi=150, bbox_inches="tight")
    _pyplot().close(fig)


def plot_regions(thetas, labels, path):
    """Branch regions over the generator angle: diagonal entry at r = 1 plus labels."""
    from .expform import ExpForm, exp_closed

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    diag = [exp_closed(ExpForm(1.0, t))[0, 0] for t in thetas]
    for label in dict.fromkeys(labels):
        xs = [t for t, l in zip(thetas, labels) if l == label]
        ys = [d for d, l in zip(diag, labels) if l == label]
        ax.plot(xs, ys, "o", ms=4, color=_BRANCH_COLORS.get(label, "k"), label=label)
    ax.axhline(1.0, color="0.6", lw=0.8)
    for line in (-math.pi / 4, math.pi / 4):
        ax.axvline(line, color="0.6", lw=0.8, ls="--")
    ax.set_xlabel(r"generator angle $\theta$ [rad]")
    ax.set_ylabel("diagonal entry at r = 1")
    ax.legend(frameon=False)
    _save(fig, path)


def plot_trajectory(samples, path):
    """Field components and attenuation envelope against distance."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    z = [s["z"] for s in samples]
    ax.plot(z, [s["ex"] for s in samples], label=r"$E_x$")
    ax.plot(z, [s["ey"] for s in samples], label=r"$E_y$")
    env = [s["envelope"] for s in samples]
    ax.plot(z, env, "k--", lw=1, label="envelope")
    ax.plot(z, [-e for e in env], "k--", lw=1)
    ax.set_xlabel("z")
    ax.set_ylabel("field amplitude")
    ax.legend(frameon=False)
    _save(fig, path)


def plot_cavity_trace(rows, path):
    """Round-trip trace against trip count, with the |trace| = 2 stability band."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot([r["n"] for r in rows], [r["trace"] for r in rows], "o-", ms=3)
    ax.axhline(2.0, color="0.6", lw=0.8, ls="--")
    ax.axhline(-2.0, color="0.6", lw=0.8, ls="--")
    ax.set_xlabel("round trips")
    ax.set_ylabel("trace")
    _save(fig, path)


def plot_multilayer_sweep(rows, path):
    """Half-trace of one cycle against beta1, colored by branch (band structure)."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for label in dict.fromkeys(r["branch"] for r in rows):
        xs = [r["beta1"] for r in rows if r["branch"] == label]
        ys = [r["trace_half"] for r in rows if r["branch"] == label]
        ax.plot(xs, ys, "o", ms=3, color=_BRANCH_COLORS.get(label, "k"), label=label)
    ax.axhline(1.0, color="0.6", lw=0.8, ls="--")
    ax.axhline(-1.0, color="0.6", lw=0.8, ls="--")
    ax.set_xlabel(r"$\beta_1$ [rad]")
    ax.set_ylabel("half-trace of one cycle")
    ax.legend(frameon=False)
    _save(fig, path)
