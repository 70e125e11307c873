"""Two-mirror resonator round trips in normalized units.

Lengths are measured in units of the mirror separation s, so a cavity is
described by the focusing strength f = s/R of its identical concave mirrors
and the start position x (distance from a mirror, 0 <= x <= 1).  A full
round trip is two identical half cycles; each half cycle is a propagation,
one mirror reflection and the complementary propagation.  Starting midway
(x = 1/2) the half cycle is already equi-diagonal, with cos phi = 1 - f and
e^{2 eta} = (2 - f)/(4 f); the cavity is stable exactly for 0 < f < 2 where
the half cycle is on the circular branch.

The exponent radius always uses the general equi-diagonal formula
sqrt((b^2 + c^2)/(-+2bc)) * (phi | chi); a tempting f-only simplification
of that coefficient does not reproduce the half cycle and is deliberately
not used (the reconstruction tests pin this down).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .expform import log_to_expform, n_cycle
from .sl2 import Branch, DomainError, classify, equidiagonalize, rotation_half


@dataclass(frozen=True)
class CavityConfig:
    """Focusing strength f = s/R > 0 and normalized start position x in [0, 1]."""

    f: float
    x: float = 0.5

    def __post_init__(self):
        if not (math.isfinite(self.f) and math.isfinite(self.x)):
            raise ValueError("cavity parameters must be finite")
        if self.f <= 0.0:
            raise ValueError("focusing strength f must be > 0")
        if not 0.0 <= self.x <= 1.0:
            raise ValueError("start position x must be in [0, 1]")


def mirror_matrix(f: float) -> np.ndarray:
    """Concave-mirror reflection [[1, 0], [-2f, 1]] (normalized -2/R, s = 1)."""
    return np.array([[1.0, 0.0], [-2.0 * f, 1.0]])


def gap_matrix(d: float) -> np.ndarray:
    """Free propagation [[1, d], [0, 1]]."""
    return np.array([[1.0, d], [0.0, 1.0]])


def half_cycle(cfg: CavityConfig) -> np.ndarray:
    """Half-cycle matrix gap(x) mirror(f) gap(1 - x), in closed form."""
    f, x = cfg.f, cfg.x
    return np.array(
        [
            [1.0 - 2.0 * x * f, 1.0 - 2.0 * x * f * (1.0 - x)],
            [-2.0 * f, 1.0 - 2.0 * f * (1.0 - x)],
        ]
    )


def cavity_alpha(cfg: CavityConfig) -> float:
    """Equi-diagonalizing rotation angle of the half cycle, folded to (-pi/2, pi/2].

    Agrees with equidiagonalize(half_cycle(cfg)).alpha modulo pi (the b + c >= 0
    convention can add a half turn for strong focusing); exactly zero at x = 1/2.
    """
    f, x = cfg.f, cfg.x
    alpha = math.atan2(2.0 * f * (2.0 * x - 1.0), 1.0 - 2.0 * f * (1.0 + x - x * x))
    if alpha > math.pi / 2.0:
        alpha -= math.pi
    elif alpha <= -math.pi / 2.0:
        alpha += math.pi
    return alpha


def mid_cavity_decomp(f: float) -> tuple[float, float]:
    """(phi, eta) of the midway half cycle: cos phi = 1 - f, e^{2 eta} = (2 - f)/(4 f).

    These carry the opposite sign convention from wigner_decompose (the
    midway half cycle has c < 0): the half cycle equals
    [[cos phi, e^{eta} sin phi], [-e^{-eta} sin phi, cos phi]].
    Only defined in the stable band 0 < f < 2.
    """
    if not 0.0 < f < 2.0:
        raise DomainError(f"f = {f} outside the stable band (0, 2)")
    phi = math.acos(1.0 - f)
    eta = 0.5 * math.log((2.0 - f) / (4.0 * f))
    return phi, eta


def n_round_trips(cfg: CavityConfig, n: int) -> np.ndarray:
    """Matrix of n full round trips (2n half cycles) via the exponent form."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ed = equidiagonalize(half_cycle(cfg))
    form = log_to_expform(ed)
    core = n_cycle(form, 2 * n)
    return rotation_half(ed.alpha) @ core @ rotation_half(-ed.alpha)


def stability(cfg: CavityConfig) -> Branch:
    """Branch of the half cycle; CIRCULAR means a stable cavity."""
    return classify(equidiagonalize(half_cycle(cfg)))
