"""Periodic two-medium stacks via complex phase/boundary matrices.

One cycle of a periodic stack, written for the (incoming, reflected) beam
pair, is B(nu) P(beta1) B(-nu) P(beta2): a phase advance in each medium and
a partially reflecting boundary crossed in both directions, with
cosh(nu/2) = 1/t12 and sinh(nu/2) = r12/t12.  A fixed unitary similarity
turns this complex product into a real unimodular form
S(nu) R(beta1) S(-nu) R(beta2), whose equi-diagonal core is
R(xi) B(-2 lambda) R(xi); the branch of that core separates bounded
(pass-band) from geometrically growing (stop-band) stacks, and the
one-exponent form gives N-cycle stacks in O(1).

boost_rapidity names the core's lambda to keep it clearly apart from the
attenuation rate lambda of the activity module.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .expform import ExpForm, log_to_expform, n_cycle
from .sl2 import EquiDiag, boost, rotation_half, squeeze

# Unitary similarity taking phase matrices to half-angle rotations and
# boundary matrices to squeezes: C P(beta) C^-1 = R(beta), C B(nu) C^-1 = S(nu).
_EIQ = cmath.exp(-1j * math.pi / 4.0)
CONJUGATION = np.array([[_EIQ, _EIQ], [-_EIQ.conjugate(), _EIQ.conjugate()]]) / math.sqrt(2.0)
CONJUGATION_INV = np.array(
    [[_EIQ.conjugate(), -_EIQ], [_EIQ.conjugate(), _EIQ]]
) / math.sqrt(2.0)


@dataclass(frozen=True)
class LayerPair:
    """Phase advances (beta1, beta2) and boundary data (t12, r12, nu) of one cycle.

    r12 defaults to the positive root sqrt(1 - t12^2); nu = 2 artanh(r12) is
    derived.  Total reflection (t12 = 0) has no finite rapidity and is
    rejected at construction.
    """

    t12: float
    beta1: float
    beta2: float
    r12: float | None = None
    nu: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.beta1) and math.isfinite(self.beta2)):
            raise ValueError("phase advances must be finite")
        if not 0.0 < self.t12 <= 1.0:
            raise ValueError(f"t12 = {self.t12} outside (0, 1]")
        r = self.r12
        if r is None:
            r = math.sqrt(max(0.0, 1.0 - self.t12 * self.t12))
            object.__setattr__(self, "r12", r)
        if abs(r * r + self.t12 * self.t12 - 1.0) > 1e-12:
            raise ValueError("r12^2 + t12^2 must equal 1")
        object.__setattr__(self, "nu", 2.0 * math.atanh(r))


def phase_matrix(beta: float) -> np.ndarray:
    """Propagation phase diag(e^{i beta/2}, e^{-i beta/2}) for one medium."""
    p = cmath.exp(0.5j * beta)
    return np.array([[p, 0.0], [0.0, p.conjugate()]])


def boundary_matrix(nu: float) -> np.ndarray:
    """Interface matrix [[cosh nu/2, sinh nu/2], [sinh nu/2, cosh nu/2]]."""
    return boost(nu)


def conjugate_to_real(m) -> np.ndarray:
    """Similarity C m C^-1, valid on products of phase/boundary matrices.

    Raises if the image has an imaginary residue above 1e-12 of its
    max-norm, which flags an input outside the admissible group.
    """
    m = np.asarray(m, dtype=complex)
    out = CONJUGATION @ m @ CONJUGATION_INV
    scale = max(1.0, float(np.max(np.abs(out))))
    residue = float(np.max(np.abs(out.imag)))
    if residue > 1e-12 * scale:
        raise ValueError(
            f"conjugation failed: imaginary residue {residue} (input not a phase/boundary product)"
        )
    return out.real.copy()


def complex_cycle(lp: LayerPair) -> np.ndarray:
    """One cycle in the complex representation: B(nu) P(beta1) B(-nu) P(beta2)."""
    return (
        boundary_matrix(lp.nu)
        @ phase_matrix(lp.beta1)
        @ boundary_matrix(-lp.nu)
        @ phase_matrix(lp.beta2)
    )


def cycle(lp: LayerPair) -> np.ndarray:
    """One cycle in real form: S(nu) R(beta1) S(-nu) R(beta2)."""
    return (
        squeeze(lp.nu)
        @ rotation_half(lp.beta1)
        @ squeeze(-lp.nu)
        @ rotation_half(lp.beta2)
    )


def core_decompose(nu: float, beta1: float) -> tuple[float, float]:
    """(xi1, lambda) with S(nu) R(beta1) S(-nu) = R(xi1) B(-2 lambda) R(xi1).

    Extracted from the entries themselves (trace and the two off-diagonal
    combinations), which is convention-proof: the product matrix is
    [[ch cos xi1, -(ch sin xi1 + sh)], [ch sin xi1 - sh, ch cos xi1]] in
    cosh/sinh of lambda, so sh = -(e01 + e10)/2 and ch sin xi1 = (e10 - e01)/2.
    At nu = 0 this reduces to (beta1/2, 0).
    """
    e = squeeze(nu) @ rotation_half(beta1) @ squeeze(-nu)
    sh = -(e[0, 1] + e[1, 0]) / 2.0
    ch_sin = (e[1, 0] - e[0, 1]) / 2.0
    lam = math.asinh(sh)
    xi1 = math.atan2(ch_sin, e[0, 0])
    return xi1, lam


@dataclass(frozen=True)
class CoreDecomp:
    """Cycle split R(xi1) B(-2 lambda) R(xi2) with the mean/difference angles.

    xi2 = xi1 + beta2, xi = (xi1 + xi2)/2 and alpha_ml = (xi1 - xi2)/2, so
    the cycle is R(alpha_ml) [R(xi) B(-2 lambda) R(xi)] R(-alpha_ml) with an
    equi-diagonal middle factor.
    """

    xi1: float
    xi2: float
    xi: float
    alpha_ml: float
    boost_rapidity: float


def full_decompose(lp: LayerPair) -> CoreDecomp:
    """Decompose the full cycle; reconstruction is R(xi1) B(-2 lambda) R(xi2)."""
    xi1, lam = core_decompose(lp.nu, lp.beta1)
    xi2 = xi1 + lp.beta2
    return CoreDecomp(
        xi1=xi1,
        xi2=xi2,
        xi=(xi1 + xi2) / 2.0,
        alpha_ml=(xi1 - xi2) / 2.0,
        boost_rapidity=lam,
    )


def core_equidiag(cd: CoreDecomp) -> EquiDiag:
    """Equi-diagonal entries of the core R(xi) B(-2 lambda) R(xi)."""
    ch, sh = math.cosh(cd.boost_rapidity), math.sinh(cd.boost_rapidity)
    cs, sn = math.cos(cd.xi), math.sin(cd.xi)
    return EquiDiag(alpha=cd.alpha_ml, a=ch * cs, b=-(ch * sn + sh), c=ch * sn - sh)


def multilayer_branch(cd: CoreDecomp) -> ExpForm:
    """Exponent of the equi-diagonal core: circular when |cosh lambda cos xi| < 1,
    hyperbolic when > 1, with the boundary handled as the parabolic case."""
    return log_to_expform(core_equidiag(cd))


def stack(lp: LayerPair, n: int) -> np.ndarray:
    """n-cycle stack in O(1): conjugated n-th power of the core exponent."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cd = full_decompose(lp)
    form = multilayer_branch(cd)
    rot = rotation_half(cd.alpha_ml)
    return rot @ n_cycle(form, n) @ rotation_half(-cd.alpha_ml)
