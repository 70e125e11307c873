"""Real 2x2 unimodular matrix algebra.

Every unit-determinant real 2x2 matrix is a rotation conjugate of an
equi-diagonal matrix [[a, b], [c, a]], and a further reciprocal-scaling
(squeeze) conjugation brings it to one of four canonical forms: a rotation,
a symmetric boost, or one of two triangular shears.  This module provides
the elementary generators, the equi-diagonalization, the branch
classification and the full canonical decomposition with its inverse.

Conventions used throughout the package:
  * rotation_half(alpha) carries half-angle entries cos(alpha/2), so that
    conjugation R(alpha) X R(-alpha) rotates the (b - c, b + c) part of X
    by the full angle alpha;
  * squeeze(eta) = diag(e^{eta/2}, e^{-eta/2});
  * equidiagonalize picks the root with b + c >= 0, which makes
    alpha = atan2(D - A, B + C) single-valued in (-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

SQRT2 = math.sqrt(2.0)

# arguments beyond this overflow exp() in the half-angle factors
_EXP_ARG_LIMIT = 1400.0


class DomainError(ValueError):
    """A numeric-domain violation (argument outside the operation's range)."""


class Branch(Enum):
    """Conjugacy class of a unimodular 2x2 matrix."""

    CIRCULAR = "Circular"
    HYPERBOLIC = "Hyperbolic"
    PARABOLIC_LOWER = "ParabolicLower"
    PARABOLIC_UPPER = "ParabolicUpper"
    SCALAR = "Scalar"


@dataclass(frozen=True)
class EquiDiag:
    """Rotation angle plus the equi-diagonal entries (a, b, c), a^2 - bc = 1."""

    alpha: float
    a: float
    b: float
    c: float

    def core(self) -> np.ndarray:
        """The equi-diagonal matrix [[a, b], [c, a]]."""
        return np.array([[self.a, self.b], [self.c, self.a]])


@dataclass(frozen=True)
class WignerDecomp:
    """Canonical decomposition sign * R(alpha) D(eta) W(param) D(-eta) R(-alpha).

    W is the branch's canonical matrix, D(eta) = diag(e^{-eta/2}, e^{eta/2}).
    For the circular and hyperbolic branches the parameter carries the sign
    of c; for the parabolic branches eta is redundant and stored as 0.
    """

    branch: Branch
    param: float
    eta: float
    alpha: float
    sign: int


def rotation_half(alpha: float) -> np.ndarray:
    """Rotation matrix with half-angle entries [[cos a/2, -sin a/2], [sin a/2, cos a/2]]."""
    c, s = math.cos(alpha / 2.0), math.sin(alpha / 2.0)
    return np.array([[c, -s], [s, c]])


def squeeze(eta: float) -> np.ndarray:
    """Reciprocal scaling diag(e^{eta/2}, e^{-eta/2})."""
    if not math.isfinite(eta):
        raise ValueError("squeeze parameter must be finite")
    if abs(eta) > _EXP_ARG_LIMIT:
        raise DomainError(f"squeeze parameter {eta} overflows exp()")
    h = math.exp(eta / 2.0)
    return np.array([[h, 0.0], [0.0, 1.0 / h]])


def boost(lam: float) -> np.ndarray:
    """Symmetric hyperbolic matrix [[cosh l/2, sinh l/2], [sinh l/2, cosh l/2]]."""
    if not math.isfinite(lam):
        raise ValueError("boost parameter must be finite")
    if abs(lam) > _EXP_ARG_LIMIT:
        raise DomainError(f"boost parameter {lam} overflows exp()")
    ch, sh = math.cosh(lam / 2.0), math.sinh(lam / 2.0)
    return np.array([[ch, sh], [sh, ch]])


def ensure_unimodular(m, tol: float = 1e-9) -> np.ndarray:
    """Validate a 2x2 real matrix with |det - 1| <= tol and finite entries."""
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if abs(det - 1.0) > tol:
        raise ValueError(f"matrix determinant {det} is not 1 within {tol}")
    return m


def default_tol(m) -> float:
    """Parabolic-detection tolerance: 1e-9 relative to the max-norm."""
    return 1e-9 * max(1.0, float(np.max(np.abs(m))))


def equidiagonalize(m) -> EquiDiag:
    """Split m = R(alpha) [[a, b], [c, a]] R(-alpha).

    alpha = atan2(D - A, B + C), a = (A + D)/2 and b, c carry the positive
    root h = hypot(A - D, B + C), so b + c = h >= 0 and b - c = B - C.
    """
    m = ensure_unimodular(m)
    A, B, C, D = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    h = math.hypot(A - D, B + C)
    alpha = math.atan2(D - A, B + C)
    a = (A + D) / 2.0
    b = ((B - C) + h) / 2.0
    c = ((C - B) + h) / 2.0
    return EquiDiag(alpha=alpha, a=a, b=b, c=c)


def classify(ed: EquiDiag, tol: float | None = None) -> Branch:
    """Branch of an equi-diagonal triple.

    bc < -tol^2 is circular, bc > tol^2 hyperbolic; otherwise the vanishing
    off-diagonal picks the parabolic kind, and both vanishing means scalar.
    tol defaults to 1e-9 relative to the triple's max-norm.
    """
    if tol is None:
        tol = default_tol([ed.a, ed.b, ed.c])
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    b, c = ed.b, ed.c
    bc = b * c
    if bc < -tol * tol:
        return Branch.CIRCULAR
    if bc > tol * tol:
        return Branch.HYPERBOLIC
    if abs(b) <= tol and abs(c) <= tol:
        return Branch.SCALAR
    if abs(b) <= tol:
        return Branch.PARABOLIC_LOWER
    return Branch.PARABOLIC_UPPER


def wigner_decompose(m, tol: float | None = None) -> WignerDecomp:
    """Decompose m into sign * R(alpha) D(eta) W(param) D(-eta) R(-alpha).

    A global sign is factored out when the half-trace is <= -1, so the
    remaining core always has a > -1.  Circular parameter
    phi = atan2(sqrt(-bc), a) signed by c, eta = log(-c/b)/2; hyperbolic
    chi = arccosh(a) signed by c, eta = log(c/b)/2; parabolic parameter is
    the surviving off-diagonal entry (c, or -b for the upper shear).
    """
    m = np.asarray(m, dtype=float)
    if tol is None:
        tol = default_tol(m)
    sign = 1
    ed = equidiagonalize(m)
    if ed.a <= -1.0:
        sign = -1
        ed = equidiagonalize(-m)
    branch = classify(ed, tol)
    a, b, c = ed.a, ed.b, ed.c
    if branch is Branch.CIRCULAR:
        param = math.copysign(math.atan2(math.sqrt(-b * c), a), c)
        eta = 0.5 * math.log(-c / b)
    elif branch is Branch.HYPERBOLIC:
        param = math.copysign(math.acosh(a), c)
        eta = 0.5 * math.log(c / b)
    elif branch is Branch.PARABOLIC_LOWER:
        param, eta = c, 0.0
    elif branch is Branch.PARABOLIC_UPPER:
        param, eta = -b, 0.0
    else:
        if abs(a - 1.0) > 1e-6:
            raise RuntimeError(
                f"scalar branch with half-trace {a}: unimodular invariant violated"
            )
        param, eta = 0.0, 0.0
    return WignerDecomp(branch=branch, param=param, eta=eta, alpha=ed.alpha, sign=sign)


def _canonical_matrix(branch: Branch, param: float) -> np.ndarray:
    if branch is Branch.CIRCULAR:
        c, s = math.cos(param), math.sin(param)
        return np.array([[c, -s], [s, c]])
    if branch is Branch.HYPERBOLIC:
        ch, sh = math.cosh(param), math.sinh(param)
        return np.array([[ch, sh], [sh, ch]])
    if branch is Branch.PARABOLIC_LOWER:
        return np.array([[1.0, 0.0], [param, 1.0]])
    if branch is Branch.PARABOLIC_UPPER:
        return np.array([[1.0, -param], [0.0, 1.0]])
    return np.eye(2)


def reconstruct(wd: WignerDecomp) -> np.ndarray:
    """Inverse of wigner_decompose: rebuild the unimodular matrix."""
    w = _canonical_matrix(wd.branch, wd.param)
    d = squeeze(-wd.eta)  # D(eta) = diag(e^{-eta/2}, e^{eta/2})
    dinv = squeeze(wd.eta)
    r = rotation_half(wd.alpha)
    rinv = rotation_half(-wd.alpha)
    return wd.sign * (r @ (d @ w @ dinv) @ rinv)
