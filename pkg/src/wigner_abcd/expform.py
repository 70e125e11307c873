"""The one-exponent form exp(r * M(theta)) of a unimodular 2x2 matrix.

M(theta) = [[0, -cos t + sin t], [cos t + sin t, 0]] is traceless with
M^2 = -cos(2t) * I, so exp(r M) collapses to cos/sin for |t| < pi/4
(circular region), cosh/sinh for |t| > pi/4 (hyperbolic region) and a
two-term triangular matrix exactly at t = +/-pi/4 where the power series
truncates.  All four cases are evaluated through one pair of entire
kernels in x = r^2 cos(2t), which keeps the map continuous across the
branch lines and exact on them.

theta is restricted to (-pi/2, pi/2] (cos t >= 0); the other half-plane is
redundant once r may take either sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sl2 import SQRT2, Branch, DomainError, EquiDiag, classify

_QUARTER_PI = math.pi / 4.0
_HALF_PI = math.pi / 2.0

# |r| cap for the power-series oracle; beyond this hyperbolic entries overflow
# long before the series itself misbehaves, so reject early.
_TAYLOR_R_LIMIT = 50.0
_TAYLOR_MAX_TERMS = 200


@dataclass(frozen=True)
class ExpForm:
    """Exponent data (r, theta, sign) with exp value sign * exp(r M(theta))."""

    r: float
    theta: float
    sign: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.theta)):
            raise ValueError("ExpForm parameters must be finite")
        if not (-_HALF_PI < self.theta <= _HALF_PI):
            raise DomainError(f"theta {self.theta} outside (-pi/2, pi/2]")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")


def _uv(theta: float) -> tuple[float, float]:
    # u = cos t - sin t, v = cos t + sin t, written so that u vanishes
    # exactly at t = pi/4 and v at t = -pi/4 (float pi/4 included).
    u = SQRT2 * math.sin(_QUARTER_PI - theta)
    v = SQRT2 * math.sin(_QUARTER_PI + theta)
    return u, v


def m_of_theta(theta: float) -> np.ndarray:
    """Generator M(theta) = [[0, -cos t + sin t], [cos t + sin t, 0]]."""
    if not math.isfinite(theta) or abs(theta) > _HALF_PI:
        raise DomainError(f"theta {theta} outside [-pi/2, pi/2]")
    u, v = _uv(theta)
    return np.array([[0.0, -u], [v, 0.0]])


def _cos_kernel(x: float) -> float:
    # cos(sqrt(x)) for x >= 0, cosh(sqrt(-x)) for x < 0; entire in x
    if x > 1e-8:
        return math.cos(math.sqrt(x))
    if x < -1e-8:
        return math.cosh(math.sqrt(-x))
    return 1.0 - 0.5 * x * (1.0 - x / 12.0)


def _sinc_kernel(x: float) -> float:
    # sin(sqrt(x))/sqrt(x), resp. sinh(sqrt(-x))/sqrt(-x); entire in x
    if x > 1e-8:
        t = math.sqrt(x)
        return math.sin(t) / t
    if x < -1e-8:
        t = math.sqrt(-x)
        return math.sinh(t) / t
    return 1.0 - x / 6.0 * (1.0 - x / 20.0)


def exp_closed(form: ExpForm) -> np.ndarray:
    """Closed-form sign * exp(r M(theta)); always unimodular.

    With u = cos t - sin t and v = cos t + sin t the result is
    [[C, -r u S], [r v S, C]] where C, S are the even kernels evaluated at
    x = r^2 u v.  No eta is ever formed, so the hyperbolic/circular split
    costs nothing and the triangular values at t = +/-pi/4 come out exact.
    """
    u, v = _uv(form.theta)
    x = form.r * form.r * u * v
    cx = _cos_kernel(x)
    sx = form.r * _sinc_kernel(x)
    return form.sign * np.array([[cx, -u * sx], [v * sx, cx]])


def exp_taylor(g: np.ndarray, r: float) -> np.ndarray:
    """Power-series exp(r g) by scaling and squaring; the independent oracle.

    The argument is halved max(0, ceil(log2 |r|) + 2) times, the series is
    summed until a term falls below 1e-18 of the running sum, and the result
    is squared back up.  Valid for |r| <= 50.
    """
    g = np.asarray(g, dtype=float)
    if not math.isfinite(r):
        raise ValueError("r must be finite")
    if abs(r) > _TAYLOR_R_LIMIT:
        raise DomainError(f"|r| = {abs(r)} exceeds the series oracle limit {_TAYLOR_R_LIMIT}")
    s = max(0, math.ceil(math.log2(abs(r))) + 2) if r != 0.0 else 0
    w = r / (1 << s)
    # unrolled 2x2 arithmetic: this oracle sits inside dense comparison grids
    g00, g01, g10, g11 = g[0, 0] * w, g[0, 1] * w, g[1, 0] * w, g[1, 1] * w
    a00, a01, a10, a11 = 1.0, 0.0, 0.0, 1.0
    t00, t01, t10, t11 = 1.0, 0.0, 0.0, 1.0
    for n in range(1, _TAYLOR_MAX_TERMS):
        t00, t01, t10, t11 = (
            (t00 * g00 + t01 * g10) / n,
            (t00 * g01 + t01 * g11) / n,
            (t10 * g00 + t11 * g10) / n,
            (t10 * g01 + t11 * g11) / n,
        )
        a00 += t00
        a01 += t01
        a10 += t10
        a11 += t11
        tmax = max(abs(t00), abs(t01), abs(t10), abs(t11))
        amax = max(abs(a00), abs(a01), abs(a10), abs(a11))
        if tmax <= 1e-18 * amax:
            break
    else:
        raise RuntimeError("series did not converge")
    for _ in range(s):
        a00, a01, a10, a11 = (
            a00 * a00 + a01 * a10,
            a00 * a01 + a01 * a11,
            a10 * a00 + a11 * a10,
            a10 * a01 + a11 * a11,
        )
    return np.array([[a00, a01], [a10, a11]])


def log_to_expform(ed: EquiDiag, tol: float | None = None) -> ExpForm:
    """Principal (r, theta, sign) with sign * exp(r M(theta)) = [[a, b], [c, a]].

    theta solves tan t = (b + c)/(c - b) folded into cos t >= 0 with the
    residual orientation pushed into the sign of r; the radius comes from
    sqrt((b^2 + c^2)/(-+2bc)) times the circular angle phi in (0, pi) or the
    hyperbolic rapidity chi.  Scalar inputs have no principal exponent and
    are rejected.
    """
    a, b, c = ed.a, ed.b, ed.c
    scale = max(1.0, a * a, abs(b * c))
    if abs(a * a - b * c - 1.0) > 1e-9 * scale:
        raise ValueError(f"equi-diagonal triple ({a}, {b}, {c}) is not unimodular")
    sign = 1
    if a <= -1.0:
        sign = -1
        a, b, c = -a, -b, -c
    branch = classify(EquiDiag(0.0, a, b, c), tol)
    if branch is Branch.SCALAR:
        raise DomainError("scalar matrix: r = 0 with arbitrary theta, no principal form")
    if branch is Branch.PARABOLIC_LOWER:
        return ExpForm(c / SQRT2, _QUARTER_PI, sign)
    if branch is Branch.PARABOLIC_UPPER:
        return ExpForm(-b / SQRT2, -_QUARTER_PI, sign)
    theta = math.atan2(b + c, c - b)
    rsign = 1.0
    if theta > _HALF_PI:
        theta -= math.pi
        rsign = -1.0
    elif theta <= -_HALF_PI:
        theta += math.pi
        rsign = -1.0
    if branch is Branch.CIRCULAR:
        mag = math.sqrt((b * b + c * c) / (-2.0 * b * c)) * math.atan2(math.sqrt(-b * c), a)
    else:
        mag = math.sqrt((b * b + c * c) / (2.0 * b * c)) * math.acosh(a)
    return ExpForm(rsign * mag, theta, sign)


def n_cycle(form: ExpForm, n: int) -> np.ndarray:
    """n-fold power in O(1): sign^n * exp(n r M(theta))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    sign = form.sign if n % 2 else 1
    return exp_closed(ExpForm(n * form.r, form.theta, sign))


def boundary_expansion(r: float, theta: float) -> np.ndarray:
    """Second-order expansion of exp(r M) near the truncation lines.

    Within 0.05 of t = pi/4 this is
    [[1 - r^2 (1 - tan t)/2, -r (1 - tan t)/sqrt 2], [r sqrt 2, 1 - ...]]
    and the mirrored form near t = -pi/4.  Only for continuity studies; the
    result is not exactly unimodular.
    """
    if abs(theta - _QUARTER_PI) <= 0.05:
        w = 1.0 - math.tan(theta)
        d = 1.0 - r * r * w / 2.0
        return np.array([[d, -r * w / SQRT2], [r * SQRT2, d]])
    if abs(theta + _QUARTER_PI) <= 0.05:
        w = 1.0 + math.tan(theta)
        d = 1.0 - r * r * w / 2.0
        return np.array([[d, -r * SQRT2], [r * w / SQRT2, d]])
    raise DomainError(f"theta {theta} not within 0.05 of +/-pi/4")
