"""Command line front-end.

Subcommands: decompose, classify, expform, power (matrix analysis),
regions (branch map over the generator angle), activity, cavity,
multilayer (application reports).  Reports emit JSON or delimited CSV and
can additionally render a figure to a file with --plot.

Floats are printed in shortest round-trip representation, so outputs are
bit-stable across runs.  Exit codes: 0 success, 2 invalid input,
1 numeric-domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import plots
from .activity import MediumParams, trajectory
from .cavity import CavityConfig, half_cycle, mid_cavity_decomp, n_round_trips, stability
from .expform import log_to_expform, n_cycle
from .multilayer import LayerPair, cycle, full_decompose, multilayer_branch, stack
from .sl2 import (
    Branch,
    DomainError,
    classify,
    default_tol,
    equidiagonalize,
    rotation_half,
    wigner_decompose,
)

_QUARTER_PI = math.pi / 4.0


def _f(x) -> float:
    # normalize -0.0 so serialized output is stable and readable
    return float(x) + 0.0


def _mat_obj(m) -> dict:
    return {"m": [[_f(m[0, 0]), _f(m[0, 1])], [_f(m[1, 0]), _f(m[1, 1])]]}


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    def cell(v):
        return repr(_f(v)) if isinstance(v, float) else str(v)

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _read_doc(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_matrix(args) -> np.ndarray:
    if args.matrix is not None:
        data = json.loads(args.matrix)
    elif args.file is not None:
        data = _read_doc(args.file)
    else:
        data = json.load(sys.stdin)
    if isinstance(data, dict):
        if "m" not in data:
            raise ValueError('matrix document must carry an "m" field')
        data = data["m"]
    m = np.asarray(data, dtype=float)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    det = float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    if det <= 0.0 or abs(det - 1.0) > 1e-6:
        raise ValueError(f"matrix determinant {det} not within 1e-6 of 1")
    if abs(det - 1.0) > 1e-12:
        print(f"warning: determinant {det}, renormalizing by sqrt(det)", file=sys.stderr)
        m = m / math.sqrt(det)
    return m


def _tol(args) -> float | None:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("WIGNER_ABCD_TOL")
    return float(env) if env else None


def _merged(args, doc: dict, key: str, default, attr: str | None = None):
    # flag wins over the JSON document; the default applies only when both
    # are absent, so an explicit 0 still reaches validation
    val = getattr(args, attr or key)
    if val is None:
        val = doc.get(key, default)
    return val


# --------------------------------------------------------------------------
# commands

def cmd_decompose(args) -> str:
    m = _load_matrix(args)
    ed = equidiagonalize(m)
    wd = wigner_decompose(m, _tol(args))
    obj = {
        "m": _mat_obj(m)["m"],
        "equidiag": {"alpha": _f(ed.alpha), "a": _f(ed.a), "b": _f(ed.b), "c": _f(ed.c)},
        "branch": wd.branch.value,
        "param": _f(wd.param),
        "eta": _f(wd.eta),
        "alpha": _f(wd.alpha),
        "sign": wd.sign,
    }
    if args.format == "csv":
        return _csv(
            ["alpha", "branch", "param", "eta", "sign"],
            [[obj["alpha"], obj["branch"], obj["param"], obj["eta"], obj["sign"]]],
        )
    return _dumps(obj)


def cmd_classify(args) -> str:
    m = _load_matrix(args)
    tol = _tol(args)
    if tol is None:
        tol = default_tol(m)
    branch = classify(equidiagonalize(m), tol)
    if args.format == "csv":
        return _csv(["branch", "tol"], [[branch.value, float(tol)]])
    return _dumps({"m": _mat_obj(m)["m"], "branch": branch.value, "tol": _f(tol)})


def cmd_expform(args) -> str:
    m = _load_matrix(args)
    form = log_to_expform(equidiagonalize(m), _tol(args))
    obj = {"r": _f(form.r), "theta": _f(form.theta), "sign": form.sign}
    if args.format == "csv":
        return _csv(["r", "theta", "sign"], [[obj["r"], obj["theta"], obj["sign"]]])
    return _dumps({"m": _mat_obj(m)["m"], **obj})


def cmd_power(args) -> str:
    m = _load_matrix(args)
    n = args.n if args.n is not None else 1
    ed = equidiagonalize(m)
    form = log_to_expform(ed, _tol(args))
    result = rotation_half(ed.alpha) @ n_cycle(form, n) @ rotation_half(-ed.alpha)
    if args.format == "csv":
        return _csv(
            ["A", "B", "C", "D"],
            [[float(result[0, 0]), float(result[0, 1]), float(result[1, 0]), float(result[1, 1])]],
        )
    return _dumps({"m": _mat_obj(m)["m"], "n": n, "result": _mat_obj(result)})


def _region_label(theta: float) -> str:
    if abs(abs(theta) - _QUARTER_PI) <= 1e-12:
        return "parabolic"
    return "circular" if abs(theta) < _QUARTER_PI else "hyperbolic"


def cmd_regions(args) -> str:
    steps = args.theta_steps if args.theta_steps is not None else 16
    if steps < 1:
        raise ValueError("theta-steps must be >= 1")
    thetas = [-math.pi / 2.0 + k * math.pi / steps for k in range(1, steps + 1)]
    labels = [_region_label(t) for t in thetas]
    if args.plot:
        plots.plot_regions(thetas, labels, args.plot)
    if args.format == "csv":
        return _csv(["theta", "branch"], [[t, l] for t, l in zip(thetas, labels)])
    return _dumps([{"theta": _f(t), "branch": l} for t, l in zip(thetas, labels)])


def cmd_activity(args) -> str:
    doc = _read_doc(args.file) if args.file else {}
    gamma = float(_merged(args, doc, "gamma", 0.0))
    mu = float(_merged(args, doc, "mu", 0.0))
    lam = float(_merged(args, doc, "lambda", 0.0, attr="lambda_att"))
    alpha = float(doc.get("alpha", 0.0))
    z = float(_merged(args, doc, "z", 1.0))
    steps = int(_merged(args, doc, "steps", 101))
    if steps < 1:
        raise ValueError("steps must be >= 1")
    params = MediumParams(gamma=gamma, mu=mu, lambda_att=lam)
    grid = np.linspace(0.0, z, steps)
    samples = trajectory(params, alpha, grid)
    rows = [
        {"z": _f(s.z), "ex": _f(s.ex), "ey": _f(s.ey), "envelope": _f(math.exp(-lam * s.z))}
        for s in samples
    ]
    if args.plot:
        plots.plot_trajectory(rows, args.plot)
    if args.format == "csv":
        return _csv(["z", "ex", "ey", "envelope"], [[r["z"], r["ex"], r["ey"], r["envelope"]] for r in rows])
    return _dumps(
        {
            "gamma": _f(gamma),
            "mu": _f(mu),
            "lambda": _f(lam),
            "alpha": _f(alpha),
            "z": _f(z),
            "steps": steps,
            "samples": rows,
        }
    )


def cmd_cavity(args) -> str:
    doc = _read_doc(args.file) if args.file else {}
    f = float(_merged(args, doc, "f", 0.1))
    x = float(_merged(args, doc, "x", 0.5))
    n = int(_merged(args, doc, "n", 0))
    cfg = CavityConfig(f=f, x=x)
    half = half_cycle(cfg)
    wd = wigner_decompose(half, _tol(args))
    branch = stability(cfg)
    trips = n_round_trips(cfg, n)
    rows = []
    for k in range(n + 1):
        mk = n_round_trips(cfg, k)
        rows.append(
            {
                "n": k,
                "A": _f(mk[0, 0]),
                "B": _f(mk[0, 1]),
                "C": _f(mk[1, 0]),
                "D": _f(mk[1, 1]),
                "trace": _f(mk[0, 0] + mk[1, 1]),
            }
        )
    if args.plot:
        plots.plot_cavity_trace(rows, args.plot)
    if args.format == "csv":
        return _csv(
            ["n", "A", "B", "C", "D", "trace"],
            [[r["n"], r["A"], r["B"], r["C"], r["D"], r["trace"]] for r in rows],
        )
    obj = {
        "f": _f(f),
        "x": _f(x),
        "n": n,
        "half_cycle": _mat_obj(half),
        "branch": branch.value,
        "stable": branch is Branch.CIRCULAR,
        "decomp": {
            "branch": wd.branch.value,
            "param": _f(wd.param),
            "eta": _f(wd.eta),
            "alpha": _f(wd.alpha),
            "sign": wd.sign,
        },
        "round_trip": _mat_obj(trips),
        "trace": _f(trips[0, 0] + trips[1, 1]),
    }
    if x == 0.5 and 0.0 < f < 2.0:
        phi, eta = mid_cavity_decomp(f)
        obj["mid_cavity"] = {
            "phi": _f(phi),
            "eta": _f(eta),
            "cos_phi": _f(math.cos(phi)),
            "exp_2eta": _f(math.exp(2.0 * eta)),
        }
    return _dumps(obj)


def _sweep_rows(t12: float, beta2: float, steps: int) -> list[dict]:
    rows = []
    for k in range(steps):
        b1 = 2.0 * math.pi * k / steps
        lp = LayerPair(t12=t12, beta1=b1, beta2=beta2)
        m = cycle(lp)
        branch = classify(equidiagonalize(m))
        rows.append(
            {
                "beta1": _f(b1),
                "beta2": _f(beta2),
                "branch": branch.value,
                "trace_half": _f((m[0, 0] + m[1, 1]) / 2.0),
            }
        )
    return rows


def cmd_multilayer(args) -> str:
    doc = _read_doc(args.file) if args.file else {}
    t12 = float(_merged(args, doc, "t12", 0.8))
    beta1 = float(_merged(args, doc, "beta1", 0.0))
    beta2 = float(_merged(args, doc, "beta2", 0.0))
    n = int(_merged(args, doc, "n", 1))
    steps = int(_merged(args, doc, "steps", 72))
    rows = _sweep_rows(t12, beta2, steps) if (args.plot or args.format == "csv") else None
    if args.plot:
        plots.plot_multilayer_sweep(rows, args.plot)
    if args.format == "csv":
        return _csv(
            ["beta1", "beta2", "branch", "trace_half"],
            [[r["beta1"], r["beta2"], r["branch"], r["trace_half"]] for r in rows],
        )
    lp = LayerPair(t12=t12, beta1=beta1, beta2=beta2)
    m = cycle(lp)
    cd = full_decompose(lp)
    form = multilayer_branch(cd)
    branch = classify(equidiagonalize(m), _tol(args))
    return _dumps(
        {
            "t12": _f(t12),
            "r12": _f(lp.r12),
            "nu": _f(lp.nu),
            "beta1": _f(beta1),
            "beta2": _f(beta2),
            "n": n,
            "cycle": _mat_obj(m),
            "core": {
                "xi1": _f(cd.xi1),
                "xi2": _f(cd.xi2),
                "xi": _f(cd.xi),
                "alpha_ml": _f(cd.alpha_ml),
                "boost_rapidity": _f(cd.boost_rapidity),
            },
            "branch": branch.value,
            "expform": {"r": _f(form.r), "theta": _f(form.theta), "sign": form.sign},
            "stack": _mat_obj(stack(lp, n)),
        }
    )


_COMMANDS = {
    "decompose": cmd_decompose,
    "classify": cmd_classify,
    "expform": cmd_expform,
    "power": cmd_power,
    "regions": cmd_regions,
    "activity": cmd_activity,
    "cavity": cmd_cavity,
    "multilayer": cmd_multilayer,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wigner-abcd",
        description="Analyze unimodular 2x2 transfer matrices through their one-exponent form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, matrix=False, plot=False, flags=()):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--tol", type=float, default=None,
                       help="classification tolerance (overrides WIGNER_ABCD_TOL)")
        p.add_argument("--file", default=None,
                       help="JSON input document; '-' reads stdin")
        if matrix:
            p.add_argument("--matrix", default=None, help="inline JSON 2x2 matrix")
        if plot:
            p.add_argument("--plot", default=None, metavar="PATH",
                           help="also render a figure to PATH")
        for flag, kw in flags:
            p.add_argument(flag, **kw)
        return p

    add("decompose", "canonical branch decomposition of a matrix", matrix=True)
    add("classify", "branch of a matrix", matrix=True)
    add("expform", "exponent (r, theta, sign) of a matrix", matrix=True)
    add("power", "n-fold power through the exponent form", matrix=True,
        flags=[("--n", dict(type=int, default=None))])
    add("regions", "branch map over the generator angle", plot=True,
        flags=[("--theta-steps", dict(type=int, default=None, dest="theta_steps"))])
    add("activity", "field trajectory in a rotary attenuating medium", plot=True,
        flags=[
            ("--gamma", dict(type=float, default=None)),
            ("--mu", dict(type=float, default=None)),
            ("--lambda", dict(type=float, default=None, dest="lambda_att")),
            ("--z", dict(type=float, default=None)),
            ("--steps", dict(type=int, default=None)),
        ])
    add("cavity", "resonator round-trip analysis", plot=True,
        flags=[
            ("--f", dict(type=float, default=None)),
            ("--x", dict(type=float, default=None)),
            ("--n", dict(type=int, default=None)),
        ])
    add("multilayer", "periodic stack analysis and sweep", plot=True,
        flags=[
            ("--t12", dict(type=float, default=None)),
            ("--beta1", dict(type=float, default=None)),
            ("--beta2", dict(type=float, default=None)),
            ("--n", dict(type=int, default=None)),
            ("--steps", dict(type=int, default=None)),
        ])
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = _COMMANDS[args.command](args)
    except (DomainError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
