"""Command line interface.

Complex numbers are written ``a+bi``, ``a-bi``, ``a`` or ``bi`` with no
spaces, e.g. ``0.5``, ``-1e-3+2i``, ``i``.  A value that starts with a minus
sign must be attached with ``=`` (``--alpha1=-1+i``) so argparse does not read
it as an option.

Exit codes: 0 success, 1 failed verification or infeasible control
problem, 2 bad input.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys

from . import report
from .control import adiabatic as adb
from .control import bangbang as bb
from .control import reachable as rs
from .control.arcs import ArcPolygon, EntireDisk
from .dynamics import QuadraticHamiltonian, classify, evolve, fixed_points_of, period, trajectory_curve
from .geometry import GeometryError
from .svg import Picture
from . import verify as vf

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(
    rf"^(?:(?P<re>[+-]?{_NUM})(?P<im>[+-](?:{_NUM})?i)?|(?P<pure>[+-]?(?:{_NUM})?i))$"
)

COMPLEX_HELP = "complex literal: a+bi, a-bi, a or bi (no spaces)"


def parse_complex(text: str) -> complex:
    m = _COMPLEX.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"malformed complex literal {text!r} ({COMPLEX_HELP})")

    def imag(part: str) -> float:
        body = part[:-1]
        if body in ("", "+"):
            return 1.0
        if body == "-":
            return -1.0
        return float(body)

    if m.group("pure") is not None:
        return complex(0.0, imag(m.group("pure")))
    re_part = float(m.group("re"))
    im = m.group("im")
    return complex(re_part, imag(im) if im else 0.0)


def _real(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return x


def _default_seed() -> int:
    raw = os.environ.get("DISK_SQUEEZE_SEED", "")
    try:
        return int(raw) if raw else 0
    except ValueError:
        return 0


class UsageError(Exception):
    pass


class Failure(Exception):
    """Carries a report for a run that completed but did not succeed."""

    def __init__(self, doc):
        super().__init__("failure")
        self.doc = doc


# ---------------------------------------------------------------------------
# commands


def _hamiltonian(omega, alpha) -> QuadraticHamiltonian:
    H = QuadraticHamiltonian(omega, alpha)
    if H.is_zero:
        raise UsageError("zero Hamiltonian: omega and alpha are both 0")
    return H


def _classify_doc(H: QuadraticHamiltonian) -> dict:
    cls = classify(H)
    xm, xp = fixed_points_of(H)
    doc = {"class": cls.kind}
    if cls.lam is not None:
        doc["lambda"] = cls.lam
    if cls.gamma is not None:
        doc["gamma"] = cls.gamma
    doc.update({"xi_minus": xm, "xi_plus": xp, "spectrum": cls.spectrum})
    return doc


def cmd_classify(args):
    H = _hamiltonian(args.omega, args.alpha)
    return report.make_report("classify", {"omega": args.omega, "alpha": args.alpha}, **_classify_doc(H)), None


def cmd_trajectory(args):
    H = _hamiltonian(args.omega, args.alpha)
    t_max = args.t_max
    if t_max is None:
        t_max = period(H) or 5.0
    if t_max < 0:
        raise UsageError("t-max must be nonnegative")
    if args.samples < 1:
        raise UsageError("samples must be positive")
    n = 1 if t_max == 0 else args.samples
    ts = [0.0] if n == 1 else [t_max * j / (n - 1) for j in range(n)]
    pts = [evolve(H, args.z0, t) for t in ts]
    carrier, kind = trajectory_curve(H, args.z0)
    carrier_doc = dict(carrier.to_json(), **{"class": kind})
    doc = report.make_report(
        "trajectory",
        {"omega": args.omega, "alpha": args.alpha, "z0": args.z0, "t_max": t_max, "samples": n},
        **_classify_doc(H),
        carrier=carrier_doc,
        trajectory=[{"t": t, "z": z} for t, z in zip(ts, pts)],
    )

    def draw(pic):
        pic.carrier(carrier)
        pic.polyline(pts)
        pic.point(args.z0)

    return doc, draw


def _stable_h1(args) -> QuadraticHamiltonian:
    if args.xi is not None:
        return QuadraticHamiltonian.with_ground_state(args.omega1, args.xi)
    if args.alpha1 is None:
        raise UsageError("give --alpha1 or --xi for H1")
    return _hamiltonian(args.omega1, args.alpha1)


def cmd_bangbang(args):
    H0 = QuadraticHamiltonian(args.omega0)
    if not args.omega0 > 0:
        raise UsageError("omega0 must be positive")
    H1 = _stable_h1(args)
    xi = bb._stable_xi(H1)
    inputs = {
        "z0": args.z0, "zf": args.zf, "omega0": args.omega0,
        "omega1": H1.omega, "alpha1": H1.alpha, "mode": args.mode, "k": args.k,
    }
    fields = {"xi_minus": xi, "xi_mod": abs(xi)}
    if args.mode == "feasible":
        if args.k is None:
            raise UsageError("feasible mode needs --k")
        if args.k < 0:
            raise UsageError("k must be >= 0")
        bounds = bb.bang_bang_bounds(abs(args.z0), abs(xi), args.k)
        fields.update(feasible=bb.bang_bang_feasible(args.z0, args.zf, args.k, H1), bounds=bounds)
        return report.make_report("bangbang", inputs, **fields), None
    if args.mode == "min-switches":
        fields["k"] = bb.min_switches(args.z0, args.zf, H1)
        return report.make_report("bangbang", inputs, **fields), None

    k = args.k if args.k is not None else bb.min_switches(args.z0, args.zf, H1)
    inputs["k"] = k
    try:
        seq = bb.synthesize_pulses(args.z0, args.zf, k, H0, H1)
    except bb.InfeasibleError as exc:
        fields.update(feasible=False, error=str(exc), bounds=exc.bounds)
        raise Failure(report.make_report("bangbang", inputs, **fields)) from None
    end = seq.simulate(args.z0, H0, H1)
    err = abs(end - args.zf)
    tol = args.tolerance
    fields.update(
        feasible=True,
        pulses=seq,
        total_time=seq.total_time,
        endpoint=end,
        endpoint_error=err,
        tolerance=tol,
        **{"pass": err <= tol},
    )
    doc = report.make_report("bangbang", inputs, **fields)
    if err > tol:
        raise Failure(doc)
    return doc, None


def cmd_reachable(args):
    H0 = _hamiltonian(args.omega0, args.alpha0)
    H1 = _hamiltonian(args.omega1, args.alpha1)
    inputs = {
        "case": args.case, "z0": args.z0, "omega0": args.omega0, "alpha0": args.alpha0,
        "omega1": args.omega1, "alpha1": args.alpha1,
    }
    if args.case == "free":
        inputs["steps"] = args.steps
        region = rs.free_reachable_set(args.z0, H0, H1, args.steps)
    else:
        region = rs.unstable_reachable_set(args.z0, H0, H1)
    fields = dict(region.to_json())
    if isinstance(region, ArcPolygon) and not region.degenerate:
        fields["internal_angles"] = region.internal_angles()
    doc = report.make_report("reachable", inputs, **fields)

    def draw(pic):
        if isinstance(region, EntireDisk):
            pic.whole_disk()
        elif region.degenerate:
            pic.arc(region.edges[0])
        else:
            pic.region(region)
        if isinstance(region, ArcPolygon):
            for v in region.vertices:
                pic.point(v)

    return doc, draw


def cmd_adiabatic(args):
    path = adb.adiabatic_path(args.omega, args.alpha0, args.alpha1, args.samples)
    doc = report.make_report(
        "adiabatic",
        {"omega": args.omega, "alpha0": args.alpha0, "alpha1": args.alpha1, "samples": args.samples},
        **path.to_json(),
        carrier_residual=path.carrier_residual(),
        orthogonality_residual=path.orthogonality_residual(),
    )

    def draw(pic):
        pic.carrier(path.carrier)
        pts = list(path.points)
        pic.polyline(pts)
        pic.point(pts[0])
        pic.point(pts[-1])

    return doc, draw


def _parse_overrides(items) -> dict:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or name not in vf.DEFAULT_TOLERANCES:
            raise UsageError(f"bad tolerance override {item!r}; known names: {', '.join(vf.DEFAULT_TOLERANCES)}")
        try:
            out[name] = float(value)
        except ValueError:
            raise UsageError(f"bad tolerance value in {item!r}") from None
    return out


def cmd_verify(args):
    overrides = _parse_overrides(args.tol)
    if args.N < 16:
        raise UsageError("N must be at least 16")
    suites = vf.SUITES if args.suite == "all" else (args.suite,)
    results = {name: vf.run_suite(name, args.seed, N=args.N, tol=overrides) for name in suites}
    ok = all(c["pass"] for checks in results.values() for c in checks)
    doc = report.make_report(
        "verify",
        {"suite": args.suite, "N": args.N, "seed": args.seed},
        tolerances={**vf.DEFAULT_TOLERANCES, **overrides},
        suites=results,
        **{"pass": ok},
    )
    if not ok:
        raise Failure(doc)
    return doc, None


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="disk-squeeze",
        description="Squeezed states as points of the Poincare disk: flows, control and checks.",
        epilog=COMPLEX_HELP + ".  Values starting with '-' need the '=' form, e.g. --alpha1=-1+i.  "
        "Exit codes: 0 ok, 1 failed check or infeasible, 2 bad input.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, svg=False):
        sp.add_argument("--out", help="write the result here instead of stdout")
        sp.add_argument("--format", choices=("json", "svg") if svg else ("json",), default="json")

    sp = sub.add_parser("classify", help="spectral class and fixed points of H = w a*a + (alpha/2)a^2 + h.c.")
    sp.add_argument("--omega", type=_real, required=True)
    sp.add_argument("--alpha", type=parse_complex, required=True, help=COMPLEX_HELP)
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("trajectory", help="sampled orbit z(t) and its invariant curve")
    sp.add_argument("--omega", type=_real, required=True)
    sp.add_argument("--alpha", type=parse_complex, required=True, help=COMPLEX_HELP)
    sp.add_argument("--z0", type=parse_complex, default=0j, help=COMPLEX_HELP)
    sp.add_argument("--t-max", type=_real, default=None, help="default: one period (stable) or 5")
    sp.add_argument("--samples", type=int, default=201)
    common(sp, svg=True)
    sp.set_defaults(func=cmd_trajectory)

    sp = sub.add_parser("bangbang", help="switching between H0 = w0 a*a and a stable H1")
    sp.add_argument("--z0", type=parse_complex, default=0j, help=COMPLEX_HELP)
    sp.add_argument("--zf", type=parse_complex, required=True, help=COMPLEX_HELP)
    sp.add_argument("--omega0", type=_real, default=1.0)
    sp.add_argument("--omega1", type=_real, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--alpha1", type=parse_complex, help=COMPLEX_HELP)
    group.add_argument("--xi", type=parse_complex, help="ground-state point of H1 instead of --alpha1")
    sp.add_argument("--mode", choices=("feasible", "min-switches", "synthesize"), default="synthesize")
    sp.add_argument("--k", type=int, default=None, help="number of H1 pulses")
    sp.add_argument("--tolerance", type=_real, default=1e-6, help="endpoint tolerance for synthesize")
    common(sp)
    sp.set_defaults(func=cmd_bangbang)

    sp = sub.add_parser("reachable", help="reachable set of two free or two unstable Hamiltonians")
    sp.add_argument("--case", choices=("free", "unstable"), required=True)
    sp.add_argument("--z0", type=parse_complex, default=0j, help=COMPLEX_HELP)
    sp.add_argument("--omega0", type=_real, required=True)
    sp.add_argument("--alpha0", type=parse_complex, required=True, help=COMPLEX_HELP)
    sp.add_argument("--omega1", type=_real, required=True)
    sp.add_argument("--alpha1", type=parse_complex, required=True, help=COMPLEX_HELP)
    sp.add_argument("--steps", type=int, choices=(1, 2, 3), default=2, help="free case only")
    common(sp, svg=True)
    sp.set_defaults(func=cmd_reachable)

    sp = sub.add_parser("adiabatic", help="path of the ground-state point under a linear sweep of alpha")
    sp.add_argument("--omega", type=_real, required=True)
    sp.add_argument("--alpha0", type=parse_complex, required=True, help=COMPLEX_HELP)
    sp.add_argument("--alpha1", type=parse_complex, required=True, help=COMPLEX_HELP)
    sp.add_argument("--samples", type=int, default=101)
    common(sp, svg=True)
    sp.set_defaults(func=cmd_adiabatic)

    sp = sub.add_parser("verify", help="run the Fock-space and control cross-checks")
    sp.add_argument("--suite", choices=vf.SUITES + ("all",), default="all")
    sp.add_argument("--N", type=int, default=128, help="Fock truncation")
    sp.add_argument("--seed", type=int, default=_default_seed(), help="default: $DISK_SQUEEZE_SEED or 0")
    sp.add_argument("--tol", action="append", metavar="NAME=VALUE", help="override a tolerance")
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def _emit(args, doc, draw):
    text = report.dumps(doc)
    if getattr(args, "format", "json") == "svg" and draw is not None:
        pic = Picture(text)
        draw(pic)
        text = pic.render()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, draw = args.func(args)
    except Failure as exc:
        _emit(args, exc.doc, None)
        return 1
    except (UsageError, GeometryError, ValueError) as exc:
        print(f"disk-squeeze {args.command}: error: {exc}", file=sys.stderr)
        return 2
    _emit(args, doc, draw)
    return 0


if __name__ == "__main__":
    sys.exit(main())
