"""Cross-checks between the disk geometry, the Fock-space model and the control solvers.

Each suite returns a list of checks ``{"name", "residual", "tolerance", "pass"}``.
Randomness comes only from the generator passed in, so a fixed seed gives
identical reports.
"""

from __future__ import annotations

import math

import numpy as np

from . import fock_oracle as fo
from .control import bangbang as bb
from .dynamics import QuadraticHamiltonian, evolve

SUITES = ("overlap", "flow", "metric", "control")

DEFAULT_TOLERANCES = {
    "overlap": 1e-10,
    "hs_closed_form": 1e-12,
    "hs_truncated": 1e-9,
    "flow": 1e-6,
    "metric_low": 3.5,
    "metric_high": 4.5,
    "soundness": 1e-9,
    "synthesis": 1e-6,
    "closed_form": 1e-12,
    "asymptotic": 0.01,
}

FLOW_CASES = ((2.0, 1.0), (1.0, 1.0), (0.0, 1.0))
METRIC_POINTS = (0j, 0.5 + 0j, 0.5j)


def _check(name: str, residual: float, tol: float, ok: bool | None = None, **extra) -> dict:
    ok = residual <= tol if ok is None else ok
    doc = {"name": name, "residual": float(residual), "tolerance": float(tol), "pass": bool(ok)}
    doc.update(extra)
    return doc


def random_disk_points(rng: np.random.Generator, n: int, rmax: float) -> np.ndarray:
    r = rmax * np.sqrt(rng.uniform(0.0, 1.0, n))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))


def suite_overlap(rng, N: int = fo.DEFAULT_DIM, tol=None, pairs: int = 1000) -> list[dict]:
    tol = {**DEFAULT_TOLERANCES, **(tol or {})}
    zs = random_disk_points(rng, pairs, 0.8)
    ws = random_disk_points(rng, pairs, 0.8)
    worst = 0.0
    for z, w in zip(zs, ws):
        z, w = complex(z), complex(w)
        num = fo.squeezed_state_vector(z, N).inner(fo.squeezed_state_vector(w, N))
        worst = max(worst, abs(num - fo.overlap(z, w)))
    closed = abs(fo.hs_distance_sq(0, 0.5) - (2.0 - math.sqrt(3.0)))
    trunc = abs(
        fo.projection_distance_sq(fo.squeezed_state_vector(0, N), fo.squeezed_state_vector(0.5, N))
        - fo.hs_distance_sq(0, 0.5)
    )
    return [
        _check("overlap_closed_vs_truncated", worst, tol["overlap"], pairs=pairs),
        _check("hs_distance_closed_form", closed, tol["hs_closed_form"]),
        _check("hs_distance_truncated", trunc, tol["hs_truncated"]),
    ]


def flow_residual(omega: float, alpha: complex, N: int = fo.DEFAULT_DIM, samples: int = 20, zmax: float = 0.8):
    """Largest gap between the Fock evolution and the disk flow from ``z0 = 0``.

    Sample times are spread over an interval on which ``|z(t)| <= zmax``.
    """
    H = QuadraticHamiltonian(omega, alpha)
    # longest time keeping |z| <= zmax, found on a coarse grid
    t_end, dt = 0.0, 0.01
    while t_end < 10.0 and abs(evolve(H, 0, t_end + dt)) <= zmax:
        t_end += dt
    ts = np.linspace(t_end / samples, t_end, samples)
    prop = fo.Propagator(fo.hamiltonian_matrix(H, N))
    psi0 = fo.squeezed_state_vector(0, N)
    worst = 0.0
    for t in ts:
        z_fock = fo.extract_disk_point(prop(psi0, t))
        worst = max(worst, abs(z_fock - evolve(H, 0, t)))
    return worst, float(t_end)


def suite_flow(rng, N: int = fo.DEFAULT_DIM, tol=None) -> list[dict]:
    tol = {**DEFAULT_TOLERANCES, **(tol or {})}
    out = []
    for omega, alpha in FLOW_CASES:
        res, t_end = flow_residual(omega, alpha, N)
        out.append(_check(f"flow_omega{omega:g}_alpha{alpha:g}", res, tol["flow"], t_max=t_end))
    return out


def metric_table(z: complex, steps=(1e-2, 5e-3, 2.5e-3)) -> list[tuple[float, float]]:
    """``(|dz|, ratio - 1)`` rows with ``dz`` along the direction ``(1 + i)/sqrt 2``."""
    u = (1 + 1j) / math.sqrt(2.0)
    return [(h, fo.fubini_study_ratio(z, h * u) - 1.0) for h in steps]


def suite_metric(rng, N: int = fo.DEFAULT_DIM, tol=None) -> list[dict]:
    tol = {**DEFAULT_TOLERANCES, **(tol or {})}
    lo, hi = tol["metric_low"], tol["metric_high"]
    out = []
    for z in METRIC_POINTS:
        rows = metric_table(z)
        factor = rows[0][1] / rows[1][1]
        out.append(
            _check(
                f"metric_reduction_z{z.real:g}{z.imag:+g}i",
                abs(factor - 4.0),
                max(4.0 - lo, hi - 4.0),
                ok=lo <= factor <= hi,
                factor=factor,
                table=[{"dz": h, "ratio_minus_one": e} for h, e in rows],
            )
        )
    return out


def soundness_residual(rng, n: int = 10_000, kmax: int = 4) -> float:
    """Largest excursion of simulated moduli outside ``[r, R]`` (0 when inside)."""
    worst = 0.0
    H0 = QuadraticHamiltonian(1.0)
    per = max(1, n // 20)
    done = 0
    while done < n:
        m = min(per, n - done)
        k = int(rng.integers(1, kmax + 1))
        x = float(rng.uniform(0.05, 0.9))
        xi = x * np.exp(2j * np.pi * rng.uniform())
        H1 = QuadraticHamiltonian.with_ground_state(float(rng.uniform(0.5, 2.0)), xi)
        z0 = complex(random_disk_points(rng, 1, 0.9)[0])
        durations = rng.exponential(1.0, size=(m, 2 * k + 1))
        zs = bb.simulate_batch(z0, durations, H0, H1)
        r, R = bb.bang_bang_bounds(abs(z0), abs(bb._stable_xi(H1)), k).interval()
        mods = np.abs(zs)
        worst = max(worst, float(np.max(np.maximum(r - mods, mods - R))), 0.0)
        done += m
    return worst


def synthesis_residual(rng, n: int = 1000, kmax: int = 4) -> float:
    H0 = QuadraticHamiltonian(1.0)
    worst = 0.0
    for _ in range(n):
        k = int(rng.integers(1, kmax + 1))
        xi = float(rng.uniform(0.1, 0.9)) * np.exp(2j * np.pi * rng.uniform())
        H1 = QuadraticHamiltonian.with_ground_state(float(rng.uniform(0.5, 2.0)), xi)
        z0 = complex(random_disk_points(rng, 1, 0.9)[0])
        r, R = bb.bang_bang_bounds(abs(z0), abs(xi), k).interval()
        mod = float(rng.uniform(r, min(R, 0.999)))
        zf = mod * np.exp(2j * np.pi * rng.uniform())
        seq = bb.synthesize_pulses(z0, zf, k, H0, H1)
        worst = max(worst, abs(seq.simulate(z0, H0, H1) - zf))
    return worst


def closed_form_residual(rng, n: int = 200, kmax: int = 64) -> float:
    worst = 0.0
    for _ in range(n):
        z, x = float(rng.uniform(0, 0.99)), float(rng.uniform(0.01, 0.99))
        R = bb.bang_bang_bounds(z, x, kmax).R
        for k in range(kmax + 1):
            worst = max(worst, abs(bb.closed_form_R(z, x, k) - R[k]))
    return worst


def asymptotic_residual(rng, n: int = 50) -> float:
    """``|ratio - 1|`` at the first ``k`` with ``Delta^{2k} <= 1e-4``."""
    worst = 0.0
    for _ in range(n):
        z, x = float(rng.uniform(0, 0.95)), float(rng.uniform(0.05, 0.9))
        delta = (1 - x) / (1 + x)
        k = math.ceil(math.log(1e-4) / (2 * math.log(delta)))
        R = bb.bang_bang_bounds(z, x, k).R[k]
        worst = max(worst, abs((1.0 - R) / bb.asymptotic_gap(z, x, k) - 1.0))
    return worst


def suite_control(rng, N: int = fo.DEFAULT_DIM, tol=None, samples: int = 10_000, targets: int = 1000) -> list[dict]:
    tol = {**DEFAULT_TOLERANCES, **(tol or {})}
    return [
        _check("bang_bang_soundness", soundness_residual(rng, samples), tol["soundness"], samples=samples),
        _check("pulse_synthesis", synthesis_residual(rng, targets), tol["synthesis"], targets=targets),
        _check("closed_form_R", closed_form_residual(rng), tol["closed_form"]),
        _check("asymptotic_ratio", asymptotic_residual(rng), tol["asymptotic"]),
    ]


RUNNERS = {
    "overlap": suite_overlap,
    "flow": suite_flow,
    "metric": suite_metric,
    "control": suite_control,
}


def run_suite(name: str, seed: int, N: int = fo.DEFAULT_DIM, tol=None) -> list[dict]:
    rng = np.random.default_rng(seed)
    return RUNNERS[name](rng, N=N, tol=tol)
