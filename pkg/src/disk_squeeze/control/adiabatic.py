"""Slow linear sweep of the squeezing coefficient.

Along ``alpha(t) = (1 - t) alpha0 + t alpha1`` with the gap open the
ground-state point ``xi_-(t)`` moves on a circle orthogonal to the unit
circle.  In a frame rotated so that ``alpha1 - alpha0`` is real, ``alpha``
has constant imaginary part ``b`` and the circle has center ``-i omega / b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..dynamics import EPS_CLS
from ..geometry import Circle, Line
from .bangbang import ControlError


class GapError(ControlError):
    def __init__(self, t: float):
        super().__init__(f"gap closes at t={t:.17g}")
        self.t = t


@dataclass(frozen=True)
class AdiabaticPath:
    samples: tuple  # (t, xi_minus) pairs
    carrier: Circle | Line

    @property
    def points(self) -> np.ndarray:
        return np.array([xi for _, xi in self.samples], dtype=np.complex128)

    def carrier_residual(self) -> float:
        """Largest ``| |xi - c|^2 - r^2 |`` (or distance to the line) over the samples."""
        pts = self.points
        if isinstance(self.carrier, Line):
            d = self.carrier.direction
            return float(np.max(np.abs((np.conj(d) * (pts - self.carrier.point)).imag)))
        c, r = self.carrier.center, self.carrier.radius
        return float(np.max(np.abs(np.abs(pts - c) ** 2 - r * r)))

    def orthogonality_residual(self) -> float:
        """``| |c|^2 - 1 - r^2 |`` for a circle; distance of a line from 0."""
        if isinstance(self.carrier, Line):
            return self.carrier.distance(0j)
        c, r = self.carrier.center, self.carrier.radius
        return abs(abs(c) ** 2 - 1.0 - r * r)

    def to_json(self) -> dict:
        return {
            "samples": [{"t": t, "xi_minus": [xi.real, xi.imag]} for t, xi in self.samples],
            "carrier": self.carrier.to_json(),
        }


def ground_point(omega: float, alpha: complex) -> complex:
    """``xi_- = conj(alpha) / (omega + lambda)``, free of the ``(omega - lambda)/alpha`` cancellation."""
    lam = math.sqrt((omega - abs(alpha)) * (omega + abs(alpha)))
    return alpha.conjugate() / (omega + lam)


def gap_closure(omega: float, alpha0: complex, alpha1: complex) -> float | None:
    """First ``t`` in [0, 1] with ``|alpha(t)| >= omega``, or None when the gap stays open."""
    limit = omega * omega * (1.0 - EPS_CLS)
    if abs(alpha0) ** 2 >= limit:
        return 0.0
    # |alpha|^2 is convex in t, so the maximum on [0, 1] is at an end
    if abs(alpha1) ** 2 < limit:
        return None
    d = alpha1 - alpha0
    qa = abs(d) ** 2
    qb = 2.0 * (alpha0.conjugate() * d).real
    qc = abs(alpha0) ** 2 - omega * omega
    t = (-qb + math.sqrt(max(qb * qb - 4.0 * qa * qc, 0.0))) / (2.0 * qa)
    return min(max(t, 0.0), 1.0)


def adiabatic_path(omega: float, alpha0, alpha1, samples: int = 101) -> AdiabaticPath:
    omega = float(omega)
    alpha0, alpha1 = complex(alpha0), complex(alpha1)
    if not omega > 0:
        raise ControlError("omega must be positive")
    if samples < 1:
        raise ControlError("samples must be positive")
    t_gap = gap_closure(omega, alpha0, alpha1)
    if t_gap is not None:
        raise GapError(t_gap)

    ts = [0.0] if samples == 1 else [j / (samples - 1) for j in range(samples)]
    pts = tuple((t, ground_point(omega, (1.0 - t) * alpha0 + t * alpha1)) for t in ts)

    delta = alpha1 - alpha0
    if delta == 0:
        xi = pts[0][1]
        return AdiabaticPath(pts, Line(0j, xi / abs(xi) if xi != 0 else 1.0))
    rot = delta.conjugate() / abs(delta)  # e^{is} with s = -arg(alpha1 - alpha0)
    b = (rot * alpha0).imag
    if abs(b) <= EPS_CLS * max(omega, abs(alpha0), abs(alpha1)):
        return AdiabaticPath(pts, Line(0j, rot))
    center = rot * (-1j * omega / b)
    radius = math.sqrt((omega / b - 1.0) * (omega / b + 1.0))
    return AdiabaticPath(pts, Circle(center, radius))

