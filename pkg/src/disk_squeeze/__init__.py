"""Squeezed states of a single mode as points of the Poincare disk.

A squeezed state annihilated by ``a + z a*`` is labelled by ``|z| < 1``.
Quadratic Hamiltonians move these labels by Moebius maps, which is what the
modules here compute, check against a truncated Fock-space model, and use
for control problems.
"""

from .dynamics import QuadraticHamiltonian, classify, evolve, fixed_points_of, flow, trajectory_curve
from .geometry import MoebiusMap, hyperbolic_distance

__all__ = [
    "MoebiusMap",
    "QuadraticHamiltonian",
    "classify",
    "evolve",
    "fixed_points_of",
    "flow",
    "hyperbolic_distance",
    "trajectory_curve",
]

__version__ = "0.1.0"
