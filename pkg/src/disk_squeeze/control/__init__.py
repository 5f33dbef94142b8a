"""Control problems: bang-bang pulses, reachable sets, adiabatic paths."""

from .adiabatic import AdiabaticPath, GapError, adiabatic_path
from .arcs import Arc, ArcPolygon, EntireDisk
from .bangbang import (
    ControlError,
    InfeasibleError,
    PulseSequence,
    ReachabilityBounds,
    bang_bang_bounds,
    bang_bang_feasible,
    closed_form_R,
    min_switches,
    simulate_batch,
    synthesize_pulses,
)
from .reachable import (
    free_reachable_set,
    reachable_in_two_free,
    reachable_in_two_unstable,
    unstable_reachable_set,
)

__all__ = [
    "AdiabaticPath",
    "Arc",
    "ArcPolygon",
    "ControlError",
    "EntireDisk",
    "GapError",
    "InfeasibleError",
    "PulseSequence",
    "ReachabilityBounds",
    "adiabatic_path",
    "bang_bang_bounds",
    "bang_bang_feasible",
    "closed_form_R",
    "free_reachable_set",
    "min_switches",
    "reachable_in_two_free",
    "reachable_in_two_unstable",
    "simulate_batch",
    "synthesize_pulses",
    "unstable_reachable_set",
]
