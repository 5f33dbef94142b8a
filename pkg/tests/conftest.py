import cmath
import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from disk_squeeze.dynamics import QuadraticHamiltonian

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def disk_points(rmax=0.95):
    return st.builds(
        lambda r, t: rmax * math.sqrt(r) * cmath.exp(1j * t),
        st.floats(0.0, 1.0),
        st.floats(0.0, 2 * math.pi),
    )


def unstable_from_fixed_points(xm, xp, gamma=1.0):
    """Unstable Hamiltonian with ``xi_- = xm``, ``xi_+ = xp`` on the unit circle.

    ``xp`` must lie counterclockwise of ``xm`` by at most a half turn, which is
    what ``omega >= 0`` allows.
    """
    phi = (cmath.phase(xp / xm) / 2) % math.pi
    omega = 0.0 if abs(phi - math.pi / 2) < 1e-15 else gamma / math.tan(phi)
    return QuadraticHamiltonian(omega, (omega + 1j * gamma) / xp)


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)
