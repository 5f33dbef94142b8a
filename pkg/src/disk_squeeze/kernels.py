"""Kernel backend selection.

The compiled extension is used when it was built; set ``DISK_SQUEEZE_PURE=1``
to force the numpy fallback.
"""

import os

import numpy as np

from . import _pykernels
from .dynamics import FREE, STABLE, classify

if os.environ.get("DISK_SQUEEZE_PURE", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

squeezed_amplitudes = _impl.squeezed_amplitudes
simulate_sequence = _impl.simulate_sequence
mobius_orbit = _impl.mobius_orbit


def hamiltonian_params(hamiltonians):
    """Pack Hamiltonians into the flat arrays taken by :func:`simulate_sequence`."""
    kinds, rates = [], []
    for H in hamiltonians:
        cls = classify(H)
        kinds.append({STABLE: 0, FREE: 1}.get(cls.kind, 2))
        rates.append(cls.rate or 0.0)
    return (
        np.array([H.omega for H in hamiltonians], dtype=np.float64),
        np.array([H.alpha for H in hamiltonians], dtype=np.complex128),
        np.array(kinds, dtype=np.int64),
        np.array(rates, dtype=np.float64),
    )
