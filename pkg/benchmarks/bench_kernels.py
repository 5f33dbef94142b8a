"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported directly, so the result does not depend on
DISK_SQUEEZE_PURE.  Outputs are compared before timing.
"""

import argparse
import timeit

import numpy as np

from disk_squeeze import _pykernels
from disk_squeeze.dynamics import QuadraticHamiltonian
from disk_squeeze.kernels import hamiltonian_params

try:
    from disk_squeeze import _ckernels
except ImportError:
    _ckernels = None


def cases(rng):
    Hs = [QuadraticHamiltonian(1.0), QuadraticHamiltonian(2.0, 1 + 0.5j), QuadraticHamiltonian(1.0, 1j)]
    params = hamiltonian_params(Hs)
    m, n = 10_000, 9
    z0 = 0.9 * np.sqrt(rng.uniform(size=m)) * np.exp(2j * np.pi * rng.uniform(size=m))
    durations = rng.exponential(1.0, size=(m, n))
    indices = np.array([j % 3 for j in range(n)], dtype=np.int64)
    return {
        "simulate_sequence 10000x9": lambda mod: mod.simulate_sequence(z0, durations, indices, *params),
        "squeezed_amplitudes n=4096": lambda mod: mod.squeezed_amplitudes(0.7 - 0.2j, 4096),
        "mobius_orbit n=100000": lambda mod: mod.mobius_orbit(2 + 0j, 1 + 0j, 1 + 0j, 2 + 0j, 0.1j, 100_000),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    if _ckernels is None:
        print("compiled kernels not built; only the python backend is timed")
    print(f"{'kernel':32s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s} {'max diff':>9s}")
    for name, fn in cases(rng).items():
        py = min(timeit.repeat(lambda fn=fn: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:32s} {py:10.2f}")
            continue
        diff = float(np.max(np.abs(np.asarray(fn(_pykernels)) - np.asarray(fn(_ckernels)))))
        cy = min(timeit.repeat(lambda fn=fn: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32s} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x {diff:9.1e}")


if __name__ == "__main__":
    main()
