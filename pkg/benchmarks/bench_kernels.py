"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one row per workload with the best-of-N wall time for each backend
and the speedup.
"""

import argparse
import time
from fractions import Fraction

import numpy as np

from streamsparse import _pykernels
from streamsparse.stream import SparsifyConfig, SparsifierState
from streamsparse.streamkit import StreamSpec, generate

try:
    from streamsparse import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def weight_matrix(n, p, seed):
    rng = np.random.default_rng(seed)
    a = np.triu((rng.random((n, n)) < p) * rng.integers(1, 8, (n, n)), 1)
    return (a + a.T).astype(np.int64)


def stream_run(module, n, rho):
    """A full streaming run with the given kernel module patched in."""
    from streamsparse import kernels

    stream = generate(StreamSpec("gnp", {"n": n, "p": 0.5}, "uniform_shuffle", 0))
    cfg = SparsifyConfig(Fraction(1, 2), n, rho_override=rho, seed=0)

    def run():
        saved = kernels._kernels
        kernels._kernels = module
        try:
            state = SparsifierState.start(cfg)
            for u, v in stream:
                state.ingest(u, v)
        finally:
            kernels._kernels = saved

    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    rows = []
    for n in (16, 64, 128):
        mat = weight_matrix(n, 0.3, n)
        rows.append((f"stoer_wagner n={n}",
                     best_of(lambda: _pykernels.stoer_wagner(mat), args.repeat),
                     best_of(lambda: _kernels.stoer_wagner(mat), args.repeat)))
        rows.append((f"edge_strength n={n}",
                     best_of(lambda: _pykernels.edge_strength(mat, 0, 1), args.repeat),
                     best_of(lambda: _kernels.edge_strength(mat, 0, 1), args.repeat)))
    for n in (16, 32):
        rows.append((f"stream gnp n={n} rho=4",
                     best_of(stream_run(None, n, 4), max(1, args.repeat // 2)),
                     best_of(stream_run(_kernels, n, 4), max(1, args.repeat // 2))))

    print(f"{'workload':<26}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, py, cy in rows:
        print(f"{name:<26}{py:>12.5f}{cy:>12.5f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
