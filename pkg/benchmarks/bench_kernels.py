"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each row checks that both backends agree before reporting timings. The
numba column excludes JIT compilation (one warm-up call first).
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from lettericity._kernels import numba_impl, numpy_impl


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def _cases(quick):
    graphs = {n: [numpy_impl.random_adjacency(n, s) for s in range(8 if quick else 32)]
              for n in (14, 20, 40, 60)}

    def scan(kernel, n, *extra):
        return lambda impl: [getattr(impl, kernel)(m, *extra) for m in graphs[n]]

    yield "exists_triple n=60", scan("exists_triple", 60)
    yield "exists_separated n=40", scan("exists_separated", 40)
    yield "exists_core k=2 n=20", scan("exists_core", 20, 2)
    yield "exists_core k=3 n=14", scan("exists_core", 14, 3)
    trials = 20 if quick else 100
    yield f"event_hits A n=60 x{trials}", lambda impl: impl.event_hits(0, 60, 0, 1, 0, trials)
    yield f"event_hits B n=40 x{trials}", lambda impl: impl.event_hits(1, 40, 0, 1, 0, trials)
    yield f"event_hits C(2) n=16 x{trials}", lambda impl: impl.event_hits(2, 16, 2, 1, 0, trials)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args(argv)

    print(f"{'kernel':<30}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for name, run in _cases(args.quick):
        run(numba_impl)  # compile
        t_np, out_np = _best(lambda: run(numpy_impl), args.repeat)
        t_nb, out_nb = _best(lambda: run(numba_impl), args.repeat)
        if np.any(np.asarray(out_np) != np.asarray(out_nb)):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<30}{t_np:>10.4f}{t_nb:>10.4f}{t_np / max(t_nb, 1e-9):>8.1f}x")


if __name__ == "__main__":
    main()
