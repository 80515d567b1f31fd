"""Forward plus backward time per cell kind for the numpy and numba kernels.

    python benchmarks/bench_backends.py [--repeat 5] [--kinds mgu,gru]

Two shapes are timed: the MNIST-28 training batch, where dense BLAS calls
dominate, and a small-state, long-sequence single example, where the
per-step interpreter overhead of the numpy path dominates.
"""
from __future__ import annotations

import argparse
import time

from grnn import kernels
from grnn.bptt import backward_sequence, forward_sequence
from grnn.cells import CellKind, init_params
from grnn.numkernel import make_rng

SHAPES = {
    "rows28 B=100 T=28 n=50 m=28": (100, 28, 50, 28),
    "long B=1 T=784 n=16 m=1": (1, 784, 16, 1),
}


def time_once(kind: CellKind, shape, backend: str, repeat: int) -> float:
    B, T, n, m = shape
    rng = make_rng(0)
    params = init_params(kind, n, m, rng)
    xs = rng.standard_normal((B, T, m))
    up = rng.standard_normal((B, n))
    previous = kernels.active
    kernels.set_backend(backend)
    try:
        backward_sequence(params, forward_sequence(params, xs)[1], up)  # compile / warm up
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            _, tape = forward_sequence(params, xs)
            backward_sequence(params, tape, up)
            best = min(best, time.perf_counter() - start)
    finally:
        kernels.active = previous
    return best


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--kinds", default=",".join(k.name.lower() for k in CellKind))
    args = parser.parse_args(argv)
    kinds = [CellKind.parse(k) for k in args.kinds.split(",")]
    backends = ["numpy"] + (["numba"] if kernels.numba_available() else [])
    for label, shape in SHAPES.items():
        print(f"\n{label}  (best of {args.repeat}, ms)")
        print(f"{'cell':<6}" + "".join(f"{b:>10}" for b in backends) +
              ("   speedup" if len(backends) == 2 else ""))
        for kind in kinds:
            ms = [1000 * time_once(kind, shape, b, args.repeat) for b in backends]
            line = f"{kind.name:<6}" + "".join(f"{t:>10.2f}" for t in ms)
            if len(ms) == 2:
                line += f"{ms[0] / ms[1]:>9.2f}x"
            print(line)


if __name__ == "__main__":
    main()
