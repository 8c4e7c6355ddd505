"""Time the compiled and numpy manipulation kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--size 64] [--repeat 20]
"""

import argparse
import timeit

import numpy as np

from forensic_transfer import kernels


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=64)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()

    plane = np.random.default_rng(0).random((args.size, args.size))
    backends = ["numpy"] + (["cython"] if kernels.HAVE_COMPILED else [])
    if not kernels.HAVE_COMPILED:
        print("compiled kernels not built; timing the numpy path only")

    cases = [(f"median w={w}", lambda b, w=w: kernels.median_filter2d(plane, w, backend=b)) for w in (3, 7, 11)]
    cases += [
        (f"blur sigma={s}", lambda b, k=kernels.gaussian_kernel(s): kernels.convolve2d(plane, k, backend=b))
        for s in (1.0, 3.0)
    ]
    print(f"{'kernel':<16}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases:
        times = [min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) for b in backends]
        line = f"{name:<16}" + "".join(f"{t * 1e3:>10.3f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
