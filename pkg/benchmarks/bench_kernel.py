"""Compare the compiled and pure-Python interval sweep kernels.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import timeit

from ecpsl import _pykernel

try:
    from ecpsl import _ckernel
except ImportError:
    _ckernel = None


def workload(rng, exp, count, intervals):
    out = []
    for _ in range(count):
        pts = sorted(rng.sample(range(1 << min(exp, 60)), 2 * intervals))
        shift = exp - min(exp, 60)
        out.append(tuple(p << shift for p in pts))
    return out


def bench(kernel, data, repeat):
    pairs = list(zip(data, data[1:]))

    def body():
        for a, b in pairs:
            for op in (0, 1, 2, 3):
                kernel.combine(a, b, op)

    return min(timeit.repeat(body, number=1, repeat=repeat)) / (4 * len(pairs))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(0)
    cases = [("scale 2^6, 4 intervals", 6, 4), ("scale 2^40, 32 intervals", 40, 32),
             ("scale 2^100, 32 intervals", 100, 32)]
    print(f"{'workload':28} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    for name, exp, k in cases:
        kk = min(k, (1 << exp) // 2)
        data = workload(rng, exp, 400, kk)
        py = bench(_pykernel, data, args.repeat) * 1e6
        if _ckernel is None:
            print(f"{name:28} {py:10.2f} {'n/a':>10} {'n/a':>8}")
            continue
        cy = bench(_ckernel, data, args.repeat) * 1e6
        print(f"{name:28} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
