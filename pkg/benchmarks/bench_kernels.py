"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 256,1024,4096]
"""
import argparse
import timeit

import numpy as np

from univmean import _fallback

try:
    from univmean import _kernels
except ImportError:
    _kernels = None


def cases(n, rng):
    t = np.linspace(0, 2 * np.pi, n, endpoint=False)
    # a curve with many self-intersections keeps the crossing kernel honest
    w = np.exp(1j * t) + 0.6 * np.exp(5j * t)
    # small, slowly decaying tail: bounded reciprocal and no subnormals
    coeffs = np.concatenate([[1.0], 0.05 * rng.normal(size=n - 1) * 0.9 ** np.arange(1, n)]).astype(complex)
    z = 0.7 * np.exp(1j * t)
    return {
        "segment_crossings": (w.real.copy(), w.imag.copy()),
        "horner": (coeffs, z),
        "reciprocal": (coeffs,),
        "winding_number": (w,),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", default="256,1024,4096")
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; only the fallback is available")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<18} {'n':>6} {'python [ms]':>12} {'cython [ms]':>12} {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        for name, inputs in cases(n, rng).items():
            runs = 1 if name == "segment_crossings" and n > 2048 else args.repeat
            py = min(timeit.repeat(lambda: getattr(_fallback, name)(*inputs), number=1, repeat=runs))
            if _kernels is None:
                print(f"{name:<18} {n:>6} {py * 1e3:>12.3f} {'-':>12} {'-':>8}")
                continue
            cy = min(timeit.repeat(lambda: getattr(_kernels, name)(*inputs), number=1, repeat=runs))
            print(f"{name:<18} {n:>6} {py * 1e3:>12.3f} {cy * 1e3:>12.3f} {py / cy:>8.1f}")


if __name__ == "__main__":
    main()
