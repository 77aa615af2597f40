"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--sizes 10 20 40 80] [--repeat 3]
"""

import argparse
import random
import timeit

from circinv import _pykernels

try:
    from circinv import _ckernels
except ImportError:
    _ckernels = None


def bench(kern, name, window, repeat):
    if name == "frame_scan":
        stmt = lambda: kern.frame_scan(window)
    elif name == "shi_length":
        lifted = kern.nearest_lift(window)
        stmt = lambda: kern.shi_length(lifted)
    else:
        lifted = kern.frame_scan(window)[3]
        stmt = lambda: kern.uncross(lifted)
    number = 1
    while timeit.timeit(stmt, number=number) < 0.2:
        number *= 2
    return min(timeit.repeat(stmt, number=number, repeat=repeat)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run: python setup.py build_ext --inplace")
    rng = random.Random(args.seed)
    print(f"{'kernel':<12}{'n':>5}{'python (s)':>14}{'cython (s)':>14}{'speedup':>10}")
    for n in args.sizes:
        window = rng.sample(range(1, n + 1), n)
        for name in ("shi_length", "frame_scan", "uncross"):
            t_py = bench(_pykernels, name, window, args.repeat)
            if _ckernels is None:
                print(f"{name:<12}{n:>5}{t_py:>14.3e}{'-':>14}{'-':>10}")
                continue
            t_c = bench(_ckernels, name, window, args.repeat)
            print(f"{name:<12}{n:>5}{t_py:>14.3e}{t_c:>14.3e}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
