"""Compare the compiled and pure-Python path kernels.

Run with:  python3 benchmarks/bench_kernels.py [--n 16] [--repeat 3]
"""
from __future__ import annotations

import argparse
import timeit

from spechtcomb import _pykernels

try:
    from spechtcomb import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def workloads(mod, n: int):
    paths = mod.dominant_paths(n)

    def enumerate_paths():
        mod.dominant_paths(n)

    def degrees():
        for e in (2, 3, 4, 5, 6):
            for h in paths:
                mod.degree2(h, e)

    def regularise():
        for e in (2, 3, 4):
            for h in paths:
                mod.reg(h, e)

    def arcs():
        for e in (2, 3, 4):
            for h in paths:
                mod.arc_counts(h, e)
                mod.reflect_arcs(h, e, 0, n)

    return {"enumerate": enumerate_paths, "degree2": degrees, "reg": regularise, "arcs": arcs}, len(paths)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=16)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    py_work, count = workloads(_pykernels, args.n)
    print(f"all dominant two-column paths of length {args.n}: {count}")
    if _ckernels is None:
        print("compiled kernels not available; only timing the Python fallback")
    c_work = workloads(_ckernels, args.n)[0] if _ckernels is not None else {}
    print(f"{'kernel':<10} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for name, fn in py_work.items():
        t_py = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        if name in c_work:
            t_c = min(timeit.repeat(c_work[name], number=1, repeat=args.repeat))
            print(f"{name:<10} {t_py:>11.4f} {t_c:>11.4f} {t_py / t_c:>7.1f}x")
        else:
            print(f"{name:<10} {t_py:>11.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
