"""Compare the compiled and pure-Python scan kernels.

    python3 benchmarks/bench_kernels.py --n 6 --repeat 3

Both kernels scan the same mask range; results must agree exactly, and the
table reports the best wall time of each plus the speedup.
"""

from __future__ import annotations

import argparse
import sys
import time

from somborkit import _kernels_py

try:
    from somborkit import _kernels
except ImportError:  # extension not built
    _kernels = None

KINDS = {"bridges": 0, "kappa": 1, "lambda": 2}


def best_time(fn, repeat: int) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--kinds", nargs="+", choices=sorted(KINDS), default=sorted(KINDS))
    args = p.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    hi = 1 << (args.n * (args.n - 1) // 2)
    print(f"n={args.n}  masks={hi}")
    print(f"{'kind':<8} {'python s':>10} {'cython s':>10} {'speedup':>8}  agree")
    for name in args.kinds:
        kind = KINDS[name]
        tp, rp = best_time(lambda: _kernels_py.scan_range(args.n, 0, hi, kind), args.repeat)
        tc, rc = best_time(lambda: _kernels.scan_range(args.n, 0, hi, kind), args.repeat)
        print(f"{name:<8} {tp:>10.4f} {tc:>10.4f} {tp / tc:>8.1f}  {rp == rc}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
