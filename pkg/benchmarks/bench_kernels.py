"""Compare the compiled and pure-Python loss/gradient kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeats N] [--grid N]

Times both backends on identical inputs and reports the speedup.  Also
asserts bit-identical results, since replay determinism depends on the
backends never diverging.
"""

from __future__ import annotations

import argparse
import math
import random
import time
from array import array

from gradstage.kernels import reference

try:
    from gradstage.kernels import _core
except ImportError:
    _core = None


def _bench(fn, args_list, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--grid", type=int, default=64)
    parser.add_argument("--cases", type=int, default=2000)
    args = parser.parse_args()

    if _core is None:
        print("compiled kernel not built; nothing to compare")
        return 1

    rng = random.Random(0)
    xs = array("d", [-1.0 + i * (2.0 / args.grid) for i in range(args.grid)])
    ts = array("d", [i * (2.0 * math.pi / args.grid) for i in range(args.grid)])

    cubic_cases = [
        (
            tuple(rng.uniform(-3, 3) for _ in range(4)),
            tuple(rng.uniform(-1, 1) for _ in range(4)),
            xs,
        )
        for _ in range(args.cases)
    ]
    liss_cases = [
        (
            tuple(rng.uniform(0, 2 * math.pi) for _ in range(3)),
            tuple(rng.uniform(0, 2 * math.pi) for _ in range(3)),
            tuple(rng.randint(1, 7) for _ in range(3)),
            ts,
        )
        for _ in range(args.cases)
    ]

    for name, cases in (("cubic", cubic_cases), ("lissajous", liss_cases)):
        ref_fn = getattr(reference, f"{name}_loss_grad")
        core_fn = getattr(_core, f"{name}_loss_grad")
        for case in cases:
            if ref_fn(*case) != core_fn(*case):
                print(f"FAIL: {name} backends diverge on {case[:-1]}")
                return 1
        t_ref = _bench(ref_fn, cases, args.repeats)
        t_core = _bench(core_fn, cases, args.repeats)
        per_ref = t_ref / args.cases * 1e6
        per_core = t_core / args.cases * 1e6
        print(
            f"{name:9s}  python {per_ref:8.2f} us/call   "
            f"compiled {per_core:8.2f} us/call   speedup {t_ref / t_core:6.1f}x"
        )
    print("results bit-identical across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
