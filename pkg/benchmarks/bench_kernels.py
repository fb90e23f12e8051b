"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from tdrl import _purepy
from tdrl.perm import OpKind, op_orders

try:
    from tdrl import _kernels
except ImportError:
    _kernels = None


def cases():
    ident = lambda n: tuple(range(1, n + 1))  # noqa: E731
    yield "gather id(16), TDRL", lambda m: m.gather(ident(16), op_orders(16, OpKind.TDRL))
    yield "overlap_scan n=8, TDRL", lambda m: m.overlap_scan(8, op_orders(8, OpKind.TDRL), ident(8))
    yield "pairwise_max n=6, TDRL", lambda m: m.pairwise_max(6, op_orders(6, OpKind.TDRL))
    yield "pairwise_max n=6, MTDRL", lambda m: m.pairwise_max(6, op_orders(6, OpKind.MTDRL))
    yield "greedy_pack n=8, k=3, TDRL", lambda m: m.greedy_pack(8, op_orders(8, OpKind.TDRL, 3))


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    print(f"{'case':30s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, run in cases():
        py_t, py_r = best_of(lambda: run(_purepy), args.repeat)
        if _kernels is None:
            print(f"{name:30s} {py_t:10.4f}")
            continue
        c_t, c_r = best_of(lambda: run(_kernels), args.repeat)
        assert py_r == c_r, f"backends disagree on {name}"
        print(f"{name:30s} {py_t:10.4f} {c_t:10.4f} {py_t / c_t:7.1f}x")


if __name__ == "__main__":
    main()
