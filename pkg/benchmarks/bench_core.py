#!/usr/bin/env python3
"""Compare the compiled polynomial core against the pure-Python fallback.

The backend is fixed at import time, so each measurement runs in a child
process: once normally (compiled extension if built) and once with
EISTRACE_PURE_PYTHON=1.

Usage: python3 benchmarks/bench_core.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json
import random
import time

from eistrace.exact import BACKEND, Cyclotomic, Rational, totient

rng = random.Random(12345)


def random_element(order):
    return Cyclotomic(order, [Rational(rng.randint(-99, 99), rng.randint(1, 99))
                              for _ in range(totient(order))])


def bench_mul(order, count):
    xs = [random_element(order) for _ in range(count)]
    ys = [random_element(order) for _ in range(count)]
    t0 = time.perf_counter()
    acc = Cyclotomic.zero(order)
    for x, y in zip(xs, ys):
        acc = acc + x * y
    return time.perf_counter() - t0


def bench_kernel():
    from eistrace.chars import primitive_characters
    from eistrace.kernels import f_coeff, parity_ok

    t0 = time.perf_counter()
    for chi in primitive_characters(15):
        for l in (3, 4, 5):
            if parity_ok(l, chi):
                for n in range(1, 6):
                    f_coeff(16, l, chi, n)
    return time.perf_counter() - t0


results = {
    "backend": BACKEND,
    "mul_order_36_x2000": bench_mul(36, 2000),
    "mul_order_105_x300": bench_mul(105, 300),
    "kernel_weight16_mod15": bench_kernel(),
}
print(json.dumps(results))
"""


def run_once(pure_python):
    env = dict(os.environ)
    if pure_python:
        env["EISTRACE_PURE_PYTHON"] = "1"
    else:
        env.pop("EISTRACE_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env,
        capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of N runs per backend")
    args = parser.parse_args()

    best = {}
    for pure in (False, True):
        runs = [run_once(pure) for _ in range(args.repeat)]
        backend = runs[0]["backend"]
        best[backend] = {
            k: min(r[k] for r in runs) for k in runs[0] if k != "backend"
        }

    if "compiled" not in best:
        print("compiled extension not built; only the python backend ran")
    names = sorted(next(iter(best.values())))
    width = max(len(n) for n in names)
    header = f"{'benchmark':<{width}}  " + "  ".join(f"{b:>10}" for b in best)
    print(header)
    for n in names:
        row = f"{n:<{width}}  " + "  ".join(f"{best[b][n]:>10.4f}" for b in best)
        if len(best) == 2 and best["python"][n] > 0:
            row += f"  ({best['python'][n] / best['compiled'][n]:.2f}x)"
        print(row)


if __name__ == "__main__":
    main()
