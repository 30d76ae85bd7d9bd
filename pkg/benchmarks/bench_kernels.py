"""Compare the compiled kernels against the pure-python fallback.

Each workload runs in a fresh subprocess so the SEIDELKIT_NO_JIT flag
is picked up at import time, exactly as a user would experience it.
Compilation happens inside the timed process but outside the timed
region (one warmup call per kernel).

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from seidelkit import _kernels as K

def timed(fn, *args):
    fn(*args)  # warmup: jit compilation or cache load
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0

rng = np.random.default_rng(20260819)
rows8 = []
for _ in range(200):
    r = np.zeros(8, np.int64)
    for i in range(8):
        for j in range(i):
            if rng.integers(2):
                r[i] |= np.int64(1) << np.int64(j)
                r[j] |= np.int64(1) << np.int64(i)
    rows8.append(r)

def canon_batch():
    for r in rows8:
        K.run_canon(r, 8)

out = {
    "jit": K.JIT_ENABLED,
    "census_scan(6)": timed(K.census_scan, 6),
    "algebra_sweep(4)": timed(K.algebra_sweep, 4),
    "components(6)": timed(K.labeled_switch_components, 6),
    "canon 200 x order-8": timed(canon_batch),
}
json.dump(out, sys.stdout)
"""


def run(no_jit: bool) -> dict:
    env = dict(os.environ)
    if no_jit:
        env["SEIDELKIT_NO_JIT"] = "1"
    else:
        env.pop("SEIDELKIT_NO_JIT", None)
    res = subprocess.run(
        [sys.executable, "-c", WORKER], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(res.stdout)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1, help="take the best of N runs per mode")
    args = ap.parse_args()

    def best(no_jit: bool) -> dict:
        outs = [run(no_jit) for _ in range(args.repeat)]
        keys = [k for k in outs[0] if k != "jit"]
        return {"jit": outs[0]["jit"], **{k: min(o[k] for o in outs) for k in keys}}

    fast = best(False)
    slow = best(True)
    if not fast["jit"]:
        print("note: compiled path unavailable, both columns are the fallback")
    width = max(len(k) for k in fast)
    print(f"{'workload':<{width}}  {'compiled':>10}  {'fallback':>10}  {'speedup':>8}")
    for k in fast:
        if k == "jit":
            continue
        a, b = fast[k], slow[k]
        print(f"{k:<{width}}  {a:>9.4f}s  {b:>9.4f}s  {b / a:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
