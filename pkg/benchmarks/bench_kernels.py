"""Compare the compiled jet kernel with the pure-Python fallback.

Each backend runs in its own interpreter, since the kernel is chosen once
at import time:

    python3 benchmarks/bench_kernels.py            # both backends
    python3 benchmarks/bench_kernels.py --repeat 5

The workloads are products and compositions of random 2-variable jets at a
few orders, over Q and over floats, plus a full classification sweep.
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import timeit

WORKER = r"""
import json, random, sys, timeit
from fractions import Fraction
from sharksfin.jets import BACKEND, FLOAT, Jet2, MapJet2, series_compose
from sharksfin.classify import classify_germ

repeat = int(sys.argv[1])
rng = random.Random(0)

def jet(n, kind=None, const=True):
    lo = 0 if const else 1
    table = {(d - j, j): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
             for d in range(lo, n + 1) for j in range(d + 1)}
    if kind == FLOAT:
        table = {k: float(v) for k, v in table.items()}
    return Jet2(n, table, kind=kind)

out = {"backend": BACKEND}
for n in (4, 8, 12):
    for label, kind in (("exact", None), ("float", FLOAT)):
        a, b = jet(n, kind), jet(n, kind)
        g = MapJet2(jet(n, kind, False), jet(n, kind, False))
        t = min(timeit.repeat(lambda: a * b, number=20, repeat=repeat)) / 20
        out[f"mul/{label}/order{n}"] = t
        t = min(timeit.repeat(lambda: series_compose(a, g), number=3, repeat=repeat)) / 3
        out[f"compose/{label}/order{n}"] = t

germs = [MapJet2(jet(4, const=False), jet(4, const=False)) for _ in range(50)]
t = min(timeit.repeat(lambda: [classify_germ(f) for f in germs], number=1, repeat=repeat))
out["classify/50 germs"] = t
print(json.dumps(out))
"""


def run_backend(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["SHARKSFIN_PURE_PYTHON"] = "1"
    else:
        env.pop("SHARKSFIN_PURE_PYTHON", None)
    proc = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    if fast["backend"] == slow["backend"]:
        print(f"compiled kernel not available (backend {fast['backend']}); "
              "run `python3 setup.py build_ext --inplace` first")
    print(f"{'workload':28s} {fast['backend']:>12s} {slow['backend']:>12s} {'speedup':>8s}")
    for key in fast:
        if key == "backend":
            continue
        a, b = fast[key], slow[key]
        print(f"{key:28s} {a * 1e3:10.3f}ms {b * 1e3:10.3f}ms {b / a:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
