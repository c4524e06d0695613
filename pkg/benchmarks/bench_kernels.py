"""Time the compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter because the choice is fixed at
import time. The first column includes JIT compilation (or cache load);
the second is the best of ``--repeat`` warm runs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from racgmin import BACKEND, ball, find_hole, quasi_dense_check
from racgmin import descent
from racgmin.corpus import load
from racgmin.verify import run_suites

repeat = int(sys.argv[1])
pentagon, dd, hexagon = load("pentagon"), load("d_inf_x_d_inf"), load("hexagon")
tasks = {
    "ball pentagon R=10": lambda: ball(pentagon, 10),
    "quasi-density pentagon R=9": lambda: quasi_dense_check(pentagon, {3}, 9, 3),
    "hole d_inf^2 R=12": lambda: find_hole(dd, 0, 12, 4),
    "suites hexagon R=6": lambda: run_suites(hexagon, 6),
}
out = {"backend": BACKEND, "rows": []}
for name, fn in tasks.items():
    times = []
    for _ in range(repeat + 1):
        descent._build_ball.cache_clear()
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    out["rows"].append([name, times[0], min(times[1:])])
print(json.dumps(out))
"""


def run(flag: str, repeat: int) -> dict:
    env = {**os.environ, "RACGMIN_NUMBA": flag}
    proc = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run("1", args.repeat), run("0", args.repeat)
    print(f"{'task':<30}{'numba first':>13}{'numba warm':>12}{'python warm':>13}{'speedup':>9}")
    for (name, f0, fw), (_, _, sw) in zip(fast["rows"], slow["rows"]):
        print(f"{name:<30}{f0:>12.3f}s{fw:>11.3f}s{sw:>12.3f}s{sw / fw:>8.1f}x")


if __name__ == "__main__":
    main()
