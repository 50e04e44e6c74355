"""Benchmark: compiled kernels vs the pure-Python fallback.

Each task runs in a fresh subprocess with RRCLOSURE_BACKEND pinned, so the
import-time backend selection is exercised exactly as users see it.

    python benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

TASKS = {
    "staircase-batch": r"""
import random
from rrclosure._kernels import minimalize, staircase_colength
rng = random.Random(1)
total = 0
for _ in range(3000):
    gens = [(rng.randint(0, 40), rng.randint(0, 40)) for _ in range(30)]
    gens += [(rng.randint(1, 40), 0), (0, rng.randint(1, 40))]
    total += staircase_colength(minimalize(gens), 2)
print(total)
""",
    "power-colon-chain": r"""
from rrclosure import Ideal, PolyRing, QQ
R = PolyRing(QQ, ("x", "y"))
I = Ideal.from_exponents(R, [(10, 0), (0, 5), (1, 4), (8, 1)])
P = I.power(30)
Q = I.power(31)
C = Q.colon(P._best_generators())
print(C.colength())
""",
    "closure-ex33": r"""
from rrclosure import Ideal, PolyRing, QQ, closure
R = PolyRing(QQ, ("x", "y"))
I = Ideal(R, [R.parse(s) for s in ("x^8", "x^3*y^2", "x^2*y^4", "y^8")])
print(closure(I, seed=0).is_closed)
""",
    "closure-ex14-square": r"""
from rrclosure import Ideal, PolyRing, QQ, closure_power
R = PolyRing(QQ, ("x", "y"))
gens = ("y^22","x^4*y^18","x^7*y^15","x^8*y^14","x^11*y^11",
        "x^14*y^8","x^15*y^7","x^18*y^4","x^22")
I = Ideal(R, [R.parse(s) for s in gens])
print(closure_power(I, 2, seed=0).is_closed)
""",
}


def run_task(code: str, backend: str, repeat: int) -> float:
    env = dict(os.environ, RRCLOSURE_BACKEND=backend)
    timer = (
        "import time, sys\n"
        "start = time.perf_counter()\n"
        f"for _ in range({repeat}):\n"
        + "".join("    " + line + "\n" for line in code.strip().splitlines())
        + "print(json.dumps((time.perf_counter() - start) / %d), file=sys.stderr)" % repeat
    )
    script = "import json\n" + timer
    proc = subprocess.run(
        [sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stderr.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1)
    parser.add_argument("--tasks", nargs="*", default=list(TASKS))
    args = parser.parse_args()

    backends = ["pure", "cython"]
    try:
        run_task("from rrclosure._kernels import fast", "cython", 1)
    except subprocess.CalledProcessError:
        print("compiled backend unavailable; benchmarking pure only", file=sys.stderr)
        backends = ["pure"]

    width = max(len(t) for t in args.tasks)
    header = f"{'task':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name in args.tasks:
        times = [run_task(TASKS[name], b, args.repeat) for b in backends]
        row = f"{name:<{width}}  " + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
