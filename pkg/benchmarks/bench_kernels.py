"""Compare the compiled word kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Part one times each kernel function directly on both modules. Part two runs
an end-to-end truncated completion in two subprocesses, one forced onto the
fallback with NCGB_KERNELS=python.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from ncgb._kernels import _pykernels

try:
    from ncgb._kernels import _ckernels
except ImportError:
    _ckernels = None

WORKLOAD = r"""
import time
from ncgb import FreeAlgebra, KERNEL_BACKEND, truncated_gb
R = FreeAlgebra.make("xyz")
F = [R("x*y - y*z"), R("y*x - z*y + x*z"), R("z*x*z - x*y*x")]
start = time.perf_counter()
tb = truncated_gb(F, {deg})
print(KERNEL_BACKEND, len(tb.elements), round(time.perf_counter() - start, 3))
"""


def _inputs(seed=7):
    rng = random.Random(seed)
    words = [tuple(rng.randrange(3) for _ in range(rng.randint(6, 40))) for _ in range(400)]
    lms = [tuple(rng.randrange(3) for _ in range(rng.randint(2, 5))) for _ in range(40)]
    pats = [tuple(rng.randrange(3) for _ in range(rng.randint(1, 4))) for _ in range(400)]
    return words, lms, pats


def micro(mod, repeat: int) -> dict[str, float]:
    words, lms, pats = _inputs()
    index = mod.LMIndex(lms)
    weights = (1, 2, 1)
    cases = {
        "LMIndex.find": lambda: [index.find(w) for w in words],
        "occurrences": lambda: [mod.occurrences(p, w) for p, w in zip(pats, words)],
        "overlap_lengths": lambda: [mod.overlap_lengths(a, b) for a in lms for b in lms],
        "weighted_degree": lambda: [mod.weighted_degree(w, weights) for w in words],
    }
    return {name: min(timeit.repeat(fn, number=20, repeat=repeat)) / 20 for name, fn in cases.items()}


def end_to_end(backend: str, deg: int) -> str:
    env = dict(os.environ, NCGB_KERNELS=backend)
    proc = subprocess.run([sys.executable, "-c", WORKLOAD.format(deg=deg)],
                          env=env, capture_output=True, text=True, check=True)
    return proc.stdout.strip()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--deg", type=int, default=9, help="truncation degree of the end-to-end run")
    args = ap.parse_args()

    py = micro(_pykernels, args.repeat)
    if _ckernels is None:
        print("compiled kernels not built; showing the fallback only")
        for name, t in py.items():
            print(f"{name:16s} python {t * 1e3:8.3f} ms")
    else:
        cy = micro(_ckernels, args.repeat)
        print(f"{'kernel':16s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
        for name in py:
            print(f"{name:16s} {py[name] * 1e3:10.3f} {cy[name] * 1e3:10.3f} {py[name] / cy[name]:7.1f}x")

    print()
    print(f"truncated_gb, 3 variables, degree {args.deg} (backend, basis size, seconds):")
    for backend in ("python", "auto"):
        print("  " + end_to_end(backend, args.deg))


if __name__ == "__main__":
    main()
