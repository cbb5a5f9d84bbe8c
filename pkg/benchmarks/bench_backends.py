"""Benchmark the reference predicate core against the compiled twin.

Both implementations are imported side by side and driven over identical
inputs captured from a real axis-screen run, so the numbers reflect the
package's actual hot loops: the exhaustive common-viewer scan and the
incremental dangerous-crossing scan.

Usage:
    python3 benchmarks/bench_backends.py [--k K] [--steps N] [--repeat R]

A full end-to-end comparison is also available through the environment:
    VISLINK_BACKEND=pure     python3 -m vislink shutter --k 3 --steps 50
    VISLINK_BACKEND=compiled python3 -m vislink shutter --k 3 --steps 50
"""

from __future__ import annotations

import argparse
import sys
import time

from vislink import _pure
from vislink import shutter

try:
    from vislink import _core
except ImportError:
    _core = None


def capture_state(k: int, steps: int):
    """Run the process briefly and snapshot the scan inputs."""
    K = shutter.gen_kset(k, seed=7)
    tuples = shutter.gen_tuples(k, steps + 1, seed=77)
    s = shutter.run_schedule(K, tuples)
    return s._ys, list(s._alist), set(s._aset), list(s._lines), set(s._bset)


def time_viewer(mod, ys, alist, aset, lines, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        got = mod.viewer_scan(ys, alist, aset, lines)
        best = min(best, time.perf_counter() - t0)
        assert got is None  # a live run state never has a common viewer
    return best

def time_danger(mod, ys, lines, aset, bset, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        got = mod.danger_scan(lines, 0, ys, aset, set(bset), set(), [])
        best = min(best, time.perf_counter() - t0)
        assert got is None
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--steps", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _core is None:
        print("compiled core not built; only the reference timings follow")

    ys, alist, aset, lines, bset = capture_state(args.k, args.steps)
    print(
        f"state after {args.steps} steps at k={args.k}: "
        f"|A|={len(alist)} sight lines={len(lines)}"
    )

    rows = []
    for name, mod in (("pure", _pure), ("compiled", _core)):
        if mod is None:
            continue
        tv = time_viewer(mod, ys, alist, aset, lines, args.repeat)
        td = time_danger(mod, ys, lines, aset, bset, args.repeat)
        rows.append((name, tv, td))

    print(f"{'backend':<10} {'viewer_scan':>12} {'danger_scan':>12}")
    for name, tv, td in rows:
        print(f"{name:<10} {tv * 1000:>10.1f}ms {td * 1000:>10.1f}ms")
    if len(rows) == 2:
        print(
            f"{'speedup':<10} {rows[0][1] / rows[1][1]:>11.2f}x "
            f"{rows[0][2] / rows[1][2]:>11.2f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
