"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--max-len 6] [--repeat 3]

Both backends run the same workloads and must return the same totals.
"""
from __future__ import annotations

import argparse
import time

from surfcat import _kernels_py
from surfcat.curves import enumerate_curves, reverse_path
from surfcat.homext import refinement
from surfcat.intersect import features
from surfcat.stralg import factor_segments, substring_segments
from surfcat.topology import build_surface
from surfcat.triangulation import triangulate

try:
    from surfcat import _kernels as _compiled
except ImportError:
    _compiled = None


def crossing_workload(max_len: int):
    T = triangulate(build_surface(0, [2, 2, 2]))
    curves = [c for c in enumerate_curves(T, max_len) if c.arc is None]
    feats = [(features(T, c.path), features(T, reverse_path(T, c.path))) for c in curves]
    return [(fa, fb, fr) for fa, _ in feats for fb, fr in feats]


def hom_workload(max_len: int):
    T = triangulate(build_surface(0, [2, 2, 2]))
    R = refinement(T, T.surface.points)
    words = []
    for c in enumerate_curves(T, max_len):
        w = R.word(R.lift(c))
        if w is not None:
            words.append((w.encode(), factor_segments(w), substring_segments(w)))
    return [(a[0], a[1], b[0], b[2]) for a in words for b in words]


def run_crossings(mod, work) -> int:
    total = 0
    for fa, fb, fr in work:
        total += mod.segment_crossings(*fa, *fb, True, False)
        total += mod.segment_crossings(*fa, *fr, False, False)
    return total


def run_homs(mod, work) -> int:
    return sum(mod.admissible_pairs(*args) for args in work)


def timed(fn, *args, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return out, best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    work = {"crossings": (run_crossings, crossing_workload(args.max_len)),
            "hom": (run_homs, hom_workload(args.max_len))}
    backends = [("python", _kernels_py)]
    if _compiled is not None:
        backends.append(("cython", _compiled))
    else:
        print("compiled kernels not built; timing the fallback only")
    for name, (fn, items) in work.items():
        results = {}
        for bname, mod in backends:
            total, secs = timed(fn, mod, items, repeat=args.repeat)
            results[bname] = (total, secs)
            print(f"{name:10s} {bname:7s} calls={len(items):8d} total={total:10d} "
                  f"best={secs * 1e3:9.1f} ms")
        totals = {t for t, _ in results.values()}
        if len(totals) != 1:
            raise SystemExit(f"{name}: backends disagree: {results}")
        if len(results) == 2:
            print(f"{name:10s} speedup x{results['python'][1] / results['cython'][1]:.1f}")


if __name__ == "__main__":
    main()
