"""Time the compiled and pure-Python automorphism kernels on the same maps.

    python benchmarks/bench_kernel.py [--repeat 3]
"""
import argparse
import time

from twouniform import _kernel_py
from twouniform.catalog import catalog
from twouniform.lattice import SublatticeMatrix
from twouniform.symmetry import KERNEL, automorphism_group
from twouniform.torus_map import quotient

try:
    from twouniform import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

CASES = [(1, "2,1,3"), (6, "3,0,2"), (9, "2,0,3"), (17, "2,1,3"), (20, "3,1,2")]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"default kernel: {KERNEL}")
    # "search": raw extension from every dart (no invariant pruning), the hot loop;
    # "group": automorphism_group end to end, pruning included
    print(f"{'map':<12} {'darts':>6} {'|Aut|':>6} {'stage':<7} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for i, lat in CASES:
        x = quotient(catalog(i), SublatticeMatrix.parse(lat))
        alpha, sigma, every = list(x.alpha), list(x.sigma), range(x.n_darts)
        stages = [
            ("search", lambda k: k.search(alpha, sigma, 0, every)),
            ("group", lambda k: automorphism_group(x, kernel=k)),
        ]
        for stage, fn in stages:
            tp, rp = best_of(lambda: fn(_kernel_py), args.repeat)
            if _kernel_c is None:
                print(f"K{i} {lat:<8} {x.n_darts:>6} {len(rp):>6} {stage:<7} {tp:>9.4f} {'-':>9} {'-':>8}")
                continue
            tc, rc = best_of(lambda: fn(_kernel_c), args.repeat)
            assert [tuple(r) if isinstance(r, list) else r for r in rp] == [
                tuple(r) if isinstance(r, list) else r for r in rc
            ], "kernels disagree"
            print(f"K{i} {lat:<8} {x.n_darts:>6} {len(rc):>6} {stage:<7} {tp:>9.4f} {tc:>9.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
