"""Solve a grid of (field, n, count) problems and tabulate best D against the closed form.

Usage: python scripts/solver_sweep.py [--seed S] [--restarts R] [--max-n N] [--extra E]

Rows without a closed form are numerical evidence only.
"""
import argparse
import math
import sys
import time

from maximin.core import Field
from maximin.errors import SpectrumTooLarge
from maximin.io import fmt12
from maximin.solver import Problem, SolverParams, solve


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--restarts", type=int, default=32)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--extra", type=int, default=3, help="largest count - n")
    args = ap.parse_args(argv)

    params = SolverParams(restarts=args.restarts, seed=args.seed)
    print(f"{'field':8} {'n':>2} {'count':>5} {'best D':>16} {'bound':>16} {'gap':>12} {'sec':>6}")
    for field in (Field.REAL, Field.COMPLEX):
        for n in range(2, args.max_n + 1):
            for count in range(n + 1, n + args.extra + 1):
                try:
                    problem = Problem(field, n, count)
                except SpectrumTooLarge:
                    continue
                if math.comb(count, n) > 2000:
                    continue
                t0 = time.perf_counter()
                res = solve(problem, params)
                dt = time.perf_counter() - t0
                bound = "-" if res.bound is None else fmt12(res.bound)
                gap = "-" if res.gap is None else f"{res.gap:.3g}"
                print(f"{field.value:8} {n:>2} {count:>5} {fmt12(res.best_value):>16} {bound:>16} "
                      f"{gap:>12} {dt:6.1f}", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
