"""Run every open-case experiment and print the reports.

Usage: python scripts/run_experiments.py [--seed S] [--restarts R] [--skip-dodecahedron] [--out FILE]

The dodecahedron comparison optimises 10 vectors in R^3 (120 determinants per
evaluation) and takes about two minutes with the default 64 restarts.
"""
import argparse
import sys
import time

from maximin.frontier import (
    EXPERIMENT_SCHEDULE, asymptotic_table, dodecahedron_experiment, eight_vector_nonmatch_check,
    format_table, icosahedron_experiment, reference_code, tetra_cube_check,
)
from maximin.solver import SolverParams


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--restarts", type=int, default=64)
    ap.add_argument("--skip-dodecahedron", action="store_true")
    ap.add_argument("--out", help="also write the combined report here")
    args = ap.parse_args(argv)

    params = SolverParams(restarts=args.restarts, seed=args.seed,
                          softmin_beta_schedule=EXPERIMENT_SCHEDULE)
    sections = []

    def timed(label, fn):
        t0 = time.perf_counter()
        text = fn()
        sections.append(f"{text}({label}: {time.perf_counter() - t0:.1f} s)\n")
        print(sections[-1], flush=True)

    timed("icosahedron", lambda: icosahedron_experiment(params).text)
    if not args.skip_dodecahedron:
        timed("dodecahedron", lambda: dodecahedron_experiment(params).text)
    timed("tetra-cube", lambda: tetra_cube_check().text)
    timed("eight-nonmatch", lambda: eight_vector_nonmatch_check(
        reference_code("code8"), reference_code("maxvol8"), reference_code("tetrahedron")).text)
    rows = asymptotic_table(300)
    first = next(n for n, v in rows if v < 0.1)
    timed("asymptotic", lambda: format_table([r for r in rows if r[0] in (1, 2, 3, 10, 50, 100, 200, first)])
          + f"first n with bound below 0.1: {first}\n")

    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(sections))
    return 0


if __name__ == "__main__":
    sys.exit(main())
