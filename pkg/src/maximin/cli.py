"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (its class name is printed on
stderr), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import complexify as cx
from .core import Field, det_spectrum, from_array, min_det
from .errors import MaximinError, VerificationFailed
from .frontier import (
    code_to_complex, complex_to_code, dodecahedron_experiment, dumps_spherical_code,
    eight_vector_nonmatch_check, format_table, icosahedron_experiment, icosahedron_vertices,
    load_spherical_code, northern_hemisphere, planar_optimal, reference_code, asymptotic_table,
    tetra_cube_check, EXPERIMENT_SCHEDULE,
)
from .io import fmt12, read_config, write_config
from .simplex import regular_simplex_vertices
from .solver import Problem, SolverParams, format_report, solve
from .verify import format_checks, run_checks

_DEFAULTS = SolverParams()


def _positive_int(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _seed(s):
    v = int(s)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive_float(s):
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {s}")
    return v


def _add_solver_flags(p, seed_required=True):
    p.add_argument("--seed", type=_seed, required=seed_required, help="random seed (required)")
    p.add_argument("--restarts", type=_positive_int, default=_DEFAULTS.restarts)
    p.add_argument("--max-iters", type=_positive_int, default=_DEFAULTS.max_iters,
                   help="iteration cap per beta stage")
    p.add_argument("--tol", type=_positive_float, default=_DEFAULTS.tol)
    p.add_argument("--step-size", type=_positive_float, default=_DEFAULTS.step_size)
    p.add_argument("--betas", type=_positive_float, nargs="+", default=None,
                   help="softmin sharpness schedule (nondecreasing)")


def _params(args, schedule=None):
    sched = args.betas or schedule or _DEFAULTS.softmin_beta_schedule
    return SolverParams(restarts=args.restarts, max_iters=args.max_iters, tol=args.tol,
                        step_size=args.step_size, seed=args.seed,
                        softmin_beta_schedule=tuple(sched))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="maximin",
        description="Maximin determinants of unit-vector configurations in R^n and C^n.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print D and the full determinant spectrum of a config file")
    p.add_argument("config")

    p = sub.add_parser("gen", help="write a known configuration to a file")
    gsub = p.add_subparsers(dest="kind", required=True)
    for kind, arg, helptext in [
        ("regular-simplex", "n", "n+1 regular-simplex vectors in R^n"),
        ("real-regular-complex", "n", "the regular simplex embedded in C^n"),
        ("planar-optimal", "k", "k+1 consecutive vertices of the regular (2k+2)-gon"),
    ]:
        g = gsub.add_parser(kind, help=helptext)
        g.add_argument(arg, type=_positive_int)
        g.add_argument("out")
    g = gsub.add_parser("icosahedron", help="the 6 icosahedron vertices with z >= 0")
    g.add_argument("out")

    p = sub.add_parser("normalize", help="rotate phases of a complex n+1 config to Property A")
    p.add_argument("config")
    p.add_argument("out")

    p = sub.add_parser("solve", help="numerically maximise D")
    p.add_argument("--field", choices=[f.value for f in Field], required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    p.add_argument("--out", help="write the best configuration here")
    _add_solver_flags(p)

    p = sub.add_parser("bridge", help="convert between C^2 configs and spherical codes")
    p.add_argument("direction", choices=["to-sphere", "to-complex"])
    p.add_argument("input")
    p.add_argument("out")

    p = sub.add_parser("experiment", help="run an experiment on an open case")
    esub = p.add_subparsers(dest="name", required=True)
    for name in ("icosahedron", "dodecahedron"):
        e = esub.add_parser(name, help=f"{name} hemisphere vs solver")
        _add_solver_flags(e)
    esub.add_parser("tetra-cube", help="tetrahedron and its negation form a cube")
    e = esub.add_parser("eight-nonmatch", help="no 8-point reference set contains a tetrahedron")
    e.add_argument("--code8", help="8-point spherical code file (default: shipped)")
    e.add_argument("--maxvol8", help="8-point max-volume file (default: shipped)")
    e.add_argument("--control", help="control file (default: shipped tetrahedron)")
    e = esub.add_parser("asymptotic", help="table of the bound for n = 1..N")
    e.add_argument("n_max", type=int)

    p = sub.add_parser("verify", help="run every applicable identity check on a config file")
    p.add_argument("config")
    return ap


def _report_config(config) -> str:
    spec = det_spectrum(config)
    lines = [f"field: {config.field.value}", f"n: {config.n}", f"count: {config.count}",
             f"D: {fmt12(spec.min_value)}", "spectrum:"]
    for subset, value in spec.entries:
        lines.append(f"  {' '.join(str(i) for i in subset)} {fmt12(value)}")
    return "\n".join(lines) + "\n"


def _gen(args):
    if args.kind == "regular-simplex":
        cfg = from_array(Field.REAL, regular_simplex_vertices(args.n).vertices)
    elif args.kind == "real-regular-complex":
        cfg = cx.real_regular_in_Cn(args.n)
    elif args.kind == "planar-optimal":
        cfg = planar_optimal(args.k).config()
    else:
        cfg = from_array(Field.REAL, northern_hemisphere(icosahedron_vertices()))
    write_config(cfg, args.out)
    return f"wrote {args.out}\nD: {fmt12(min_det(cfg))}\n"


def _normalize(args):
    cfg = read_config(args.config)
    tilde, wit = cx.normalize_property_a(cfg)
    write_config(tilde, args.out)
    if isinstance(wit, cx.Degenerate):
        status = "degenerate (some coefficient vanished)"
    else:
        status = "property A"
    return (f"wrote {args.out}\nstatus: {status}\n"
            f"r: {' '.join(fmt12(x) for x in wit.r)}\nD: {fmt12(min_det(tilde))}\n")


def _solve(args):
    res = solve(Problem(Field(args.field), args.n, args.count), _params(args))
    if args.out:
        write_config(res.best, args.out)
    return format_report(res)


def _bridge(args):
    if args.direction == "to-sphere":
        code = complex_to_code(read_config(args.input))
        with open(args.out, "w") as fh:
            fh.write(dumps_spherical_code(code, "unit-sphere images of a C^2 configuration"))
        return f"wrote {args.out}\nmin distance: {fmt12(code.min_distance)}\n"
    cfg = code_to_complex(load_spherical_code(args.input))
    write_config(cfg, args.out)
    return f"wrote {args.out}\nD: {fmt12(min_det(cfg))}\n"


def _experiment(args):
    if args.name == "icosahedron":
        return icosahedron_experiment(_params(args, EXPERIMENT_SCHEDULE)).text
    if args.name == "dodecahedron":
        return dodecahedron_experiment(_params(args, EXPERIMENT_SCHEDULE)).text
    if args.name == "tetra-cube":
        return tetra_cube_check().text
    if args.name == "eight-nonmatch":
        code8 = load_spherical_code(args.code8) if args.code8 else reference_code("code8")
        mv8 = load_spherical_code(args.maxvol8) if args.maxvol8 else reference_code("maxvol8")
        ctl = load_spherical_code(args.control) if args.control else reference_code("tetrahedron")
        return eight_vector_nonmatch_check(code8, mv8, ctl).text
    return format_table(asymptotic_table(args.n_max))


def _verify(args):
    checks = run_checks(read_config(args.config))
    text = format_checks(checks)
    if any(ok is False for _, ok, _ in checks):
        sys.stdout.write(text)
        raise VerificationFailed("at least one identity failed")
    return text


_HANDLERS = {
    "eval": lambda a: _report_config(read_config(a.config)),
    "gen": _gen,
    "normalize": _normalize,
    "solve": _solve,
    "bridge": _bridge,
    "experiment": _experiment,
    "verify": _verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = _HANDLERS[args.command](args)
    except MaximinError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
