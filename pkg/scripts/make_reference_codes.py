"""Regenerate the point sets in src/maximin/data/.

tetrahedron, octahedron: exact constructions.
code8: the square antiprism whose square edge equals its lateral edge, the
    optimal 8-point spherical code (minimal angle ~74.8585 deg).
maxvol8: the 8-vertex polyhedron of largest volume inscribed in the unit
    sphere, found by multistart local optimisation of the hull volume and
    checked against the known optimum sqrt((475 + 29 sqrt(145)) / 250).

Usage: python scripts/make_reference_codes.py [--check]
"""
import argparse
import math
import sys
from pathlib import Path

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import ConvexHull

from maximin.frontier import DATA_DIR, SphericalCode, dumps_spherical_code, load_spherical_code
from maximin.simplex import regular_simplex_vertices

MAXVOL8 = math.sqrt((475 + 29 * math.sqrt(145)) / 250)


def square_antiprism():
    h = math.sqrt(math.sqrt(2) / (4 + math.sqrt(2)))
    rho = math.sqrt(1 - h * h)
    pts = []
    for j in range(4):
        a = j * math.pi / 2
        pts.append([rho * math.cos(a), rho * math.sin(a), h])
    for j in range(4):
        a = j * math.pi / 2 + math.pi / 4
        pts.append([rho * math.cos(a), rho * math.sin(a), -h])
    return np.array(pts)


def _points(theta):
    t = theta.reshape(-1, 2)
    return np.column_stack([np.sin(t[:, 0]) * np.cos(t[:, 1]),
                            np.sin(t[:, 0]) * np.sin(t[:, 1]),
                            np.cos(t[:, 0])])


def max_volume_8(restarts=200, seed=0):
    rng = np.random.default_rng(seed)
    best, best_pts = -1.0, None
    for _ in range(restarts):
        x0 = np.column_stack([np.arccos(rng.uniform(-1, 1, 8)), rng.uniform(0, 2 * np.pi, 8)]).ravel()

        def negvol(th):
            try:
                return -ConvexHull(_points(th)).volume
            except Exception:
                return 0.0

        res = minimize(negvol, x0, method="BFGS", options={"gtol": 1e-12, "maxiter": 2000})
        res = minimize(negvol, res.x, method="Nelder-Mead",
                       options={"xatol": 1e-13, "fatol": 1e-15, "maxiter": 20000})
        if -res.fun > best:
            best, best_pts = -res.fun, _points(res.x)
    return best_pts, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="only verify the shipped files")
    args = ap.parse_args(argv)

    if args.check:
        code8 = load_spherical_code(DATA_DIR / "code8.txt")
        mv8 = load_spherical_code(DATA_DIR / "maxvol8.txt")
        print("code8 min angle (deg):", math.degrees(math.acos(1 - code8.min_distance**2 / 2)))
        print("maxvol8 volume:", ConvexHull(mv8.points).volume, "known:", MAXVOL8)
        return 0

    DATA_DIR.mkdir(exist_ok=True)
    tet = regular_simplex_vertices(3).vertices
    (DATA_DIR / "tetrahedron.txt").write_text(dumps_spherical_code(
        SphericalCode(tet), "regular tetrahedron, unit circumradius"))
    octa = np.vstack([np.eye(3), -np.eye(3)])
    (DATA_DIR / "octahedron.txt").write_text(dumps_spherical_code(
        SphericalCode(octa), "regular octahedron, unit circumradius"))
    (DATA_DIR / "code8.txt").write_text(dumps_spherical_code(
        SphericalCode(square_antiprism()),
        "best 8-point spherical code: square antiprism with equal edges\n"
        "min angle 74.8585 degrees"))
    pts, vol = max_volume_8()
    print(f"max volume found {vol:.12f}, known {MAXVOL8:.12f}", file=sys.stderr)
    if abs(vol - MAXVOL8) > 1e-8:
        print("optimiser missed the known maximum", file=sys.stderr)
        return 1
    (DATA_DIR / "maxvol8.txt").write_text(dumps_spherical_code(
        SphericalCode(pts),
        "8 unit vectors whose hull has maximal volume\n"
        f"hull volume {vol:.12f} = sqrt((475 + 29 sqrt(145)) / 250)"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
