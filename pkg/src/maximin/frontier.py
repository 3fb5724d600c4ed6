"""Planar optimum, the C^2 / sphere bridge, and experiments on open cases."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.spatial.distance import pdist

from .core import Configuration, Field, det_spectrum, from_array, min_det, subset_dets
from .errors import DuplicateAfterFold, NotOnSphere, NotUnit, ParseError, WrongArity, WrongField
from .io import fmt12
from .simplex import log_regular_det_value, regular_det_value, regular_simplex_vertices
from .solver import Problem, SolverParams, solve

DATA_DIR = Path(__file__).parent / "data"

# experiments get a sharper final stage than the solver default
EXPERIMENT_SCHEDULE = (10.0, 100.0, 1e3, 1e4, 1e5, 1e6)


# -- k+1 vectors in the plane ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PlanarConfig:
    k: int
    angles: np.ndarray  # ascending, in [0, pi)

    def __post_init__(self):
        a = np.asarray(self.angles, dtype=np.float64)
        if len(a) != self.k + 1:
            raise WrongArity(f"expected {self.k + 1} angles, got {len(a)}")
        if np.any(np.diff(a) <= 0):
            raise ValueError("angles must be strictly increasing")
        a.setflags(write=False)
        object.__setattr__(self, "angles", a)

    @property
    def vectors(self) -> np.ndarray:
        return np.column_stack([np.cos(self.angles), np.sin(self.angles)])

    def config(self) -> Configuration:
        return from_array(Field.REAL, self.vectors)

    def canonical(self) -> "PlanarConfig":
        """Rotated so the first angle is 0."""
        return PlanarConfig(self.k, self.angles - self.angles[0])


def planar_optimal(k: int) -> PlanarConfig:
    """Angles j*pi/(k+1): consecutive vertices of the regular (2k+2)-gon."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return PlanarConfig(k, np.arange(k + 1) * math.pi / (k + 1))


def planar_bound(k: int) -> float:
    return math.sin(math.pi / (k + 1))


def fold_upper(config: Configuration) -> PlanarConfig:
    """Negate every vector in the lower half-plane, then sort by angle."""
    if config.field is not Field.REAL or config.n != 2:
        raise WrongField("fold_upper needs a real configuration in R^2")
    ang = np.mod(np.arctan2(config.vectors[:, 1], config.vectors[:, 0]), 2 * math.pi)
    ang = np.where(ang >= math.pi, ang - math.pi, ang)
    ang = np.sort(ang)
    gaps = np.diff(np.append(ang, ang[0] + math.pi))
    if np.any(gaps <= 1e-9):
        raise DuplicateAfterFold("two vectors are parallel or antiparallel")
    return PlanarConfig(config.k, ang)


# -- C^2 and the sphere of radius 1/2 ------------------------------------------------

@dataclass(frozen=True, eq=False)
class SpherePoint:
    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=np.float64)
        if c.shape != (3,) or abs(np.linalg.norm(c) - 0.5) > 1e-12:
            raise NotOnSphere(f"{c} is not on the sphere of radius 1/2")
        object.__setattr__(self, "coords", c)


def stereographic(w) -> SpherePoint:
    """Image of the projective point [w1 : w2] on the sphere of radius 1/2.

    With t = w2/w1 the point is (Re t, Im t, |t|^2)/(1 + |t|^2) - (0, 0, 1/2);
    multiplying through by |w1|^2 gives a form without the pole singularity.
    """
    w = np.asarray(w, dtype=np.complex128)
    if w.shape != (2,):
        raise WrongArity("expected a vector in C^2")
    nrm2 = float(np.sum(np.abs(w) ** 2))
    if abs(nrm2 - 1.0) > 1e-12:
        raise NotUnit(f"|w|^2 = {nrm2!r}")
    z = np.conj(w[0]) * w[1]
    return SpherePoint(np.array([z.real, z.imag, abs(w[1]) ** 2 - 0.5]) / nrm2)


def det_distance_check(wa, wb) -> tuple:
    """(|det(wa, wb)|, chordal distance of their images); these agree."""
    wa = np.asarray(wa, dtype=np.complex128)
    wb = np.asarray(wb, dtype=np.complex128)
    det = abs(wa[0] * wb[1] - wa[1] * wb[0])
    dist = float(np.linalg.norm(stereographic(wa).coords - stereographic(wb).coords))
    return float(det), dist


def inverse_stereographic(p) -> np.ndarray:
    """A unit vector in C^2 whose image is ``p`` (radius 1/2); phase is fixed
    by making the larger of the two coordinates real positive."""
    h = 2.0 * np.asarray(p, dtype=np.float64)
    a, b, c = h
    if c <= 0:
        w1 = math.sqrt((1 - c) / 2)
        return np.array([w1, complex(a, b) / (2 * w1)])
    w2 = math.sqrt((1 + c) / 2)
    return np.array([complex(a, -b) / (2 * w2), w2])


@dataclass(frozen=True, eq=False)
class SphericalCode:
    points: np.ndarray  # (m, 3), unit norm

    @property
    def min_distance(self) -> float:
        return float(pdist(self.points).min())

    def __len__(self):
        return len(self.points)


def loads_spherical_code(text: str) -> SphericalCode:
    """Parse whitespace-separated xyz triples, one point per line, '#' comments."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.replace(",", " ").split()
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 3 coordinates, got {len(fields)}")
        try:
            xyz = [float(f) for f in fields]
        except ValueError as err:
            raise ParseError(f"line {lineno}: {err}") from err
        if not all(math.isfinite(x) for x in xyz):
            raise ParseError(f"line {lineno}: non-finite coordinate")
        nrm = math.sqrt(sum(x * x for x in xyz))
        if abs(nrm - 1.0) > 1e-6:
            raise NotOnSphere(f"line {lineno}: norm {nrm!r} is not 1")
        pts.append([x / nrm for x in xyz])
    if len(pts) < 2:
        raise ParseError("a spherical code needs at least two points")
    return SphericalCode(np.array(pts))


def load_spherical_code(path) -> SphericalCode:
    return loads_spherical_code(Path(path).read_text())


def dumps_spherical_code(code: SphericalCode, header: str = "") -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [" ".join(format(float(x), ".17g") for x in p) for p in code.points]
    return "\n".join(lines) + "\n"


def code_to_complex(code: SphericalCode) -> Configuration:
    """Unit vectors in C^2 whose pairwise |det| is half the code's chord lengths."""
    vecs = np.array([inverse_stereographic(0.5 * p) for p in code.points])
    return from_array(Field.COMPLEX, vecs)


def complex_to_code(config: Configuration) -> SphericalCode:
    if config.field is not Field.COMPLEX or config.n != 2:
        raise WrongField("expected a configuration in C^2")
    return SphericalCode(np.array([2.0 * stereographic(w).coords for w in config.vectors]))


# -- polyhedra ---------------------------------------------------------------------

PHI = (1 + math.sqrt(5)) / 2


def _rotation_to_north(a: np.ndarray) -> np.ndarray:
    """Rotation matrix taking unit vector ``a`` to (0, 0, 1)."""
    z = np.array([0.0, 0.0, 1.0])
    v = np.cross(a, z)
    c = float(a @ z)
    s = np.linalg.norm(v)
    if s < 1e-15:
        return np.eye(3) if c > 0 else np.diag([1.0, -1.0, -1.0])
    vx = np.array([[0, -v[2], v[1]], [v[2], 0, -v[0]], [-v[1], v[0], 0]])
    return np.eye(3) + vx + vx @ vx * ((1 - c) / s**2)


def icosahedron_vertices() -> np.ndarray:
    """12 unit vertices, one exactly at the north pole."""
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts += [(0, s1, s2 * PHI), (s1, s2 * PHI, 0), (s2 * PHI, 0, s1)]
    pts = np.array(pts, dtype=np.float64)
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    out = pts @ _rotation_to_north(pts[0]).T
    out[0] = [0.0, 0.0, 1.0]
    return out


def dodecahedron_vertices() -> np.ndarray:
    """20 unit vertices, one exactly at the north pole."""
    pts = [tuple(s) for s in itertools.product((1, -1), repeat=3)]
    for s1 in (1, -1):
        for s2 in (1, -1):
            pts += [(0, s1 / PHI, s2 * PHI), (s1 / PHI, s2 * PHI, 0), (s2 * PHI, 0, s1 / PHI)]
    pts = np.array(pts, dtype=np.float64)
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    out = pts @ _rotation_to_north(pts[0]).T
    out[0] = [0.0, 0.0, 1.0]
    return out


def northern_hemisphere(vertices: np.ndarray) -> np.ndarray:
    return vertices[vertices[:, 2] >= -1e-12]


# -- experiments -------------------------------------------------------------------

@dataclass(frozen=True)
class HemisphereReport:
    name: str
    vertex_count: int
    polyhedron_value: float | None
    solver_best: float | None
    gap: float | None
    text: str


def _hemisphere_experiment(name: str, verts: np.ndarray, expected: int,
                           params: SolverParams | None) -> HemisphereReport:
    sel = northern_hemisphere(verts)
    count = len(sel)
    lines = [f"experiment: {name}", f"vertices with z >= 0: {count}"]
    if count != expected:
        lines.append(f"expected {expected}; not running the solver")
        return HemisphereReport(name, count, None, None, None, "\n".join(lines) + "\n")
    poly_val = min_det(from_array(Field.REAL, sel))
    if params is None:
        params = SolverParams(softmin_beta_schedule=EXPERIMENT_SCHEDULE)
    res = solve(Problem(Field.REAL, 3, count), params)
    gap = res.best_value - poly_val
    lines += [
        f"polyhedron D: {fmt12(poly_val)}",
        f"solver best D: {fmt12(res.best_value)}",
        f"solver - polyhedron: {fmt12(gap)}",
        f"solver seed: {params.seed} restarts: {params.restarts}",
        "note: evidence only; no optimality is claimed",
    ]
    return HemisphereReport(name, count, poly_val, res.best_value, gap, "\n".join(lines) + "\n")


def icosahedron_experiment(params: SolverParams | None = None) -> HemisphereReport:
    """Compare the six upper icosahedron vertices with the solver for 6 vectors in R^3."""
    return _hemisphere_experiment("icosahedron", icosahedron_vertices(), 6, params)


def dodecahedron_experiment(params: SolverParams | None = None) -> HemisphereReport:
    """Same comparison for the dodecahedron; runs only if exactly 10 vertices have z >= 0."""
    return _hemisphere_experiment("dodecahedron", dodecahedron_vertices(), 10, params)


@dataclass(frozen=True)
class TetraCubeReport:
    is_cube: bool
    edge_length: float
    dot_values: tuple
    neighbor_counts: tuple
    text: str


def tetra_cube_check() -> TetraCubeReport:
    """The regular tetrahedron and its negation together form a cube."""
    v = regular_simplex_vertices(3).vertices
    pts = np.vstack([v, -v])
    dots = pts @ pts.T
    off = dots[~np.eye(8, dtype=bool)]
    dot_values = tuple(sorted({round(float(x), 12) for x in off}))
    dots_ok = bool(np.all(np.min(np.abs(off[:, None] - np.array([-1, -1 / 3, 1 / 3, 1])), axis=1) < 1e-12))
    dist = np.linalg.norm(pts[:, None] - pts[None], axis=-1)
    np.fill_diagonal(dist, np.inf)
    edge = float(dist.min())
    neighbors = tuple(int(c) for c in np.sum(np.abs(dist - edge) < 1e-9, axis=1))
    is_cube = dots_ok and all(c == 3 for c in neighbors) and abs(edge - 2 / math.sqrt(3)) < 1e-12
    text = "\n".join([
        "experiment: tetra-cube",
        f"dot products: {', '.join(fmt12(x) for x in dot_values)}",
        f"edge length: {fmt12(edge)}",
        f"neighbors per vertex: {', '.join(str(c) for c in neighbors)}",
        f"cube: {'yes' if is_cube else 'no'}",
    ]) + "\n"
    return TetraCubeReport(is_cube, edge, dot_values, neighbors, text)


@dataclass(frozen=True)
class NonmatchResult:
    name: str
    match_found: bool
    closest_subset: tuple
    closest_deviation: float
    subsets_checked: int


def tetra_match_scan(code: SphericalCode, tol: float = 1e-6, name: str = "") -> NonmatchResult:
    """Look for 4 points whose 4 triple determinants all equal the regular-tetrahedron value."""
    target = regular_det_value(3)
    best_dev, best_sub = math.inf, ()
    found = False
    for sub in itertools.combinations(range(len(code)), 4):
        cfg = from_array(Field.REAL, code.points[list(sub)])
        dev = float(np.max(np.abs(subset_dets(cfg) - target)))
        if dev < best_dev:
            best_dev, best_sub = dev, sub
        found |= dev <= tol
    n_sub = math.comb(len(code), 4)
    return NonmatchResult(name, found, best_sub, best_dev, n_sub)


@dataclass(frozen=True)
class NonmatchReport:
    results: tuple
    text: str


def eight_vector_nonmatch_check(code8: SphericalCode, maxvol8: SphericalCode,
                                control: SphericalCode | None = None,
                                tol: float = 1e-6) -> NonmatchReport:
    """Scan both 8-point sets (and an optional control) for a regular-tetrahedron 4-subset."""
    inputs = [("spherical-code-8", code8), ("max-volume-8", maxvol8)]
    if control is not None:
        inputs.append(("control", control))
    results = tuple(tetra_match_scan(c, tol, name) for name, c in inputs)
    lines = [f"experiment: eight-nonmatch (target {fmt12(regular_det_value(3))}, tol {tol:g})"]
    for r in results:
        lines.append(
            f"{r.name}: subsets={r.subsets_checked} match={'yes' if r.match_found else 'no'} "
            f"closest={r.closest_subset} deviation={fmt12(r.closest_deviation)}"
        )
    return NonmatchReport(results, "\n".join(lines) + "\n")


def reference_code(name: str) -> SphericalCode:
    """Shipped point sets: 'tetrahedron', 'octahedron', 'code8', 'maxvol8'."""
    return load_spherical_code(DATA_DIR / f"{name}.txt")


def asymptotic_table(n_max: int) -> list:
    """[(n, sqrt((n+1)^(n-1)/n^n))] for n = 1..n_max."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    return [(n, math.exp(log_regular_det_value(n))) for n in range(1, n_max + 1)]


def format_table(rows) -> str:
    return "".join(f"{n} {fmt12(v)}\n" for n, v in rows)


def spectrum_preserved(a: Configuration, b: Configuration, tol: float = 1e-12) -> bool:
    va, vb = det_spectrum(a).values, det_spectrum(b).values
    return bool(np.all(np.abs(va - vb) <= tol))
