"""Regular simplices on the unit sphere and closed-form volume/determinant values."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import abs_det_batch
from .errors import AffinelyDependent, BadIndices

AFFINE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SimplexVertices:
    n: int
    vertices: np.ndarray  # (n+1, n), unit rows

    def gram(self) -> np.ndarray:
        return self.vertices @ self.vertices.T


def helmert_basis(m: int) -> np.ndarray:
    """Orthonormal basis (rows) of the complement of the all-ones vector in R^m."""
    h = np.zeros((m - 1, m))
    for k in range(1, m):
        h[k - 1, :k] = 1.0
        h[k - 1, k] = -k
        h[k - 1] /= math.sqrt(k * (k + 1))
    return h


def regular_simplex_vertices(n: int) -> SimplexVertices:
    """n+1 unit vectors in R^n with all pairwise dot products -1/n.

    The standard basis of R^{n+1} is centred, scaled onto the unit sphere and
    expressed in the Helmert basis of the hyperplane orthogonal to (1, ..., 1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    centred = np.eye(n + 1) - 1.0 / (n + 1)
    centred /= math.sqrt(n / (n + 1))
    verts = centred @ helmert_basis(n + 1).T
    verts /= np.linalg.norm(verts, axis=1, keepdims=True)
    verts.setflags(write=False)
    return SimplexVertices(n, verts)


def simplex_volume(points) -> float:
    """k-dimensional volume of the simplex spanned by k+1 points in R^m.

    Uses |det(w_1 - w_0, ..., w_k - w_0)| / k! when m == k and the square root
    of the Gram determinant otherwise.
    """
    p = np.asarray(points, dtype=np.float64)
    k = p.shape[0] - 1
    m = p.shape[1]
    if k < 1:
        return 0.0 if k < 0 else 1.0
    d = p[1:] - p[0]
    if k > m or np.linalg.svd(d, compute_uv=False).min() <= AFFINE_TOL:
        raise AffinelyDependent(f"{k + 1} points in R^{m} do not span a {k}-simplex")
    if m == k:
        vol = abs_det_batch(d[None])[0]
    else:
        vol = math.sqrt(abs_det_batch((d @ d.T)[None])[0])
    return float(vol / math.factorial(k))


def log_regular_det_value(n: int) -> float:
    return 0.5 * ((n - 1) * math.log(n + 1) - n * math.log(n))


def regular_det_value(n: int) -> float:
    """sqrt((n+1)^(n-1) / n^n): every n-subset determinant of a regular simplex."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.exp(log_regular_det_value(n))


def max_volume_n_plus_2(n: int) -> float:
    """Largest volume of a polytope with n+2 vertices on the unit sphere of R^n.

    Attained by two regular simplices with floor(n/2)+1 and ceil(n/2)+1
    vertices spanning orthogonal subspaces.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    a, b = n // 2, n - n // 2
    if n <= 100:
        num = (a + 1) ** ((a + 1) / 2) * (b + 1) ** ((b + 1) / 2)
        return num / (a ** (a / 2) * b ** (b / 2)) / math.factorial(n)
    logv = (
        -math.lgamma(n + 1)
        + 0.5 * (a + 1) * math.log(a + 1) + 0.5 * (b + 1) * math.log(b + 1)
        - 0.5 * a * math.log(a) - 0.5 * b * math.log(b)
    )
    return math.exp(logv)


def gram_eigen_check(s: SimplexVertices, subset) -> list:
    """Eigenvalues (ascending) of the Gram matrix of n selected vertices.

    For a regular simplex these are 1/n once and (n+1)/n with multiplicity n-1.
    """
    idx = [int(i) for i in subset]
    if len(idx) != s.n or len(set(idx)) != len(idx) or min(idx) < 0 or max(idx) > s.n:
        raise BadIndices(f"need {s.n} distinct indices in 0..{s.n}, got {tuple(idx)}")
    sel = s.vertices[idx]
    return [float(x) for x in np.linalg.eigvalsh(sel @ sel.T)]


def orthogonal_simplex_pair(n: int) -> np.ndarray:
    """n+2 unit vectors: regular simplices of floor(n/2)+1 and ceil(n/2)+1
    vertices in complementary coordinate subspaces of R^n."""
    a, b = n // 2, n - n // 2
    out = np.zeros((n + 2, n))
    out[: a + 1, :a] = regular_simplex_vertices(a).vertices
    out[a + 1:, a:] = regular_simplex_vertices(b).vertices
    return out
