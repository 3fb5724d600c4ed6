import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from maximin.core import abs_det_batch
from maximin.errors import AffinelyDependent, BadIndices
from maximin.simplex import (
    gram_eigen_check, max_volume_n_plus_2, orthogonal_simplex_pair, regular_det_value,
    regular_simplex_vertices, simplex_volume,
)

from oracles import mc_hull_volume, random_unitary, shoelace_area


def test_n1_antipodal():
    s = regular_simplex_vertices(1)
    assert s.vertices.shape == (2, 1)
    assert sorted(s.vertices[:, 0]) == pytest.approx([-1.0, 1.0], abs=1e-15)


@pytest.mark.parametrize("n", range(1, 9))
def test_gram_structure(n):
    s = regular_simplex_vertices(n)
    g = s.gram()
    assert np.allclose(np.diag(g), 1.0, atol=1e-12, rtol=0)
    off = g[~np.eye(n + 1, dtype=bool)]
    assert np.allclose(off, -1.0 / n, atol=1e-12, rtol=0)
    # psd, rank n
    ev = np.linalg.eigvalsh(g)
    assert ev[0] == pytest.approx(0.0, abs=1e-12)
    assert np.all(ev[1:] > 1e-6)


def test_n2_angles():
    v = regular_simplex_vertices(2).vertices
    for a, b in itertools.combinations(v, 2):
        assert a @ b == pytest.approx(math.cos(2 * math.pi / 3), abs=1e-12)


def test_n3_full_gram_eigenvalues():
    ev = np.linalg.eigvalsh(regular_simplex_vertices(3).gram())
    assert ev == pytest.approx([0.0, 4 / 3, 4 / 3, 4 / 3], abs=1e-12)


@pytest.mark.parametrize("n", range(1, 9))
def test_all_subset_dets_equal_closed_form(n):
    v = regular_simplex_vertices(n).vertices
    subs = list(itertools.combinations(range(n + 1), n))
    dets = abs_det_batch(np.array([v[list(s)] for s in subs]))
    assert np.allclose(dets, regular_det_value(n), atol=1e-10, rtol=0)


def test_regular_det_value_examples():
    assert regular_det_value(1) == 1.0
    assert regular_det_value(2) == pytest.approx(math.sqrt(3 / 4), abs=1e-15)
    assert regular_det_value(3) == pytest.approx(math.sqrt(16 / 27), abs=1e-15)
    assert regular_det_value(3) == pytest.approx(0.7698004, abs=1e-7)
    # log-space evaluation stays finite where the plain formula overflows
    assert 0 < regular_det_value(400) < 0.1


def test_simplex_volume_examples():
    assert simplex_volume([[0, 0], [1, 0], [0, 1]]) == pytest.approx(0.5, abs=1e-15)
    tri = regular_simplex_vertices(2).vertices
    assert simplex_volume(tri) == pytest.approx(3 * math.sqrt(3) / 4, abs=1e-12)
    assert simplex_volume(tri) == pytest.approx(shoelace_area(tri), abs=1e-12)
    with pytest.raises(AffinelyDependent):
        simplex_volume([[0, 0], [1, 1], [2, 2]])


def test_simplex_volume_embedded():
    # unit right triangle placed in R^4
    pts = np.zeros((3, 4))
    pts[1, 0] = 1
    pts[2, 1] = 1
    assert simplex_volume(pts) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(AffinelyDependent):
        simplex_volume(np.zeros((5, 3)))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 5), st.integers(0, 2))
def test_volume_rigid_and_permutation_invariant(seed, k, extra):
    rng = np.random.default_rng(seed)
    m = k + extra
    pts = rng.standard_normal((k + 1, m))
    base = simplex_volume(pts)
    q = random_unitary(rng, m, complex_=False)
    moved = pts @ q.T + rng.standard_normal(m)
    assert simplex_volume(moved) == pytest.approx(base, rel=1e-10, abs=1e-12)
    assert simplex_volume(pts[rng.permutation(k + 1)]) == pytest.approx(base, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_regular_beats_perturbed(n):
    rng = np.random.default_rng(n)
    v = regular_simplex_vertices(n).vertices
    best = simplex_volume(v)
    for _ in range(1000):
        p = v + 0.05 * rng.standard_normal(v.shape)
        p /= np.linalg.norm(p, axis=1, keepdims=True)
        assert simplex_volume(p) < best


def test_max_volume_n2_is_square():
    assert max_volume_n_plus_2(2) == 2.0
    square = np.array([[1, 0], [0, 1], [-1, 0], [0, -1]], dtype=float)
    assert shoelace_area(square) == 2.0


def test_max_volume_n2_grid():
    # exhaustive 0.01-rad grid over inscribed quadrilaterals, first vertex at angle 0
    grid = np.arange(0.0, 2 * np.pi, 0.01)
    a, b = np.meshgrid(grid, grid, indexing="ij")
    best = 0.0
    for t1 in grid:
        mask = (t1 < a) & (a < b)
        t2, t3 = a[mask], b[mask]
        th = np.stack([np.zeros_like(t2), np.full_like(t2, t1), t2, t3], axis=1)
        x, y = np.cos(th), np.sin(th)
        area = 0.5 * np.abs(np.sum(x * np.roll(y, -1, axis=1) - y * np.roll(x, -1, axis=1), axis=1))
        if area.size:
            best = max(best, float(area.max()))
    assert best <= 2 + 1e-9
    assert best > 2 - 1e-3


def test_max_volume_n3_monte_carlo():
    pts = orthogonal_simplex_pair(3)
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)
    est, se = mc_hull_volume(pts, 10**7, np.random.default_rng(7))
    assert abs(est - max_volume_n_plus_2(3)) <= 3 * se
    # triangular bipyramid: (3 sqrt(3) / 4) * 2 / 3
    assert max_volume_n_plus_2(3) == pytest.approx(math.sqrt(3) / 2, abs=1e-15)


@pytest.mark.parametrize("n", range(2, 9))
def test_max_volume_matches_orthogonal_construction(n):
    from scipy.spatial import ConvexHull
    assert ConvexHull(orthogonal_simplex_pair(n)).volume == pytest.approx(max_volume_n_plus_2(n), rel=1e-9)


def test_gram_eigen_check():
    s2 = regular_simplex_vertices(2)
    for sub in itertools.combinations(range(3), 2):
        assert gram_eigen_check(s2, sub) == pytest.approx([0.5, 1.5], abs=1e-10)
    s3 = regular_simplex_vertices(3)
    for sub in itertools.combinations(range(4), 3):
        assert gram_eigen_check(s3, sub) == pytest.approx([1 / 3, 4 / 3, 4 / 3], abs=1e-10)
    with pytest.raises(BadIndices):
        gram_eigen_check(s3, (0, 0, 1))
    with pytest.raises(BadIndices):
        gram_eigen_check(s3, (0, 1))


@pytest.mark.parametrize("n", range(2, 9))
def test_gram_eigen_product(n):
    s = regular_simplex_vertices(n)
    ev = gram_eigen_check(s, tuple(range(n)))
    assert ev[0] == pytest.approx(1 / n, abs=1e-10)
    assert ev[1:] == pytest.approx([(n + 1) / n] * (n - 1), abs=1e-10)
    assert math.prod(ev) == pytest.approx(regular_det_value(n) ** 2, rel=1e-10)
