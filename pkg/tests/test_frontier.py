import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from maximin import frontier as fr
from maximin.core import Field, det_spectrum, from_array, min_det, random_config, validate_config
from maximin.errors import DuplicateAfterFold, NotOnSphere, ParseError, WrongArity
from maximin.simplex import regular_det_value
from maximin.solver import SolverParams


def _angle_config(angles):
    return from_array("real", np.column_stack([np.cos(angles), np.sin(angles)]))


@pytest.mark.parametrize("k", range(2, 11))
def test_planar_optimal_value(k):
    p = fr.planar_optimal(k)
    assert np.all(p.angles >= 0) and np.all(p.angles < math.pi)
    assert min_det(p.config()) == pytest.approx(math.sin(math.pi / (k + 1)), abs=1e-12)
    assert fr.planar_bound(k) == math.sin(math.pi / (k + 1))


def test_planar_small_cases():
    assert min_det(fr.planar_optimal(2).config()) == pytest.approx(math.sqrt(3) / 2, abs=1e-12)
    assert min_det(fr.planar_optimal(3).config()) == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    with pytest.raises(WrongArity):
        fr.PlanarConfig(3, [0.0, 0.5])
    with pytest.raises(ValueError):
        fr.PlanarConfig(2, [0.0, 0.5, 0.5])


def test_fold_upper_examples():
    cfg = validate_config("real", 2, [[1, 0], [0, -1], [-1 / math.sqrt(2), 1 / math.sqrt(2)]])
    folded = fr.fold_upper(cfg)
    assert folded.angles == pytest.approx([0, math.pi / 2, 3 * math.pi / 4], abs=1e-12)
    assert np.allclose(det_spectrum(folded.config()).values, det_spectrum(cfg).values, atol=1e-12)
    with pytest.raises(DuplicateAfterFold):
        fr.fold_upper(validate_config("real", 2, [[1, 0], [0, 1], [-1, 0]]))


def test_fold_wraparound_duplicate():
    eps = 1e-12
    cfg = _angle_config(np.array([eps, 1.0, math.pi - eps / 2]))
    with pytest.raises(DuplicateAfterFold):
        fr.fold_upper(cfg)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_even_k_fold_gives_consecutive_polygon(k):
    # every other vertex of the regular (k+1)-gon, no two antipodal when k is even
    angles = 2 * math.pi * np.arange(k + 1) / (k + 1)
    folded = fr.fold_upper(_angle_config(angles)).canonical()
    assert folded.angles == pytest.approx(np.arange(k + 1) * math.pi / (k + 1), abs=1e-12)
    assert min_det(folded.config()) == pytest.approx(fr.planar_bound(k), abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 7))
def test_fold_preserves_spectrum(seed, k):
    cfg = random_config(np.random.default_rng(seed), "real", 2, k + 1)
    folded = fr.fold_upper(cfg)
    assert np.all(folded.angles >= 0) and np.all(folded.angles < math.pi)
    assert fr.spectrum_preserved(cfg, folded.config())
    assert min_det(cfg) <= fr.planar_bound(k) + 1e-12


def test_stereographic_examples():
    assert fr.stereographic([1, 0]).coords == pytest.approx([0, 0, -0.5])
    assert fr.stereographic([0, 1]).coords == pytest.approx([0, 0, 0.5])
    s = 1 / math.sqrt(2)
    assert fr.stereographic([s, s]).coords == pytest.approx([0.5, 0, 0], abs=1e-15)
    det, dist = fr.det_distance_check([1, 0], [0, 1])
    assert det == pytest.approx(1.0) and dist == pytest.approx(1.0)
    with pytest.raises(NotOnSphere):
        fr.SpherePoint([1.0, 0.0, 0.0])


def test_det_equals_chordal_distance_random():
    rng = np.random.default_rng(77)
    for _ in range(1000):
        w = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        w /= np.linalg.norm(w, axis=1, keepdims=True)
        det, dist = fr.det_distance_check(w[0], w[1])
        assert abs(det - dist) <= 1e-10


def test_inverse_stereographic_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(200):
        p = rng.standard_normal(3)
        p *= 0.5 / np.linalg.norm(p)
        w = fr.inverse_stereographic(p)
        assert np.linalg.norm(w) == pytest.approx(1.0, abs=1e-14)
        assert fr.stereographic(w).coords == pytest.approx(p, abs=1e-14)


def test_loader_reference_codes():
    tet = fr.reference_code("tetrahedron")
    assert len(tet) == 4 and tet.min_distance == pytest.approx(math.sqrt(8 / 3), abs=1e-12)
    octa = fr.reference_code("octahedron")
    assert len(octa) == 6 and octa.min_distance == pytest.approx(math.sqrt(2), abs=1e-12)


def test_loader_errors():
    with pytest.raises(ParseError, match="line 3"):
        fr.loads_spherical_code("# header\n1 0 0\n0 1\n")
    with pytest.raises(ParseError, match="line 2"):
        fr.loads_spherical_code("1 0 0\n0 x 0\n")
    with pytest.raises(NotOnSphere):
        fr.loads_spherical_code("1 0 0\n0 2 0\n")
    code = fr.loads_spherical_code("1 0 0  # east\n\n0 0 1\n")
    assert len(code) == 2


def test_code_to_complex():
    cfg = fr.code_to_complex(fr.reference_code("octahedron"))
    assert cfg.field is Field.COMPLEX and cfg.count == 6
    assert min_det(cfg) == pytest.approx(math.sqrt(2) / 2, abs=1e-9)
    tet = fr.code_to_complex(fr.reference_code("tetrahedron"))
    assert min_det(tet) == pytest.approx(math.sqrt(2 / 3), abs=1e-9)
    assert min_det(tet) == pytest.approx(regular_det_value(2) * math.sqrt(8 / 9), abs=1e-9)


def test_code_round_trip():
    code = fr.reference_code("code8")
    back = fr.complex_to_code(fr.code_to_complex(code))
    assert np.allclose(back.points, code.points, atol=1e-14)
    text = fr.dumps_spherical_code(code, header="round trip")
    again = fr.loads_spherical_code(text)
    assert np.array_equal(again.points, code.points)


def test_polyhedron_vertices():
    ico = fr.icosahedron_vertices()
    assert ico.shape == (12, 3)
    assert np.allclose(np.linalg.norm(ico, axis=1), 1.0, atol=1e-14)
    assert np.sum(np.all(np.abs(ico - [0, 0, 1]) < 1e-12, axis=1)) == 1
    top = fr.northern_hemisphere(ico)
    assert len(top) == 6 and np.all(top[:, 2] >= -1e-12)
    dod = fr.dodecahedron_vertices()
    assert dod.shape == (20, 3)
    assert len(fr.northern_hemisphere(dod)) == 10


def test_icosahedron_experiment():
    rep = fr.icosahedron_experiment()
    assert rep.vertex_count == 6
    assert rep.solver_best >= rep.polyhedron_value - 1e-6
    assert "no optimality is claimed" in rep.text


def test_dodecahedron_experiment_runs():
    rep = fr.dodecahedron_experiment(SolverParams(restarts=2, max_iters=100, seed=0))
    assert rep.vertex_count == 10
    assert rep.polyhedron_value == pytest.approx(min_det(from_array("real", fr.northern_hemisphere(fr.dodecahedron_vertices()))))
    assert rep.solver_best > 0


def test_tetra_cube():
    rep = fr.tetra_cube_check()
    assert rep.is_cube
    assert rep.edge_length == pytest.approx(2 / math.sqrt(3), abs=1e-12)
    assert rep.neighbor_counts == (3,) * 8
    assert rep.dot_values == pytest.approx((-1, -1 / 3, 1 / 3))


def test_eight_vector_nonmatch():
    rep = fr.eight_vector_nonmatch_check(
        fr.reference_code("code8"), fr.reference_code("maxvol8"), control=fr.reference_code("tetrahedron"))
    code8, maxvol8, control = rep.results
    assert not code8.match_found and not maxvol8.match_found
    assert code8.subsets_checked == 70 and maxvol8.subsets_checked == 70
    assert control.match_found and control.closest_deviation <= 1e-12


def test_reference_8_point_sets():
    code8 = fr.reference_code("code8")
    ang = math.degrees(math.acos(1 - code8.min_distance**2 / 2))
    assert ang == pytest.approx(74.8585, abs=1e-3)
    from scipy.spatial import ConvexHull
    vol = ConvexHull(fr.reference_code("maxvol8").points).volume
    assert vol == pytest.approx(math.sqrt((475 + 29 * math.sqrt(145)) / 250), abs=1e-9)


def test_asymptotic_table():
    rows = fr.asymptotic_table(10)
    assert rows[0] == (1, 1.0)
    assert rows[2][1] == pytest.approx(math.sqrt(16 / 27), abs=1e-15)
    vals = [v for _, v in rows]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert fr.format_table(rows[:2]).splitlines()[1].startswith("2 0.866025403784")
