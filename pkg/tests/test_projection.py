from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypersurf.cells import enumerate_cells, is_subcell, parse_cell
from hypersurf.errors import AtProjectionPole, InvalidSubdivision, NotACube, NotAFace, ZeroVector
from hypersurf.projection import (
    cube_embedding,
    format_obj,
    is_watertight,
    mesh_boundary_loops,
    mesh_edge_use,
    mesh_euler_characteristic,
    project_complex,
    project_point,
    rho,
    stereo,
    subdivide_face,
    tau,
    tau_inverse,
    triangulate,
    write_obj,
)
from hypersurf.surfaces import builtin_moebius, builtin_torus, cube_boundary, euler_characteristic
from hypersurf.symmetry import SignedPermutation, group_elements

VERTICES = np.array(list(product((0, 1), repeat=4)), dtype=float)
CUBES = ["0***", "1***", "*0**", "*1**", "**0*", "**1*", "***0", "***1"]


def read_obj(text):
    verts, faces = [], []
    for line in text.splitlines():
        tag, *rest = line.split()
        if tag == "v":
            verts.append([float(x) for x in rest])
        elif tag == "f":
            faces.append([int(x) - 1 for x in rest])
    return np.array(verts), faces


def test_cube_embedding_table():
    xyz = np.array([0.1, 0.2, 0.3])
    x, y, z = xyz
    expected = [(0, x, y, z), (1, x, y, z), (x, 0, y, z), (x, 1, y, z),
                (x, y, 0, z), (x, y, 1, z), (x, y, z, 0), (x, y, z, 1)]
    for cube, exp in zip(CUBES, expected):
        assert np.allclose(cube_embedding(cube)(xyz), exp)
    with pytest.raises(NotACube):
        cube_embedding("0**0")


def test_cube_embedding_corners():
    for cube in CUBES:
        emb = cube_embedding(cube)
        for corner in product((0, 1), repeat=3):
            v = parse_cell("".join(str(int(t)) for t in emb(np.array(corner, dtype=float))))
            assert v.dim == 0 and is_subcell(v, parse_cell(cube))


def test_tau():
    assert np.allclose(tau([0.5] * 4), 0)
    assert set(np.unique(tau(VERTICES))) == {-0.5, 0.5}
    p = np.array([0.3, -2.0, 7.0, 0.5])
    assert np.allclose(tau_inverse(tau(p)), p)


def test_rho():
    assert np.allclose(rho(tau(VERTICES)), tau(VERTICES))
    assert np.allclose(rho([0, 0, 0, 0.5]), [0, 0, 0, 1])
    with pytest.raises(ZeroVector):
        rho([0, 0, 0, 0])
    pts = np.random.default_rng(0).normal(size=(1000, 4))
    assert np.max(np.abs(np.linalg.norm(rho(pts), axis=1) - 1)) < 1e-12


def test_stereo():
    assert np.allclose(stereo([0, 0, 0, -1]), 0)
    assert np.allclose(stereo([1, 0, 0, 0]), [1, 0, 0])
    assert np.allclose(stereo([0.5] * 4), [1, 1, 1])
    with pytest.raises(AtProjectionPole):
        stereo([0, 0, 0, 1])


@given(st.lists(st.floats(-5, 5), min_size=4, max_size=4).filter(lambda p: abs(1 - p[3]) > 1e-3))
def test_stereo_formula(p):
    x, y, z, w = p
    assert np.allclose(stereo(p), [x / (1 - w), y / (1 - w), z / (1 - w)])


def test_vertices_hand_values():
    # tau(v) in {+-1/2}^4 has norm 1; dividing by 1 - w gives +-1 when w = +1/2, +-1/3 when w = -1/2
    expected = np.array([[(2 * c - 1) / (1 if v[3] else 3) for c in v[:3]] for v in VERTICES])
    assert np.max(np.abs(project_point(VERTICES) - expected)) < 1e-12
    assert np.allclose(project_point([1, 1, 1, 1]), [1, 1, 1])
    assert np.allclose(project_point([0, 0, 0, 0]), [-1 / 3] * 3)


def test_no_face_reaches_pole():
    for f in enumerate_cells(4, 2):
        pts, _, _ = subdivide_face(f, 32)
        w = rho(tau(pts))[:, 3]
        assert np.min(1 - w) > 0.05


def test_subdivide_counts():
    pts, keys, quads = subdivide_face("**11", 1)
    assert len(pts) == 4 and len(quads) == 1
    pts, keys, quads = subdivide_face("*0*1", 8)
    assert pts.shape == (81, 4) and quads.shape == (64, 4)
    with pytest.raises(InvalidSubdivision):
        subdivide_face("**11", 0)
    with pytest.raises(NotAFace):
        subdivide_face("*011", 2)


def test_shared_edge_samples_agree():
    a_pts, a_keys, _ = subdivide_face("**11", 5)
    b_pts, b_keys, _ = subdivide_face("*1*1", 5)
    shared = set(a_keys) & set(b_keys)
    assert len(shared) == 6  # edge *111
    pa = {k: p for k, p in zip(a_keys, a_pts)}
    pb = {k: p for k, p in zip(b_keys, b_pts)}
    for k in shared:
        assert np.array_equal(pa[k], pb[k])


def test_moebius_mesh():
    m = project_complex(builtin_moebius(), 8)
    assert m.num_quads == 384
    assert mesh_boundary_loops(m) == 1
    assert not is_watertight(m)
    assert mesh_euler_characteristic(m) == 0
    assert len(m.provenance) == 384


def test_sphere_mesh_watertight():
    for k in (1, 2, 3, 5):
        m = project_complex(cube_boundary("*1**"), k)
        assert is_watertight(m)
        assert mesh_euler_characteristic(m) == 2


def test_torus_mesh():
    m = project_complex(builtin_torus(), 4)
    assert is_watertight(m)
    assert mesh_euler_characteristic(m) == 0 == euler_characteristic(builtin_torus())


def test_mesh_indices_valid():
    m = project_complex(builtin_torus(), 3)
    assert m.quads.min() >= 0 and m.quads.max() < m.num_vertices
    assert all(len(set(q)) == 4 for q in m.quads.tolist())
    assert len(np.unique(m.quads)) == m.num_vertices


def test_orientable_mesh_is_consistently_wound():
    m = project_complex(builtin_torus(), 2)
    directed = {}
    for q in m.quads.tolist():
        for a, b in zip(q, q[1:] + q[:1]):
            directed[(a, b)] = directed.get((a, b), 0) + 1
    assert all(v == 1 for v in directed.values())
    assert all((b, a) in directed for a, b in directed)


@pytest.mark.parametrize("g", group_elements(4)[::53])
def test_rotation_keeps_counts(g):
    ref = project_complex(builtin_torus(), 2)
    m = project_complex(builtin_torus(), 2, g)
    assert m.num_quads == ref.num_quads and m.num_vertices == ref.num_vertices
    assert is_watertight(m) and mesh_euler_characteristic(m) == 0


def test_rotation_moves_geometry():
    g = SignedPermutation((0, 1, 2, 3), (False, False, False, True))
    a = project_complex(cube_boundary("***0"), 2)
    b = project_complex(cube_boundary("***1"), 2, g)
    # the flipped outer cube lands exactly on the inner one
    assert np.allclose(np.sort(a.vertices, axis=0), np.sort(b.vertices, axis=0))


def test_obj_roundtrip(tmp_path):
    m = project_complex(["**11"], 1)
    path = tmp_path / "quad.obj"
    write_obj(m, path)
    text = path.read_text()
    assert sum(line.startswith("v ") for line in text.splitlines()) == 4
    assert sum(line.startswith("f ") for line in text.splitlines()) == 1
    verts, faces = read_obj(text)
    assert faces == m.quads.tolist()
    assert np.allclose(verts, m.vertices, atol=1e-8)


def test_obj_deterministic(tmp_path):
    m = project_complex(builtin_moebius(), 4)
    write_obj(m, tmp_path / "a.obj")
    write_obj(project_complex(builtin_moebius(), 4), tmp_path / "b.obj")
    assert (tmp_path / "a.obj").read_bytes() == (tmp_path / "b.obj").read_bytes()


def test_triangulate():
    m = project_complex(builtin_torus(), 2)
    tris = triangulate(m)
    assert len(tris) == 2 * m.num_quads
    text = format_obj(m, triangulated=True)
    _, faces = read_obj(text)
    assert all(len(f) == 3 for f in faces)
    counts = {}
    for t in tris.tolist():
        for a, b in zip(t, t[1:] + t[:1]):
            e = (min(a, b), max(a, b))
            counts[e] = counts.get(e, 0) + 1
    assert set(counts.values()) == {2}


def test_edge_use_of_single_quad():
    m = project_complex(["**11"], 1)
    assert sorted(mesh_edge_use(m).values()) == [1, 1, 1, 1]


@pytest.mark.parametrize("k", [1, 2, 4, 8])
def test_class_representatives_watertight(classes, k):
    for c in classes:
        m = project_complex(c["canonical"], k)
        assert is_watertight(m)
        assert mesh_euler_characteristic(m) == c["report"].euler_characteristic
        assert m.num_quads == len(c["canonical"]) * k * k
    assert mesh_euler_characteristic(project_complex(builtin_moebius(), k)) == 0
