"""From the tesseract to R^3: centre, push onto S^3, project stereographically.

Points are numpy arrays with the coordinate axis last, so every map works on
a single point or on a batch. The pole is ``(0, 0, 0, 1)``, the direction of
the centre of the cube ``***1``; a signed permutation applied beforehand
chooses which cube ends up "outside".
"""

from dataclasses import dataclass, field

import numpy as np

from .cells import STAR, Cell, parse_cell
from .errors import AtProjectionPole, InvalidSubdivision, NotACube, NotAFace, NotASurface, ZeroVector
from .surfaces import as_complex, orientation
from .symmetry import apply_point

POLE_TOL = 1e-9
DEFAULT_SUBDIVISION = 8


def cube_embedding(cell3):
    """Map ``(x, y, z)`` in the unit cube onto the 3-cell ``cell3`` of Q^4.

    ``x, y, z`` fill the free coordinates in order; the fixed coordinate keeps
    its value. For ``"0***"`` this is ``(x, y, z) -> (0, x, y, z)``.
    """
    cell3 = parse_cell(cell3) if isinstance(cell3, str) else Cell(cell3)
    if len(cell3) != 4 or cell3.dim != 3:
        raise NotACube(f"{cell3} is not a 3-cell of Q^4")
    stars = list(cell3.stars)
    base = np.array([0.0 if e == STAR else float(e) for e in cell3])

    def embed(xyz):
        xyz = np.asarray(xyz, dtype=float)
        out = np.broadcast_to(base, xyz.shape[:-1] + (4,)).copy()
        out[..., stars] = xyz
        return out

    return embed


def tau(p):
    """Translate so the centre of Q^4 sits at the origin."""
    return np.asarray(p, dtype=float) - 0.5


def tau_inverse(p):
    return np.asarray(p, dtype=float) + 0.5


def rho(p):
    """Radial projection onto the unit sphere S^3."""
    p = np.asarray(p, dtype=float)
    norm = np.linalg.norm(p, axis=-1, keepdims=True)
    if np.any(norm == 0.0):
        raise ZeroVector("cannot project the origin onto S^3")
    return p / norm


def stereo(p):
    """``(x, y, z, w) -> (x, y, z) / (1 - w)``, from the pole ``(0, 0, 0, 1)``."""
    p = np.asarray(p, dtype=float)
    w = p[..., 3:4]
    if np.any(np.abs(1.0 - w) < POLE_TOL):
        raise AtProjectionPole("point at the projection pole (0, 0, 0, 1)")
    return p[..., :3] / (1.0 - w)


def project_point(p, pre_rotation=None):
    """``stereo(rho(tau(R p)))`` for points of the tesseract."""
    p = np.asarray(p, dtype=float)
    if pre_rotation is not None:
        p = apply_point(pre_rotation, p)
    return stereo(rho(tau(p)))


def _face(face):
    face = parse_cell(face) if isinstance(face, str) else Cell(face)
    if face.dim != 2:
        raise NotAFace(f"{face} has dimension {face.dim}, expected 2")
    return face


def subdivide_face(face, k):
    """Sample a square on a ``(k+1) x (k+1)`` grid.

    Returns ``(points, keys, quads)``: ``points`` has shape ``((k+1)**2, n)``
    with row ``a*(k+1) + b`` at step ``a`` along the first free axis and ``b``
    along the second; ``keys`` are the same points scaled by ``k`` as integer
    tuples, equal for samples shared with a neighbouring square; ``quads`` is
    a ``(k*k, 4)`` array of row indices, each in corner order
    (0,0), (1,0), (1,1), (0,1).
    """
    face = _face(face)
    if k < 1:
        raise InvalidSubdivision(f"subdivision must be >= 1, got {k}")
    i, j = face.stars
    ints = np.array([0 if e == STAR else e * k for e in face], dtype=np.int64)
    a, b = np.meshgrid(np.arange(k + 1), np.arange(k + 1), indexing="ij")
    grid = np.tile(ints, ((k + 1) ** 2, 1))
    grid[:, i] = a.ravel()
    grid[:, j] = b.ravel()
    points = grid / k
    keys = [tuple(row) for row in grid.tolist()]

    r = np.arange(k)
    a0, b0 = np.meshgrid(r, r, indexing="ij")
    a0, b0 = a0.ravel(), b0.ravel()
    idx = lambda u, v: u * (k + 1) + v  # noqa: E731
    quads = np.stack([idx(a0, b0), idx(a0 + 1, b0), idx(a0 + 1, b0 + 1), idx(a0, b0 + 1)], axis=1)
    return points, keys, quads


@dataclass
class QuadMesh:
    vertices: np.ndarray
    quads: np.ndarray
    provenance: list = field(default_factory=list)

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_quads(self):
        return len(self.quads)

    def to_dict(self):
        return {
            "vertices": [[float(x) for x in v] for v in self.vertices],
            "quads": [[int(i) for i in q] for q in self.quads],
        }


def project_complex(complex_, k=DEFAULT_SUBDIVISION, pre_rotation=None):
    """Subdivide every face, project all samples and assemble a shared-vertex quad mesh.

    Samples are merged by their exact integer grid key, so the mesh is
    watertight whenever the complex is a closed surface. For orientable
    complexes the quads are wound consistently.
    """
    c = as_complex(complex_)
    if not c.faces:
        raise ValueError("cannot project an empty complex")
    if pre_rotation is not None and pre_rotation.n != c.n:
        raise ValueError(f"rotation in B_{pre_rotation.n} for a complex in Q^{c.n}")
    try:
        signs = orientation(c) or {}
    except NotASurface:
        signs = {}
    key_index = {}
    points = []
    quads = []
    provenance = []
    for face in c.sorted_faces():
        pts, keys, fq = subdivide_face(face, k)
        local = np.empty(len(keys), dtype=np.int64)
        for r, key in enumerate(keys):
            if key not in key_index:
                key_index[key] = len(points)
                points.append(pts[r])
            local[r] = key_index[key]
        if signs.get(face, 1) < 0:
            fq = fq[:, ::-1]
        quads.append(local[fq])
        provenance.extend((str(face), divmod(q, k)) for q in range(k * k))

    pts4 = np.array(points)
    try:
        verts = project_point(pts4, pre_rotation)
    except AtProjectionPole:
        rotated = pts4 if pre_rotation is None else apply_point(pre_rotation, pts4)
        w = rho(tau(rotated))[:, 3]
        bad = int(np.argmax(np.abs(1.0 - w) < POLE_TOL))
        key = next(kk for kk, v in key_index.items() if v == bad)
        face = next(f for f in c.sorted_faces() if key in subdivide_face(f, k)[1])
        raise AtProjectionPole(
            f"sample {key} of face {face} projects to the pole", face=str(face), grid_index=key
        ) from None
    return QuadMesh(verts, np.concatenate(quads), provenance)


# -- mesh checks ---------------------------------------------------------------


def mesh_edge_use(mesh):
    """Map each undirected mesh edge ``(i, j)`` with ``i < j`` to the number of quads using it."""
    counts = {}
    for q in mesh.quads.tolist():
        for a, b in zip(q, q[1:] + q[:1]):
            e = (a, b) if a < b else (b, a)
            counts[e] = counts.get(e, 0) + 1
    return counts


def is_watertight(mesh):
    return all(v == 2 for v in mesh_edge_use(mesh).values())


def mesh_euler_characteristic(mesh):
    used = np.unique(mesh.quads)
    return len(used) - len(mesh_edge_use(mesh)) + len(mesh.quads)


def mesh_boundary_loops(mesh):
    """Number of connected components formed by edges used by a single quad."""
    edges = [e for e, v in mesh_edge_use(mesh).items() if v == 1]
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for e in edges for v in e})


def triangulate(mesh):
    """Split each quad along its shorter diagonal in R^3."""
    v = mesh.vertices
    tris = []
    for a, b, c, d in mesh.quads.tolist():
        if np.linalg.norm(v[a] - v[c]) <= np.linalg.norm(v[b] - v[d]):
            tris += [(a, b, c), (a, c, d)]
        else:
            tris += [(a, b, d), (b, c, d)]
    return np.array(tris, dtype=np.int64)


def format_obj(mesh, triangulated=False):
    # + 0.0 folds -0.0 into 0.0
    lines = [f"v {x + 0.0:.9g} {y + 0.0:.9g} {z + 0.0:.9g}" for x, y, z in mesh.vertices.tolist()]
    faces = triangulate(mesh) if triangulated else mesh.quads
    lines += ["f " + " ".join(str(i + 1) for i in f) for f in faces.tolist()]
    return "\n".join(lines) + "\n"


def write_obj(mesh, path, triangulated=False):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_obj(mesh, triangulated))
