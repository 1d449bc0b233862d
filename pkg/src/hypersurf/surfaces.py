"""Two-dimensional cubical complexes: closure, surface tests and invariants."""

from collections import Counter, defaultdict, deque
from dataclasses import asdict, dataclass
from functools import cached_property

from .cells import Cell, boundary_cells, enumerate_cells, face_vertex_cycle, parse_cell
from .errors import DimensionMismatch, NotAFace, NotASurface, VertexNotInComplex
from .symmetry import faces_to_mask, mask_to_faces

DISJOINT_UNION = " ⊔ "
MOEBIUS = "Möbius strip"


class FaceComplex:
    """A set of 2-faces of ``Q^n`` together with its closure.

    Accepts cells, star-notation strings, or (for ``n=4``) a face bitmask via
    :meth:`from_mask`.
    """

    def __init__(self, faces, n=None):
        cells = []
        for f in faces:
            c = parse_cell(f) if isinstance(f, str) else Cell(f)
            if c.dim != 2:
                raise NotAFace(f"{c} has dimension {c.dim}, expected 2")
            cells.append(c)
        if n is None:
            n = len(cells[0]) if cells else 4
        if any(len(c) != n for c in cells):
            raise DimensionMismatch(f"face set is not contained in Q^{n}")
        self.n = n
        self.faces = frozenset(cells)

    @classmethod
    def from_mask(cls, mask, n=4):
        return cls(mask_to_faces(mask, n), n)

    @cached_property
    def mask(self):
        return faces_to_mask(self.faces, self.n)

    def sorted_faces(self):
        return sorted(self.faces)

    def face_strings(self):
        return [str(f) for f in self.sorted_faces()]

    @cached_property
    def edges(self):
        return frozenset(e for f in self.faces for e in boundary_cells(f, 1))

    @cached_property
    def vertices(self):
        return frozenset(v for f in self.faces for v in boundary_cells(f, 0))

    @cached_property
    def edge_degrees(self):
        return Counter(e for f in self.faces for e in boundary_cells(f, 1))

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.sorted_faces())

    def __eq__(self, other):
        return isinstance(other, FaceComplex) and self.n == other.n and self.faces == other.faces

    def __hash__(self):
        return hash((self.n, self.faces))

    def __repr__(self):
        return f"FaceComplex([{', '.join(repr(s) for s in self.face_strings())}])"


def as_complex(obj):
    return obj if isinstance(obj, FaceComplex) else FaceComplex(obj)


def closure(faces):
    """Return ``(vertices, edges, faces)`` of the downward closure as frozensets."""
    c = as_complex(faces)
    return c.vertices, c.edges, c.faces


def edge_degrees(complex_):
    return dict(as_complex(complex_).edge_degrees)


def euler_characteristic(complex_):
    c = as_complex(complex_)
    return len(c.vertices) - len(c.edges) + len(c.faces)


def vertex_link_is_single_cycle(complex_, vertex):
    """Whether the faces around ``vertex``, glued along shared edges, form one cycle."""
    c = as_complex(complex_)
    vertex = parse_cell(vertex) if isinstance(vertex, str) else Cell(vertex)
    if vertex not in c.vertices:
        raise VertexNotInComplex(f"{vertex} is not a vertex of the complex")
    around = [f for f in c.faces if vertex in boundary_cells(f, 0)]
    by_edge = defaultdict(list)
    for f in around:
        for e in boundary_cells(f, 1):
            if vertex in boundary_cells(e, 0):
                by_edge[e].append(f)
    adj = defaultdict(set)
    for fs in by_edge.values():
        for a in fs:
            adj[a].update(b for b in fs if b != a)
    if any(len(adj[f]) != 2 for f in around):
        return False
    return len(_reachable(around[0], adj)) == len(around)


def _reachable(start, adj):
    seen = {start}
    todo = [start]
    while todo:
        for b in adj[todo.pop()]:
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def edge_regular(complex_):
    """Every closure edge lies in exactly two faces."""
    c = as_complex(complex_)
    return bool(c.faces) and all(d == 2 for d in c.edge_degrees.values())


def is_closed_surface(complex_):
    c = as_complex(complex_)
    if not edge_regular(c):
        return False
    return all(vertex_link_is_single_cycle(c, v) for v in c.vertices)


def face_components(complex_):
    """Faces grouped into components of the shared-edge adjacency graph."""
    c = as_complex(complex_)
    by_edge = defaultdict(list)
    for f in c.faces:
        for e in boundary_cells(f, 1):
            by_edge[e].append(f)
    adj = defaultdict(set)
    for fs in by_edge.values():
        for a in fs:
            adj[a].update(fs)
    comps = []
    left = set(c.faces)
    for f in sorted(c.faces):
        if f in left:
            comp = _reachable(f, adj)
            left -= comp
            comps.append(FaceComplex(comp, c.n))
    return comps


def connected_components(complex_):
    return len(face_components(complex_))


def _require_surface(c):
    bad = [e for e, d in c.edge_degrees.items() if d > 2]
    if bad:
        raise NotASurface(f"edge {min(bad)} lies in {c.edge_degrees[min(bad)]} faces")


def _directed_edges(face):
    cyc = face_vertex_cycle(face)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        edge = Cell(x if x == y else 2 for x, y in zip(a, b))
        yield edge, 1 if a < b else -1


def orientation(complex_):
    """Consistent face orientations ``{face: +1/-1}``, or ``None`` if none exists.

    Orientation ``+1`` traverses :func:`face_vertex_cycle` forwards. Faces
    sharing an edge must traverse it in opposite directions.
    """
    c = as_complex(complex_)
    _require_surface(c)
    incid = defaultdict(list)
    for f in c.faces:
        for e, d in _directed_edges(f):
            incid[e].append((f, d))
    sign = {}
    for start in sorted(c.faces):
        if start in sign:
            continue
        sign[start] = 1
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for e, d in _directed_edges(f):
                for g, dg in incid[e]:
                    if g == f:
                        continue
                    want = -sign[f] * d * dg
                    if g not in sign:
                        sign[g] = want
                        queue.append(g)
                    elif sign[g] != want:
                        return None
    return sign


def is_orientable(complex_):
    return orientation(complex_) is not None


def boundary_edges(complex_):
    c = as_complex(complex_)
    _require_surface(c)
    return sorted(e for e, d in c.edge_degrees.items() if d == 1)


def boundary_loops(complex_):
    """Boundary edges grouped into connected loops (each loop a sorted edge list)."""
    edges = boundary_edges(complex_)
    by_vertex = defaultdict(list)
    for e in edges:
        for v in boundary_cells(e, 0):
            by_vertex[v].append(e)
    adj = defaultdict(set)
    for es in by_vertex.values():
        for e in es:
            adj[e].update(es)
    loops = []
    left = set(edges)
    for e in edges:
        if e in left:
            comp = _reachable(e, adj)
            left -= comp
            loops.append(sorted(comp))
    return loops


def boundary_components(complex_):
    return len(boundary_loops(complex_))


@dataclass(frozen=True)
class SurfaceReport:
    num_faces: int
    num_edges: int
    num_vertices: int
    euler_characteristic: int
    components: int
    orientable: bool
    boundary_components: int
    name: str

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**{k: data[k] for k in cls.__dataclass_fields__})


def component_name(chi, orientable, boundary):
    if boundary == 0 and orientable and chi == 2:
        return "S2"
    if boundary == 0 and orientable and chi == 0:
        return "T2"
    if boundary == 1 and not orientable and chi == 0:
        return MOEBIUS
    return f"({chi}, {'orientable' if orientable else 'non-orientable'}, {boundary})"


def classify_surface(complex_):
    c = as_complex(complex_)
    _require_surface(c)
    names = []
    orientable = True
    for comp in face_components(c):
        o = is_orientable(comp)
        orientable &= o
        names.append(component_name(euler_characteristic(comp), o, boundary_components(comp)))
    return SurfaceReport(
        num_faces=len(c.faces),
        num_edges=len(c.edges),
        num_vertices=len(c.vertices),
        euler_characteristic=euler_characteristic(c),
        components=len(names),
        orientable=orientable,
        boundary_components=boundary_components(c),
        name=DISJOINT_UNION.join(sorted(names)),
    )


# -- built-in complexes ----------------------------------------------------

MOEBIUS_FACES = ("**11", "*01*", "00**", "*11*", "*1*0", "0**0")


def builtin_moebius():
    """The six-face Möbius strip in Q^4."""
    return FaceComplex(MOEBIUS_FACES)


def cube_boundary(cube):
    cube = parse_cell(cube) if isinstance(cube, str) else Cell(cube)
    return FaceComplex(boundary_cells(cube, 2), len(cube))


def builtin_torus():
    """Product of the boundary squares in the (x1, x2) and (x3, x4) planes; 16 faces."""
    faces = [f for f in enumerate_cells(4, 2) if (f[0] == 2) != (f[1] == 2)]
    return FaceComplex(faces)


def builtin_two_spheres():
    return FaceComplex(cube_boundary("0***").faces | cube_boundary("1***").faces)


BUILTINS = {
    "moebius": builtin_moebius,
    "torus": builtin_torus,
    "sphere": lambda: cube_boundary("0***"),
    "two_spheres": builtin_two_spheres,
}
