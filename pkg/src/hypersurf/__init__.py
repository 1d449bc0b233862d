"""Closed cubical surfaces in the tesseract: enumeration, symmetry classes,
invariants and stereographic meshes."""

__version__ = "0.1.0"

from .cells import Cell, boundary_cells, cofaces, enumerate_cells, face_vertex_cycle, is_subcell, parse_cell
from .census import classify_all, enumerate_closed_surfaces
from .projection import QuadMesh, project_complex, project_point, write_obj
from .surfaces import FaceComplex, SurfaceReport, builtin_moebius, classify_surface, is_closed_surface
from .symmetry import SignedPermutation, apply, canonical_form, group_elements, orbit

__all__ = [
    "Cell", "FaceComplex", "QuadMesh", "SignedPermutation", "SurfaceReport",
    "apply", "boundary_cells", "builtin_moebius", "canonical_form", "classify_all",
    "classify_surface", "cofaces", "enumerate_cells", "enumerate_closed_surfaces",
    "face_vertex_cycle", "group_elements", "is_closed_surface", "is_subcell", "orbit",
    "parse_cell", "project_complex", "project_point", "write_obj",
]
