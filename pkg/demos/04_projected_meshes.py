"""
Projecting surfaces to R^3
==========================

Each square is sampled on a k x k grid, translated so the tesseract is
centred at the origin, pushed radially onto S^3 and projected
stereographically from (0, 0, 0, 1). Shared samples are merged exactly, so
closed surfaces give watertight meshes.

Run from any directory; OBJ files go to ./meshes/.
"""

from pathlib import Path

import numpy as np

from hypersurf.census import classify_all, enumerate_closed_surfaces
from hypersurf.projection import (
    is_watertight,
    mesh_boundary_loops,
    mesh_euler_characteristic,
    project_complex,
    project_point,
    write_obj,
)
from hypersurf.surfaces import builtin_moebius
from hypersurf.symmetry import SignedPermutation

# the 16 vertices land on +-1 (outer cube, w=1) or +-1/3 (inner cube, w=0)
verts = np.array(np.meshgrid(*[[0, 1]] * 4, indexing="ij")).reshape(4, -1).T
print(np.round(project_point(verts), 4)[:4], "...")

out = Path("meshes")
out.mkdir(exist_ok=True)

classes = classify_all(enumerate_closed_surfaces(4))
for c in classes:
    mesh = project_complex(c["canonical"], k=8)
    name = c["label"].replace(" ⊔ ", "_").replace(" ", "_")
    write_obj(mesh, out / f"class_{name}.obj")
    print(f"{c['label']:8} quads={mesh.num_quads:5d} watertight={is_watertight(mesh)} "
          f"chi={mesh_euler_characteristic(mesh)}")

mesh = project_complex(builtin_moebius(), k=8)
write_obj(mesh, out / "moebius.obj")
print(f"Möbius   quads={mesh.num_quads:5d} boundary loops={mesh_boundary_loops(mesh)}")

###############################################################################
# A different outer cube: swap coordinates 1 and 4 before projecting.

g = SignedPermutation.from_dict({"perm": [4, 2, 3, 1], "flips": [False] * 4})
write_obj(project_complex(builtin_moebius(), 8, g), out / "moebius_rotated.obj")
print("wrote", sorted(p.name for p in out.iterdir()))
