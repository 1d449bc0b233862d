"""
All closed surfaces in the tesseract
====================================

Scan the 2^24 subsets of squares, keep those where every edge is used by 0
or 2 squares, check the vertex links, then group the survivors into B_4
orbits.
"""

import time
from collections import Counter

from hypersurf.census import classify_all, enumerate_closed_surfaces
from hypersurf.surfaces import classify_surface

t0 = time.perf_counter()
surfaces = enumerate_closed_surfaces(4)
print(f"{len(surfaces)} closed surfaces in {time.perf_counter() - t0:.2f} s")
print(Counter(classify_surface(s).name for s in surfaces))

###############################################################################
# Orbits. Labels A-F for the single spheres follow (orbit size, face count,
# canonical form); the other two classes carry their surface name.

classes = classify_all(surfaces)
print(f"\n{'label':8}{'orbit':>6}{'faces':>6}{'V':>4}{'E':>4}  canonical representative")
for c in sorted(classes, key=lambda c: c["label"]):
    r = c["report"]
    print(f"{c['label']:8}{c['orbit_size']:>6}{r.num_faces:>6}{r.num_vertices:>4}{r.num_edges:>4}  "
          + ",".join(c["canonical"]))
print("orbit sizes sum to", sum(c["orbit_size"] for c in classes))
