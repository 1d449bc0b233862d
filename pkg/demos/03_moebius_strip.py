"""
A Möbius strip made of six squares
==================================

The six squares below form a surface with one boundary loop that cannot be
oriented. No subset of the squares of the ordinary 3-cube does this.
"""

from itertools import combinations

from hypersurf.cells import enumerate_cells
from hypersurf.surfaces import (
    FaceComplex,
    boundary_loops,
    builtin_moebius,
    classify_surface,
    edge_degrees,
    is_orientable,
)

m = builtin_moebius()
print("faces:", ", ".join(m.face_strings()))
print(classify_surface(m))

loop = boundary_loops(m)[0]
print(f"boundary: {len(loop)} edges:", " ".join(str(e) for e in loop))

degrees = sorted(edge_degrees(m).values())
print("edge degrees:", {d: degrees.count(d) for d in set(degrees)})

###############################################################################
# Negative control: every subset of the 6 squares of Q^3.

faces3 = enumerate_cells(3, 2)
twisted = [
    sub
    for k in range(1, 7)
    for sub in combinations(faces3, k)
    if not is_orientable(FaceComplex(sub, 3))
]
print("non-orientable subsets of Q^3:", len(twisted))
