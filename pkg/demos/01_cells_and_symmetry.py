"""
Cells of the tesseract and its symmetry group
=============================================

Every cell of Q^4 is a word over {0, 1, *}. The 384 signed permutations of
B_4 act on those words by moving and complementing coordinates.
"""

from collections import Counter

from hypersurf.cells import boundary_cells, cofaces, enumerate_cells, face_vertex_cycle, parse_cell
from hypersurf.symmetry import SignedPermutation, apply, group_elements

# 81 cells, split by dimension
cells = enumerate_cells(4)
print(len(cells), "cells:", dict(sorted(Counter(c.dim for c in cells).items())))

# the edge (*,0,1,0) and what sits around it
edge = parse_cell("*010")
print(edge, "has endpoints", [str(v) for v in boundary_cells(edge, 0)])
print("and lies in the squares", [str(f) for f in cofaces(edge, 2)])

# corner order of a square, used for orientations and meshing
print("corners of **11:", [str(v) for v in face_vertex_cycle(parse_cell("**11"))])

###############################################################################
# The group. A signed permutation is stored as (perm, flips); composition is
# ``g @ h`` (apply h first).

G = group_elements(4)
print("|B_4| =", len(G), " |B_2| =", len(group_elements(2)))

g = SignedPermutation.from_json('{"perm": [4, 2, 3, 1], "flips": [false, false, false, true]}')
print(g.to_json(), "sends", edge, "to", apply(g, edge))
print("matrix:\n", g.matrix())

# the orbit of a square under B_4 is all 24 squares
print("orbit of **11:", len({apply(h, parse_cell("**11")) for h in G}), "squares")
