"""Exhaustive census of closed cubical surfaces in the tesseract.

Every non-empty subset of the 24 squares of ``Q^4`` is a 24-bit mask. For
each of the 32 edges we precompute the mask of the three squares containing
it; a subset is edge-regular iff ``popcount(subset & edge_mask)`` is 0 or 2
for every edge. The vertex-link test then runs on the survivors only.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .cells import cofaces, enumerate_cells
from .errors import UnsupportedDimension
from .surfaces import FaceComplex, classify_surface, is_closed_surface
from .symmetry import canonical_form, face_index, orbit_and_stabilizer

CHUNK_BITS = 20


def edge_masks(n=4):
    _, index = face_index(n)
    masks = []
    for e in enumerate_cells(n, 1):
        m = 0
        for f in cofaces(e, 2):
            m |= 1 << index[f]
        masks.append(m)
    return masks


def worker_count():
    """Worker threads for the scan, capped by ``HYPERSURF_THREADS``."""
    cap = os.environ.get("HYPERSURF_THREADS")
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def _scan_range(start, stop, masks):
    s = np.arange(start, stop, dtype=np.uint32)
    ok = np.ones(s.shape, dtype=bool)
    for m in masks:
        # degree in {0, 2}  <=>  (degree | 2) == 2
        ok &= (np.bitwise_count(s & np.uint32(m)) | 2) == 2
    return (s[ok]).tolist()


def scan_edge_regular(n=4, threads=None):
    """All non-empty face masks whose every edge has degree 0 or 2, ascending."""
    if n != 4:
        raise UnsupportedDimension(f"census is implemented for n=4 only, got n={n}")
    masks = edge_masks(n)
    total = 1 << len(face_index(n)[0])
    step = 1 << CHUNK_BITS
    ranges = [(max(lo, 1), min(lo + step, total)) for lo in range(0, total, step)]
    threads = threads or worker_count()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda r: _scan_range(*r, masks), ranges))
    else:
        parts = [_scan_range(lo, hi, masks) for lo, hi in ranges]
    return [m for part in parts for m in part]


def enumerate_closed_surfaces(n=4, threads=None):
    """All closed cubical surfaces in ``Q^4``, sorted by face mask."""
    survivors = scan_edge_regular(n, threads)
    return [c for c in (FaceComplex.from_mask(m, n) for m in survivors) if is_closed_surface(c)]


def sphere_label_order(classes):
    """Assign labels A, B, ... to single-sphere classes by (orbit size, face count, canonical form)."""
    spheres = [c for c in classes if c["report"].name == "S2"]
    spheres.sort(key=lambda c: (c["orbit_size"], len(c["canonical"]), c["canonical_ids"]))
    return {id(c): chr(ord("A") + i) for i, c in enumerate(spheres)}


def classify_all(surfaces):
    """Group surfaces into B_n orbits.

    Returns one dict per class, ordered by canonical form, with keys
    ``canonical`` (face strings), ``orbit_size``, ``stabilizer_order``,
    ``members`` (count of input surfaces in the class), ``report`` and
    ``label``.
    """
    groups = {}
    for s in surfaces:
        key = tuple(canonical_form(s.faces))
        groups.setdefault(key, []).append(s)
    _, index = face_index(surfaces[0].n) if surfaces else (None, {})
    classes = []
    for key in sorted(groups, key=lambda k: [_sort_key(c) for c in k]):
        rep = FaceComplex(key)
        orb, stab = orbit_and_stabilizer(rep.faces)
        classes.append({
            "canonical": list(key),
            "canonical_ids": [_sort_key(c) for c in key],
            "orbit_size": len(orb),
            "stabilizer_order": stab,
            "members": len(groups[key]),
            "report": classify_surface(rep),
        })
    labels = sphere_label_order(classes)
    for c in classes:
        c["label"] = labels.get(id(c), c["report"].name)
        del c["canonical_ids"]
    return classes


def _sort_key(text):
    return ["01*".index(ch) for ch in text]
