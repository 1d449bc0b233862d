"""The hyperoctahedral group B_n acting on cells and face sets.

An element is a signed permutation ``(perm, flips)``. It sends a cell ``c``
to the cell whose ``i``-th entry is ``c[perm^-1(i)]``, with 0 and 1 swapped
when ``flips[i]`` is set. As a matrix this is the signed permutation matrix
with entry ``+-1`` at ``(perm(i), i)``.

Internally indices are 0-based; the JSON form uses 1-based images.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .cells import STAR, Cell, enumerate_cells
from .errors import DimensionMismatch, EmptyInput, InvalidDimension


@dataclass(frozen=True)
class SignedPermutation:
    perm: tuple
    flips: tuple

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        flips = tuple(bool(f) for f in self.flips)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        if len(flips) != len(perm):
            raise ValueError("perm and flips differ in length")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "flips", flips)

    @property
    def n(self):
        return len(self.perm)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (False,) * n)

    @property
    def inverse_perm(self):
        inv = [0] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
        return tuple(inv)

    def __matmul__(self, other):
        """Composition: ``(g @ h)`` acts as ``h`` first, then ``g``."""
        if self.n != other.n:
            raise DimensionMismatch(f"B_{self.n} and B_{other.n}")
        ginv = self.inverse_perm
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        flips = tuple(self.flips[i] ^ other.flips[ginv[i]] for i in range(self.n))
        return SignedPermutation(perm, flips)

    def inverse(self):
        ginv = self.inverse_perm
        return SignedPermutation(ginv, tuple(self.flips[self.perm[i]] for i in range(self.n)))

    def matrix(self):
        m = np.zeros((self.n, self.n), dtype=int)
        for i, p in enumerate(self.perm):
            m[p, i] = -1 if self.flips[p] else 1
        return m

    def key(self):
        """Dense integer key, unique within B_n."""
        k = 0
        for p in self.perm:
            k = k * self.n + p
        for f in self.flips:
            k = 2 * k + f
        return k

    def to_json(self):
        return json.dumps(self.to_dict())

    def to_dict(self):
        return {"perm": [p + 1 for p in self.perm], "flips": list(self.flips)}

    @classmethod
    def from_dict(cls, data):
        perm = [int(p) - 1 for p in data["perm"]]
        flips = data.get("flips", [False] * len(perm))
        return cls(tuple(perm), tuple(bool(f) for f in flips))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def apply(g, cell):
    if g.n != len(cell):
        raise DimensionMismatch(f"B_{g.n} acting on a cell of length {len(cell)}")
    inv = g.inverse_perm
    out = []
    for i in range(g.n):
        e = cell[inv[i]]
        if g.flips[i] and e != STAR:
            e = 1 - e
        out.append(e)
    return Cell(out)


def apply_point(g, point):
    """The same isometry on real points of ``[0,1]^n`` (flip means ``x -> 1 - x``)."""
    point = np.asarray(point, dtype=float)
    if point.shape[-1] != g.n:
        raise DimensionMismatch(f"B_{g.n} acting on points of length {point.shape[-1]}")
    out = point[..., list(g.inverse_perm)]
    flips = np.array(g.flips)
    return np.where(flips, 1.0 - out, out)


@lru_cache(maxsize=None)
def _group(n):
    return tuple(
        SignedPermutation(p, f)
        for p in permutations(range(n))
        for f in product((False, True), repeat=n)
    )


def group_elements(n):
    """All ``2^n n!`` elements of B_n, identity first."""
    if not 1 <= n <= 8:
        raise InvalidDimension(f"n={n} outside 1..8")
    return list(_group(n))


def apply_to_face_set(g, faces):
    return frozenset(apply(g, f) for f in faces)


# -- face-index tables ----------------------------------------------------
# Faces of Q^n are indexed 0..F-1 in ascending cell id order, which is the
# same as string order with '0' < '1' < '*'. A face set is then a bitmask.


@lru_cache(maxsize=None)
def face_index(n):
    faces = enumerate_cells(n, 2)
    return tuple(faces), {f: i for i, f in enumerate(faces)}


@lru_cache(maxsize=None)
def face_action_table(n):
    """Array ``T`` of shape ``(|B_n|, F)``: ``T[g, i]`` is the index of ``g . face_i``."""
    faces, index = face_index(n)
    table = np.array([[index[apply(g, f)] for f in faces] for g in _group(n)], dtype=np.int64)
    table.setflags(write=False)
    return table


def faces_to_mask(faces, n=None):
    faces = [Cell(f) for f in faces]
    if n is None:
        n = len(faces[0]) if faces else 4
    _, index = face_index(n)
    mask = 0
    for f in faces:
        if len(f) != n:
            raise DimensionMismatch(f"{f} is not a cell of Q^{n}")
        try:
            mask |= 1 << index[f]
        except KeyError:
            raise ValueError(f"{f} is not a 2-face") from None
    return mask


def mask_to_faces(mask, n=4):
    faces, _ = face_index(n)
    return [faces[i] for i in range(len(faces)) if mask >> i & 1]


def _indices(faces, n):
    _, index = face_index(n)
    try:
        return np.array(sorted(index[Cell(f)] for f in faces), dtype=np.int64)
    except KeyError as err:
        raise ValueError(f"{err.args[0]} is not a 2-face of Q^{n}") from None


def _images(faces):
    faces = list(faces)
    if not faces:
        raise EmptyInput("face set is empty")
    n = len(faces[0])
    if any(len(f) != n for f in faces):
        raise DimensionMismatch("face set mixes cell lengths")
    idx = _indices(faces, n)
    return n, face_action_table(n)[:, idx]


def canonical_form(faces):
    """Lexicographically least sorted image of ``faces`` over all of B_n."""
    n, images = _images(faces)
    images = np.sort(images, axis=1)
    # lexsort keys: last key is primary
    best = np.lexsort(images.T[::-1])[0]
    all_faces, _ = face_index(n)
    return [str(all_faces[i]) for i in images[best]]


def canonical_mask(faces):
    n, images = _images(faces)
    images = np.sort(images, axis=1)
    best = images[np.lexsort(images.T[::-1])[0]]
    return sum(1 << int(i) for i in best)


def orbit_and_stabilizer(faces):
    """Return ``(orbit, stabilizer_order)``; the orbit is a set of frozensets of cells."""
    faces = [Cell(f) for f in faces]
    n, images = _images(faces)
    masks = [sum(1 << int(i) for i in row) for row in images]
    own = faces_to_mask(faces, n)
    stabilizer = sum(m == own for m in masks)
    orbit = {frozenset(mask_to_faces(m, n)) for m in set(masks)}
    return orbit, stabilizer


def orbit(faces):
    return orbit_and_stabilizer(faces)[0]
