"""Cells of the n-cube in star notation.

A cell of ``Q^n = [0,1]^n`` is a product of points and unit intervals, one
factor per coordinate, so it is written as a word over ``{0, 1, *}``. Entries
are stored as small integers ``ZERO=0, ONE=1, STAR=2``; reading the word as a
base-3 number (first coordinate most significant) gives the dense ``cell_id``.
"""

from functools import lru_cache
from itertools import combinations, product

from .errors import (
    DimensionMismatch,
    InvalidCharacter,
    InvalidDimension,
    NotAFace,
    WrongLength,
)

ZERO, ONE, STAR = 0, 1, 2
MAX_N = 8

_CHARS = "01*"
_VALUES = {c: v for v, c in enumerate(_CHARS)}


class Cell(tuple):
    """Immutable cell of ``Q^n``; a tuple of entries in ``{0, 1, 2}``.

    Ordering and hashing are those of the underlying tuple, which coincides
    with ``cell_id`` order for cells of equal length.
    """

    __slots__ = ()

    def __new__(cls, entries):
        entries = tuple(int(e) for e in entries)
        for e in entries:
            if e not in (ZERO, ONE, STAR):
                raise InvalidCharacter(f"cell entry {e!r} not in {{0, 1, 2}}")
        return super().__new__(cls, entries)

    @property
    def n(self):
        return len(self)

    @property
    def dim(self):
        return self.count(STAR)

    @property
    def stars(self):
        """Indices (0-based) of the free coordinates."""
        return tuple(i for i, e in enumerate(self) if e == STAR)

    def __str__(self):
        return "".join(_CHARS[e] for e in self)

    def __repr__(self):
        return f"Cell('{self}')"


def parse_cell(text, n=None):
    """Parse a star-notation word such as ``"*010"``.

    >>> parse_cell("*010", 4).dim
    1
    """
    text = text.strip()
    if n is not None and len(text) != n:
        raise WrongLength(f"{text!r} has length {len(text)}, expected {n}")
    bad = [c for c in text if c not in _VALUES]
    if bad:
        raise InvalidCharacter(f"{text!r} contains {bad[0]!r}; allowed characters are '0', '1', '*'")
    if not text:
        raise WrongLength("empty cell string")
    return Cell(_VALUES[c] for c in text)


def format_cell(cell):
    return str(cell)


def parse_face_list(text, n=None):
    """Parse a comma separated list of cells, e.g. ``"**11,*01*,00**"``."""
    return [parse_cell(tok, n) for tok in text.split(",") if tok.strip()]


def dim(cell):
    return cell.count(STAR)


def cell_id(cell):
    idx = 0
    for e in cell:
        idx = 3 * idx + e
    return idx


def cell_from_id(index, n):
    if not 0 <= index < 3**n:
        raise ValueError(f"cell id {index} out of range for n={n}")
    entries = []
    for _ in range(n):
        index, r = divmod(index, 3)
        entries.append(r)
    return Cell(reversed(entries))


def _check_n(n):
    if not 1 <= n <= MAX_N:
        raise InvalidDimension(f"n={n} outside supported range 1..{MAX_N}")


@lru_cache(maxsize=None)
def _all_cells(n):
    return tuple(Cell(c) for c in product((ZERO, ONE, STAR), repeat=n))


def enumerate_cells(n, k=None):
    """All cells of ``Q^n`` (or only those of dimension ``k``) in ascending id order."""
    _check_n(n)
    cells = _all_cells(n)
    if k is None:
        return list(cells)
    if not 0 <= k <= n:
        raise InvalidDimension(f"k={k} outside 0..{n}")
    return [c for c in cells if c.dim == k]


def _same_n(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"cells of length {len(a)} and {len(b)}")


def is_subcell(a, b):
    """True iff ``a`` lies in the closure of ``b``."""
    _same_n(a, b)
    return all(y == STAR or x == y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _boundary(cell, k):
    stars = cell.stars
    out = []
    # fix every star outside a kept k-subset of stars; sorted result is id order
    for keep in combinations(stars, k):
        fixed = [i for i in stars if i not in keep]
        for bits in product((ZERO, ONE), repeat=len(fixed)):
            entries = list(cell)
            for i, b in zip(fixed, bits):
                entries[i] = b
            out.append(Cell(entries))
    return tuple(sorted(out))


def boundary_cells(cell, k):
    """All ``k``-dimensional subcells of ``cell``."""
    if not 0 <= k <= cell.dim:
        raise InvalidDimension(f"k={k} outside 0..{cell.dim}")
    return list(_boundary(Cell(cell), k))


@lru_cache(maxsize=None)
def _cofaces(cell, k):
    fixed = [i for i, e in enumerate(cell) if e != STAR]
    out = []
    for freed in combinations(fixed, k - cell.dim):
        entries = list(cell)
        for i in freed:
            entries[i] = STAR
        out.append(Cell(entries))
    return tuple(sorted(out))


def cofaces(cell, k):
    """All ``k``-dimensional cells of ``Q^n`` having ``cell`` as a subcell."""
    if not cell.dim <= k <= len(cell):
        raise InvalidDimension(f"k={k} outside {cell.dim}..{len(cell)}")
    return list(_cofaces(Cell(cell), k))


def face_vertex_cycle(face):
    """Corners of a square in the cyclic order (0,0), (1,0), (1,1), (0,1).

    The first free axis is the lower-indexed star.
    """
    face = Cell(face)
    if face.dim != 2:
        raise NotAFace(f"{face} has dimension {face.dim}, expected 2")
    i, j = face.stars
    cycle = []
    for a, b in ((0, 0), (1, 0), (1, 1), (0, 1)):
        entries = list(face)
        entries[i], entries[j] = a, b
        cycle.append(Cell(entries))
    return cycle
