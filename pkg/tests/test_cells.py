from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypersurf.cells import (
    Cell,
    boundary_cells,
    cell_from_id,
    cell_id,
    cofaces,
    dim,
    enumerate_cells,
    face_vertex_cycle,
    format_cell,
    is_subcell,
    parse_cell,
    parse_face_list,
)
from hypersurf.errors import DimensionMismatch, InvalidCharacter, InvalidDimension, NotAFace, WrongLength

ALL4 = ["".join(w) for w in product("01*", repeat=4)]


def hamming(a, b):
    return sum(x != y for x, y in zip(a, b))


def test_parse_edge():
    c = parse_cell("*010", 4)
    assert c == Cell((2, 0, 1, 0))
    assert c.stars == (0,)
    assert dim(c) == 1


def test_parse_origin_vertex():
    c = parse_cell("0000", 4)
    assert dim(c) == 0 and set(c) == {0}


def test_parse_errors():
    with pytest.raises(InvalidCharacter):
        parse_cell("01a*", 4)
    with pytest.raises(WrongLength):
        parse_cell("01*", 4)


@pytest.mark.parametrize("text, d", [("*010", 1), ("****", 4), ("**11", 2), ("0000", 0)])
def test_dim(text, d):
    assert dim(parse_cell(text)) == d


def test_roundtrip_all_cells():
    for text in ALL4:
        assert format_cell(parse_cell(text, 4)) == text


def test_cell_id_bijective():
    ids = [cell_id(parse_cell(t)) for t in ALL4]
    assert sorted(ids) == list(range(81))
    for t in ALL4:
        assert cell_from_id(cell_id(parse_cell(t)), 4) == parse_cell(t)
    assert cell_id(parse_cell("0000")) == 0
    assert cell_id(parse_cell("****")) == 80
    assert cell_id(parse_cell("1000")) == 27


def test_enumerate_counts():
    assert len(enumerate_cells(4)) == 81
    assert len(enumerate_cells(4, 2)) == 24
    assert len(enumerate_cells(4, 0)) == 16
    # brute force oracle over the words
    brute = sum(1 for t in ALL4 if t.count("*") == 1)
    assert brute == 32
    assert len(enumerate_cells(4, 1)) == brute


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_3n(n):
    assert len(enumerate_cells(n)) == 3**n


def test_enumerate_sorted_by_id():
    for k in range(5):
        ids = [cell_id(c) for c in enumerate_cells(4, k)]
        assert ids == sorted(ids)


def test_enumerate_bad_k():
    with pytest.raises(InvalidDimension):
        enumerate_cells(4, 5)
    with pytest.raises(InvalidDimension):
        enumerate_cells(4, -1)


def test_is_subcell():
    assert is_subcell(parse_cell("0011"), parse_cell("**11"))
    assert is_subcell(parse_cell("**11"), parse_cell("**11"))
    assert not is_subcell(parse_cell("*011"), parse_cell("0***"))
    with pytest.raises(DimensionMismatch):
        is_subcell(parse_cell("001"), parse_cell("**11"))


def test_boundary_of_face():
    f = parse_cell("**11")
    assert {str(e) for e in boundary_cells(f, 1)} == {"0*11", "1*11", "*011", "*111"}
    assert {str(v) for v in boundary_cells(f, 0)} == {"0011", "1011", "0111", "1111"}
    assert boundary_cells(parse_cell("0000"), 0) == [parse_cell("0000")]
    with pytest.raises(InvalidDimension):
        boundary_cells(f, 3)


def test_boundary_matches_subcell_scan():
    for c in enumerate_cells(4):
        for k in range(c.dim + 1):
            scan = [d for d in enumerate_cells(4, k) if is_subcell(d, c)]
            assert boundary_cells(c, k) == scan


def test_cofaces_examples():
    assert {str(f) for f in cofaces(parse_cell("*000"), 2)} == {"**00", "*0*0", "*00*"}
    assert len(cofaces(parse_cell("0000"), 2)) == 6
    assert cofaces(parse_cell("**11"), 2) == [parse_cell("**11")]
    with pytest.raises(InvalidDimension):
        cofaces(parse_cell("**11"), 1)


def test_cofaces_match_scan():
    faces = enumerate_cells(4, 2)
    for c in enumerate_cells(4):
        if c.dim <= 2:
            assert cofaces(c, 2) == [f for f in faces if is_subcell(c, f)]


def test_incidence_degrees():
    assert all(len(cofaces(e, 2)) == 3 for e in enumerate_cells(4, 1))
    assert all(len(cofaces(v, 2)) == 6 for v in enumerate_cells(4, 0))


def test_face_boundary_invariants():
    for f in enumerate_cells(4, 2):
        edges = boundary_cells(f, 1)
        assert len(edges) == 4 and len(boundary_cells(f, 0)) == 4
        assert all(is_subcell(e, f) for e in edges)


def test_face_vertex_cycle_examples():
    assert [str(v) for v in face_vertex_cycle(parse_cell("**00"))] == ["0000", "1000", "1100", "0100"]
    assert [str(v) for v in face_vertex_cycle(parse_cell("*0*0"))] == ["0000", "1000", "1010", "0010"]
    with pytest.raises(NotAFace):
        face_vertex_cycle(parse_cell("*000"))


def test_face_vertex_cycle_is_closed_4_cycle():
    for f in enumerate_cells(4, 2):
        cyc = face_vertex_cycle(f)
        assert len(set(cyc)) == 4
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert hamming(a, b) == 1
            assert is_subcell(a, f)


def test_face_list():
    assert [str(c) for c in parse_face_list("**11,*01*,00**")] == ["**11", "*01*", "00**"]


@given(st.lists(st.sampled_from("01*"), min_size=1, max_size=8).map("".join))
def test_roundtrip_property(text):
    c = parse_cell(text)
    assert str(c) == text
    assert cell_from_id(cell_id(c), len(text)) == c
