import pytest

from canon31.disk import (
    DiskError,
    TriangulatedDisk,
    is_internally_4_connected,
    is_triangulated_disk,
    remove_outer_set,
    remove_top_vertex,
)
from canon31.generator import double_wheel, random_4ct, random_triangulation
from canon31.graph_core import is_k_connected, triangles
from graphs import A, B, C, D, E, F, brute_triangles, cycle, k4, octahedron, peel_disks, square_with_chord


def oct_disk() -> TriangulatedDisk:
    return remove_top_vertex(octahedron())


def k4_disk() -> TriangulatedDisk:
    return TriangulatedDisk.from_embedding(k4())


def test_triangulated_disk_predicate():
    assert is_triangulated_disk(cycle(3))
    assert is_triangulated_disk(square_with_chord(True))
    assert not is_triangulated_disk(square_with_chord(False))
    assert is_triangulated_disk(oct_disk().embedding)


def test_octahedron_minus_top_vertex():
    d = oct_disk()
    assert d.outer == (A, D, F, B)
    assert d.interior() == [E]
    assert is_internally_4_connected(d)


def test_internal_4_connectivity_examples():
    assert is_internally_4_connected(TriangulatedDisk.from_embedding(octahedron().with_outer([A, B, C])))
    assert not is_internally_4_connected(TriangulatedDisk.from_embedding(square_with_chord(True)))
    assert is_internally_4_connected(TriangulatedDisk.from_embedding(cycle(3)))
    # K4 as a disk: the outer triangle and every inner triangle is a face
    assert is_internally_4_connected(k4_disk())


def test_disk_from_embedding_round_trip():
    d = oct_disk()
    assert TriangulatedDisk.from_embedding(d.embedding) == d


def test_remove_fan_from_octahedron_disk():
    d = remove_outer_set(oct_disk(), {D, F})
    assert d.outer == (A, E, B)
    assert sorted(d.rotation) == [A, B, E]
    assert is_internally_4_connected(d)


def test_remove_degree_3_vertex_of_4_vertex_disk():
    d = k4_disk()  # outer 0, 2, 1 clockwise; centre 3
    assert d.outer == (0, 2, 1)
    out = remove_outer_set(d, {2})
    assert out.outer == (0, 3, 1)
    assert out.n == 3


@pytest.mark.parametrize("bad", [{A}, {B}, {E}, set()])
def test_remove_outer_set_contract(bad):
    with pytest.raises(DiskError):
        remove_outer_set(oct_disk(), bad)


def test_removal_that_pinches_the_boundary_is_rejected():
    # two non-adjacent rim vertices: the south apex would appear twice on the boundary
    g = double_wheel(6)
    d = remove_top_vertex(g)
    inner = d.outer[1:-1]
    with pytest.raises(DiskError):
        remove_outer_set(d, {inner[0], inner[2]})


def test_every_3_cycle_is_checked_against_faces():
    for _, d in peel_disks(8, 6, 20):
        assert triangles(d.adjacency) == brute_triangles(d.adjacency)


def test_internally_4_connected_implies_3_connected():
    seen = 0
    for _, d in peel_disks(30, 6, 14):
        if d.n >= 4 and d.n <= 10 and is_internally_4_connected(d):
            assert is_k_connected(d.embedding, 3)
            seen += 1
    assert seen > 20


def test_chords_detected_on_general_disks():
    # disks cut from triangulations with separating triangles usually fail
    flagged = 0
    for seed in range(30):
        g = random_triangulation(9, seed)
        d = remove_top_vertex(g)
        if not is_internally_4_connected(d):
            flagged += 1
    assert flagged > 0
    assert is_internally_4_connected(remove_top_vertex(random_4ct(9, 1)))
