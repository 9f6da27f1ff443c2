from fractions import Fraction

import pytest

from hamgraphs import (DecoratedGraph, Edge, PolygonError, Vertex,
                       affine_normal_form, density, graph_to_polygon,
                       is_isomorphic, minimal_graph,
                       polygon_affine_equivalent, polygon_chop,
                       polygon_from_json, polygon_pushforward,
                       polygon_to_fan, polygon_to_graph, total_mass,
                       validate_delzant, validate_fan)
from hamgraphs.toric_geometry import (fan_blowdown, fan_blowdown_sites,
                                      minimal_fan_type)
from conftest import (CHOPPED_SHEARED, CHOPPED_SQUARE, P, PENTAGON,
                      PENTAGON_CHOPS, S2S2_POLYGONS, SHEARED, SQUARE_6x5,
                      TENT_POLYGONS, chopped_square_graph, s2s2_graph,
                      tent_graph, trapezoid, triangle)

F = Fraction


def test_validate_examples():
    assert validate_delzant(P((0, 0), (1, 0), (1, 1), (0, 1))) == []
    assert validate_delzant(triangle(3)) == []
    assert validate_delzant(triangle(F(7, 2))) == []
    assert validate_delzant(P((0, 0), (2, 1), (0, 1)))


def test_orientation_matters():
    assert validate_delzant(P((0, 0), (0, 1), (1, 1), (1, 0)))


def test_polygon_to_graph_unit_square():
    g = polygon_to_graph(P((0, 0), (1, 0), (1, 1), (0, 1)))
    assert len(g.surfaces()) == 2 and not g.edges
    areas = sorted(v.area for v in g.surfaces())
    assert areas == [1, 1]


def test_polygon_to_graph_s2s2():
    g = polygon_to_graph(S2S2_POLYGONS[0])
    expected = DecoratedGraph(
        [Vertex("lo", "point", F(0)), Vertex("a", "point", F(2)),
         Vertex("b", "point", F(4)), Vertex("hi", "point", F(6))],
        [Edge("lo", "b", 2), Edge("a", "hi", 2)])
    assert is_isomorphic(g, expected)
    assert is_isomorphic(g, s2s2_graph(), "shift")


def test_polygon_to_graph_hirzebruch_trapezoid():
    g = polygon_to_graph(trapezoid(1, 1, 1))
    assert not g.edges
    assert sorted(v.area for v in g.surfaces()) == [1, 2]


def test_graph_to_polygon_tent():
    Q = graph_to_polygon(tent_graph())
    assert polygon_affine_equivalent(Q, TENT_POLYGONS[0])


def test_graph_to_polygon_cp2():
    g = minimal_graph("cp2", 1, 1)
    Q = graph_to_polygon(g)
    assert validate_delzant(Q) == []
    assert len(Q.vertices) == 3
    assert total_mass(polygon_pushforward(Q)) == F(1, 2)


def test_width_matches_density_at_breakpoints():
    for g in (tent_graph(), s2s2_graph(), chopped_square_graph(),
              minimal_graph("cp2", 2, 3), minimal_graph("hirzebruch",
                                                        "right", 2)):
        Q = graph_to_polygon(g)
        assert polygon_pushforward(Q) == density(g)


def test_affine_equivalence():
    sheared = P(*[(x + y, y) for x, y in TENT_POLYGONS[0].vertices])
    assert polygon_affine_equivalent(TENT_POLYGONS[0], sheared)
    for Q1 in S2S2_POLYGONS:
        for Q2 in S2S2_POLYGONS:
            assert polygon_affine_equivalent(Q1, Q2)
    # the two ruled parents are inequivalent, yet chopping either one
    # produces the same pentagon (up to translation)
    assert not polygon_affine_equivalent(SQUARE_6x5, SHEARED)
    assert polygon_affine_equivalent(CHOPPED_SQUARE, CHOPPED_SHEARED)
    assert not polygon_affine_equivalent(TENT_POLYGONS[0], TENT_POLYGONS[1])


def test_normal_form_is_canonical():
    Q = affine_normal_form(S2S2_POLYGONS[1])
    assert affine_normal_form(Q) == Q


def test_chop_square_corner():
    Q = polygon_chop(P((0, 0), (1, 0), (1, 1), (0, 1)), 2, F(1, 2))
    assert len(Q.vertices) == 5
    assert validate_delzant(Q) == []


def test_chop_reproduces_reference_polygons():
    idx = SQUARE_6x5.vertices.index((F(0), F(5)))
    Q = polygon_chop(SQUARE_6x5, idx, 2)
    assert sorted(Q.vertices) == sorted(CHOPPED_SQUARE.vertices)
    idx = SHEARED.vertices.index((F(0), F(0)))
    Q = polygon_chop(SHEARED, idx, 3)
    assert sorted(Q.vertices) == sorted(CHOPPED_SHEARED.vertices)
    assert sorted(polygon_chop(PENTAGON, 0, 4).vertices) == \
        sorted(PENTAGON_CHOPS[0].vertices)
    assert sorted(polygon_chop(PENTAGON, 1, 4).vertices) == \
        sorted(PENTAGON_CHOPS[1].vertices)


def test_chop_too_large_rejected():
    with pytest.raises(PolygonError):
        polygon_chop(P((0, 0), (1, 0), (1, 1), (0, 1)), 0, 1)
    with pytest.raises(PolygonError):
        polygon_chop(P((0, 0), (1, 0), (1, 1), (0, 1)), 7, F(1, 2))


def test_chop_commutes_with_blowup(corpus_polygons):
    """Chopping a corner then reading the graph agrees with blowing up
    the graph vertex at that corner's height."""
    from hamgraphs import blowup
    cases = 0
    for Q in corpus_polygons:
        heights = [y for _, y in Q.vertices]
        for i, (x, y) in enumerate(Q.vertices):
            if heights.count(y) != 1:
                continue
            g = polygon_to_graph(Q)
            target = [v.id for v in g.vertices.values()
                      if v.kind == "point" and v.moment == y]
            if len(target) != 1:
                continue
            try:
                chopped = polygon_chop(Q, i, F(1, 5))
            except PolygonError:
                continue
            blown = blowup(g, target[0], F(1, 5))
            assert is_isomorphic(polygon_to_graph(chopped), blown)
            cases += 1
    assert cases >= 50


def test_round_trip_corpus(corpus_polygons):
    skipped = 0
    for Q in corpus_polygons:
        g = polygon_to_graph(Q)
        try:
            back = graph_to_polygon(g)
        except Exception:
            skipped += 1
            continue
        assert polygon_pushforward(back) == density(g)
        assert is_isomorphic(polygon_to_graph(back), g)
    assert skipped == 0


def test_fans():
    assert minimal_fan_type([(0, 1), (-1, -1), (1, 0)]) == "cp2"
    fan = [(1, 0), (1, 1), (0, 1), (-1, -1)]
    assert validate_fan(fan) == []
    assert fan_blowdown_sites(fan) == [1]
    down = fan_blowdown(fan, 1)
    assert minimal_fan_type(down) == "cp2"
    for n in (0, 2, 3):
        fan = [(-1, n), (0, -1), (1, 0), (0, 1)]
        assert minimal_fan_type(fan) == "hirzebruch:%d" % n
    # n = 1 is the blown-up projective plane, so it is not minimal
    assert minimal_fan_type([(-1, 1), (0, -1), (1, 0), (0, 1)]) == \
        "not-minimal"
    with pytest.raises(PolygonError):
        fan_blowdown([(0, 1), (-1, -1), (1, 0)], 0)


def test_polygon_to_fan():
    fan = polygon_to_fan(P((0, 0), (1, 0), (1, 1), (0, 1)))
    assert validate_fan(fan) == []
    assert set(fan) == {(0, 1), (-1, 0), (0, -1), (1, 0)}


def test_every_big_fan_has_a_blowdown_site(corpus_polygons):
    for Q in corpus_polygons:
        fan = polygon_to_fan(Q)
        if len(fan) > 4:
            assert fan_blowdown_sites(fan)


def test_polygon_json_round_trip():
    for Q in (TENT_POLYGONS[2], S2S2_POLYGONS[0], CHOPPED_SQUARE):
        assert polygon_from_json(Q.to_json()) == Q
