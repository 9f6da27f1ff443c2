from fractions import Fraction

import pytest

from hamgraphs import (GraphError, affine_normal_form, assign_labels,
                       canonical_form, classify_isolated, density,
                       enumerate_graphs, is_isomorphic, is_toric_extendable,
                       match_minimal_family, minimal_graph,
                       polygon_pushforward, validate_graph)
from hamgraphs.toric_geometry import DelzantPolygon
from conftest import (P, S2S2_POLYGONS, chopped_square_graph, s2s2_graph,
                      tent_graph, triangle)

F = Fraction


def test_cp2_graph_structure():
    g = minimal_graph("cp2", 1, 2)
    assert sorted(v.moment for v in g.vertices.values()) == [-2, 0, 1]
    assert sorted(e.k for e in g.edges) == [2, 3]
    assert validate_graph(g) == []


def test_cp2_rejects_bad_weights():
    with pytest.raises(GraphError):
        minimal_graph("cp2", 2, 4)
    with pytest.raises(GraphError):
        minimal_graph("cp2", 0, 1)


def test_ruled_graph_genus_one():
    g = minimal_graph("ruled", 1, 2, 3, 1, 0)
    lo, hi = g.min_vertex(), g.max_vertex()
    assert (lo.area, lo.genus) == (3, 1)
    assert (hi.area, hi.genus) == (5, 1)
    assert not g.edges


def test_ruled_rejects_nonpositive_top_area():
    with pytest.raises(GraphError):
        minimal_graph("ruled", 0, -3, 1, 1, 0)


def test_cp2_surface_graph():
    g = minimal_graph("cp2-surface", 0, 2)
    assert g.min_vertex().kind == "surface"
    assert g.min_vertex().area == 2
    assert g.max_vertex().moment == 2


def test_flipped_variant():
    g = minimal_graph("cp2-surface", 0, 1, flipped=True)
    assert g.max_vertex().kind == "surface"


def test_match_minimal_families():
    assert match_minimal_family(minimal_graph("cp2", 2, 3)) == "cp2"
    assert match_minimal_family(minimal_graph("cp2-surface")) == "cp2-surface"
    assert match_minimal_family(
        minimal_graph("hirzebruch", "right", 2, r=2, s=1)) == "hirzebruch"
    assert match_minimal_family(minimal_graph("ruled", 1, 1, 1, 1)) == "ruled"
    assert match_minimal_family(s2s2_graph()) is not None
    assert match_minimal_family(chopped_square_graph()) is None
    assert match_minimal_family(tent_graph()) is not None


def test_is_toric_extendable():
    assert is_toric_extendable(tent_graph())
    assert is_toric_extendable(s2s2_graph())
    assert not is_toric_extendable(minimal_graph("ruled", 1, 0, 1, 1))


def test_toric_extendable_on_corpus(enumerated_small):
    for rec in enumerated_small:
        if all(v.kind == "point" for v in rec.graph.vertices.values()):
            assert is_toric_extendable(rec.graph)


def test_classify_isolated_cp2():
    # heights are part of the data, so the normal form keeps the moment
    # levels -1, 0, 1 of the graph
    g = minimal_graph("cp2", 1, 1)
    Q = classify_isolated(g)
    assert Q == affine_normal_form(P((0, 0), (1, -1), (0, 1)))
    assert polygon_pushforward(Q) == density(g)


def test_classify_isolated_s2s2():
    Q = classify_isolated(s2s2_graph())
    shifted = DelzantPolygon([(x, y - 3)
                              for x, y in S2S2_POLYGONS[0].vertices])
    assert Q == affine_normal_form(shifted)


def test_classify_isolated_rejects_surfaces():
    with pytest.raises(GraphError):
        classify_isolated(chopped_square_graph())


def test_enumerate_depth_zero():
    out = enumerate_graphs([("r", minimal_graph("ruled", 0, 0, 1, 1))], 0)
    assert len(out) == 1 and out[0].depth == 0


def test_enumerate_cp2_depth_one():
    out = enumerate_graphs([("c", minimal_graph("cp2", 1, 1))], 1)
    by_depth = [rec for rec in out if rec.depth == 1]
    # three isolated fixed points, three distinct children under the
    # half-supremum size rule
    assert len(by_depth) == 3
    for rec in out:
        assert validate_graph(rec.graph) == []


def test_enumerate_is_deterministic():
    seeds = [("c", minimal_graph("cp2", 1, 2)),
             ("r", minimal_graph("ruled", 0, 1, 1, 1))]
    a = enumerate_graphs(seeds, 2)
    b = enumerate_graphs(seeds, 2)
    assert [canonical_form(r.graph).digest for r in a] == \
        [canonical_form(r.graph).digest for r in b]


def test_enumerate_dedups_isomorphic_children(enumerated_small):
    digests = [canonical_form(rec.graph).digest for rec in enumerated_small]
    assert len(digests) == len(set(digests))


CHOPPED_SKELETON = {
    "vertices": [{"id": "lo", "kind": "surface"},
                 {"id": "p", "kind": "point"},
                 {"id": "hi", "kind": "surface"}],
    "edges": [],
}
CHOPPED_MOMENTS = {"lo": 0, "p": 3, "hi": 5}


def test_assign_labels_chopped_square():
    g = assign_labels(CHOPPED_SKELETON, CHOPPED_MOMENTS, 6, 4, (0, -1))
    assert is_isomorphic(g, chopped_square_graph())


def test_assign_labels_rejects_wrong_e_choice():
    with pytest.raises(GraphError):
        assign_labels(CHOPPED_SKELETON, CHOPPED_MOMENTS, 6, 4, (-1, 0))
    with pytest.raises(GraphError):
        assign_labels(CHOPPED_SKELETON, CHOPPED_MOMENTS, 6, 4, (0, 0))


def test_assign_labels_trivial_ruled():
    skel = {"vertices": [{"id": "lo", "kind": "surface"},
                         {"id": "hi", "kind": "surface"}]}
    g = assign_labels(skel, {"lo": 0, "hi": 1}, 3, 3, (0, 0))
    assert is_isomorphic(g, minimal_graph("ruled", 0, 0, 3, 1))
    with pytest.raises(GraphError):
        assign_labels(skel, {"lo": 0, "hi": 1}, 3, 2, (0, 0))
